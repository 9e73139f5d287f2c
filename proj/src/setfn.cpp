#include "mcda/setfn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace mcda {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::EmptyGenerator: return "EmptyGenerator";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::UnknownLevel: return "UnknownLevel";
    case ErrorCode::DegenerateEndpoints: return "DegenerateEndpoints";
    case ErrorCode::MissingRatio: return "MissingRatio";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotZeroOne: return "NotZeroOne";
    case ErrorCode::IncompleteAct: return "IncompleteAct";
    case ErrorCode::SameCriterion: return "SameCriterion";
  }
  return "Unknown";
}

int Coalition::size() const noexcept { return std::popcount(bits); }

CriteriaSet::CriteriaSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty() || ids_.size() > kMaxCriteria) {
    throw Error(ErrorCode::InvalidInput,
                "criteria count must be in 1.." + std::to_string(kMaxCriteria));
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw Error(ErrorCode::InvalidInput, "empty criterion id");
    if (id.find(',') != std::string::npos) {
      throw Error(ErrorCode::InvalidInput, "criterion id '" + id + "' contains ','");
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate criterion id '" + id + "'");
    }
  }
}

std::size_t CriteriaSet::index_of(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) {
    throw Error(ErrorCode::InvalidInput, "unknown criterion '" + std::string(id) + "'");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

std::string CriteriaSet::key(Coalition c) const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!c.contains(i)) continue;
    if (!out.empty()) out += ',';
    out += ids_[i];
  }
  return out;
}

Coalition CriteriaSet::parse_key(std::string_view key) const {
  Coalition c;
  if (key.empty()) return c;
  std::size_t start = 0;
  while (true) {
    auto comma = key.find(',', start);
    auto part = key.substr(start, comma == std::string_view::npos ? key.npos : comma - start);
    auto i = index_of(part);
    if (c.contains(i)) {
      throw Error(ErrorCode::InvalidInput, "criterion repeated in coalition key '" +
                                               std::string(key) + "'");
    }
    c = c.with(i);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return c;
}

Game::Game(std::size_t n) {
  if (n > kMaxCriteria) throw Error(ErrorCode::TooLarge, "at most 16 criteria");
  n_ = n;
  values_.assign(std::size_t{1} << n, 0.0);
}

Game::Game(std::size_t n, std::vector<double> values) : Game(n) {
  if (values.size() != values_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(values_.size()) + " values, got " +
                    std::to_string(values.size()));
  }
  if (values[0] != 0.0) {
    throw Error(ErrorCode::NotNormalized, "game value at the empty coalition must be 0");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "non-finite game value");
  }
  values_ = std::move(values);
}

double Game::at(Coalition c) const {
  if (c.index() >= values_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coalition outside the criteria set");
  }
  return values_[c.index()];
}

void Game::set(Coalition c, double value) {
  if (c.is_empty()) throw Error(ErrorCode::NotNormalized, "cannot set the empty coalition");
  if (c.index() >= values_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coalition outside the criteria set");
  }
  values_[c.index()] = value;
}

NotMonotoneError::NotMonotoneError(std::vector<CoveringViolation> pairs)
    : Error(ErrorCode::NotMonotone,
            std::to_string(pairs.size()) + " covering pair(s) decrease"),
      pairs_(std::move(pairs)) {}

std::vector<CoveringViolation> monotonicity_violations(const Game& g, double tolerance) {
  std::vector<CoveringViolation> out;
  const auto size = static_cast<std::uint32_t>(g.table_size());
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::size_t i = 0; i < g.n(); ++i) {
      Coalition sub{a};
      if (sub.contains(i)) continue;
      Coalition sup = sub.with(i);
      if (g[sub] - g[sup] > tolerance) out.push_back({sub, sup, g[sub], g[sup]});
    }
  }
  return out;
}

Capacity make_capacity(std::size_t n, std::span<const double> values, double tolerance) {
  if (n < 1 || n > kMaxCriteria) throw Error(ErrorCode::InvalidInput, "n must be in 1..16");
  const std::size_t size = std::size_t{1} << n;
  if (values.size() != size) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(size) + " values, got " +
                    std::to_string(values.size()));
  }
  std::vector<double> v(values.begin(), values.end());
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "non-finite capacity value");
  }
  if (std::abs(v.front()) > tolerance || std::abs(v.back() - 1.0) > tolerance) {
    throw Error(ErrorCode::NotNormalized, "mu(empty) must be 0 and mu(N) must be 1");
  }
  v.front() = 0.0;
  v.back() = 1.0;
  Game g(n, std::move(v));
  auto bad = monotonicity_violations(g, tolerance);
  if (!bad.empty()) throw NotMonotoneError(std::move(bad));
  return Capacity(std::move(g));
}

MobiusRep mobius(const Game& g) {
  // In-place inverse zeta transform over the subset lattice.
  std::vector<double> m(g.values().begin(), g.values().end());
  for (std::size_t i = 0; i < g.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (s & bit) m[s] -= m[s ^ bit];
    }
  }
  return {g.n(), std::move(m)};
}

Game from_mobius(const MobiusRep& m) {
  if (m.coeffs.size() != (std::size_t{1} << m.n)) {
    throw Error(ErrorCode::DimensionMismatch, "Mobius table has the wrong length");
  }
  std::vector<double> g(m.coeffs);
  for (std::size_t i = 0; i < m.n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < g.size(); ++s) {
      if (s & bit) g[s] += g[s ^ bit];
    }
  }
  g[0] = 0.0;
  return Game(m.n, std::move(g));
}

Capacity unanimity(std::size_t n, Coalition generator) {
  if (generator.is_empty()) {
    throw Error(ErrorCode::EmptyGenerator, "unanimity game needs a non-empty generator");
  }
  const std::size_t size = std::size_t{1} << n;
  if (generator.index() >= size) {
    throw Error(ErrorCode::DimensionMismatch, "generator outside the criteria set");
  }
  std::vector<double> v(size, 0.0);
  for (std::uint32_t a = 0; a < size; ++a) {
    if (generator.subset_of(Coalition{a})) v[a] = 1.0;
  }
  return make_capacity(n, v);
}

Game linear_combine(std::span<const std::pair<double, Game>> terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidInput, "no terms to combine");
  const std::size_t n = terms.front().second.n();
  std::vector<double> out(std::size_t{1} << n, 0.0);
  for (const auto& [coef, g] : terms) {
    if (g.n() != n) throw Error(ErrorCode::DimensionMismatch, "games differ in n");
    for (std::size_t s = 1; s < out.size(); ++s) out[s] += coef * g.values()[s];
  }
  return Game(n, std::move(out));
}

std::vector<Capacity> enumerate_zero_one_capacities(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  if (n > 4) throw Error(ErrorCode::TooLarge, "0-1 capacity enumeration is limited to n <= 4");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t free = size - 2;
  std::vector<Capacity> out;
  std::vector<double> v(size, 0.0);
  v.back() = 1.0;
  // Candidate bit (free - 1 - k) drives coalition k + 1, so counting upward
  // walks the value vectors in lexicographic order.
  for (std::uint64_t candidate = 0; candidate < (std::uint64_t{1} << free); ++candidate) {
    for (std::size_t k = 0; k < free; ++k) {
      v[k + 1] = static_cast<double>((candidate >> (free - 1 - k)) & 1u);
    }
    Game g(n, v);
    if (monotonicity_violations(g).empty()) out.push_back(make_capacity(g));
  }
  return out;
}

Capacity additive_from_weights(std::span<const double> weights) {
  if (weights.empty() || weights.size() > kMaxCriteria) {
    throw Error(ErrorCode::BadWeights, "need 1..16 weights");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadWeights, "negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::BadWeights, "weights must sum to 1");
  const std::size_t n = weights.size();
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::size_t s = 1; s < v.size(); ++s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (Coalition{static_cast<std::uint32_t>(s)}.contains(i)) sum += weights[i];
    }
    v[s] = sum;
  }
  v.back() = 1.0;
  return make_capacity(n, v, 1e-12);
}

Capacity dual(const Capacity& mu) {
  const auto full = Coalition::full(mu.n());
  std::vector<double> v(mu.game().table_size());
  for (std::uint32_t a = 0; a < v.size(); ++a) {
    v[a] = 1.0 - mu[Coalition{full.bits & ~a}];
  }
  return make_capacity(mu.n(), v);
}

}  // namespace mcda
