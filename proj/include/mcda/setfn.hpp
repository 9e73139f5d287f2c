#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcda/error.hpp"

namespace mcda {

inline constexpr std::size_t kMaxCriteria = 16;

/// A subset of the criteria, criterion i <-> bit i.
struct Coalition {
  std::uint32_t bits = 0;

  static constexpr Coalition empty() noexcept { return {0}; }
  static constexpr Coalition full(std::size_t n) noexcept {
    return {static_cast<std::uint32_t>((std::uint32_t{1} << n) - 1)};
  }
  static constexpr Coalition single(std::size_t i) noexcept {
    return {std::uint32_t{1} << i};
  }

  constexpr bool contains(std::size_t i) const noexcept { return (bits >> i) & 1u; }
  constexpr Coalition with(std::size_t i) const noexcept { return {bits | (std::uint32_t{1} << i)}; }
  constexpr Coalition without(std::size_t i) const noexcept {
    return {bits & ~(std::uint32_t{1} << i)};
  }
  constexpr bool subset_of(Coalition other) const noexcept {
    return (bits & other.bits) == bits;
  }
  constexpr bool is_empty() const noexcept { return bits == 0; }
  int size() const noexcept;
  constexpr std::size_t index() const noexcept { return bits; }

  constexpr auto operator<=>(const Coalition&) const = default;
};

/// Ordered, distinct criterion identifiers. Identifiers may not contain ','
/// since coalitions are serialized as comma-joined identifier lists.
class CriteriaSet {
 public:
  explicit CriteriaSet(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::size_t index_of(std::string_view id) const;

  /// "" for the empty coalition, otherwise ids joined by ',' in criterion order.
  std::string key(Coalition c) const;
  Coalition parse_key(std::string_view key) const;

  friend bool operator==(const CriteriaSet&, const CriteriaSet&) = default;

 private:
  std::vector<std::string> ids_;
};

/// Signed set function vanishing on the empty coalition.
class Game {
 public:
  Game() = default;
  /// Zero game on n criteria.
  explicit Game(std::size_t n);
  Game(std::size_t n, std::vector<double> values);

  std::size_t n() const noexcept { return n_; }
  std::size_t table_size() const noexcept { return values_.size(); }
  double operator[](Coalition c) const { return values_[c.bits]; }
  double at(Coalition c) const;
  /// Sets a non-empty coalition's value.
  void set(Coalition c, double value);
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_{0.0};
};

/// A pair (A, A u {i}) with value(A) > value(A u {i}).
struct CoveringViolation {
  Coalition subset;
  Coalition superset;
  double subset_value;
  double superset_value;
};

class NotMonotoneError : public Error {
 public:
  explicit NotMonotoneError(std::vector<CoveringViolation> pairs);
  const std::vector<CoveringViolation>& pairs() const noexcept { return pairs_; }

 private:
  std::vector<CoveringViolation> pairs_;
};

/// Normalized monotone game (fuzzy measure).
class Capacity {
 public:
  const Game& game() const noexcept { return game_; }
  std::size_t n() const noexcept { return game_.n(); }
  double operator[](Coalition c) const { return game_[c]; }
  operator const Game&() const noexcept { return game_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  friend Capacity make_capacity(std::size_t, std::span<const double>, double);
  explicit Capacity(Game g) : game_(std::move(g)) {}
  Game game_;
};

struct MobiusRep {
  std::size_t n = 0;
  std::vector<double> coeffs;

  double operator[](Coalition c) const { return coeffs[c.bits]; }
};

/// All covering pairs (A, A u {i}) that decrease by more than `tolerance`.
std::vector<CoveringViolation> monotonicity_violations(const Game& g, double tolerance = 0.0);

/// Validates normalization and monotonicity. With tolerance 0 both endpoint
/// values must be exactly 0 and 1; a positive tolerance admits solver output
/// and snaps the endpoints to 0 and 1.
Capacity make_capacity(std::size_t n, std::span<const double> values, double tolerance = 0.0);
inline Capacity make_capacity(const Game& g, double tolerance = 0.0) {
  return make_capacity(g.n(), g.values(), tolerance);
}

MobiusRep mobius(const Game& g);
Game from_mobius(const MobiusRep& m);

/// u_B(A) = 1 iff B is a subset of A.
Capacity unanimity(std::size_t n, Coalition generator);

Game linear_combine(std::span<const std::pair<double, Game>> terms);

/// Every {0,1}-valued capacity on n <= 4 criteria, lexicographic by value vector.
std::vector<Capacity> enumerate_zero_one_capacities(std::size_t n);

Capacity additive_from_weights(std::span<const double> weights);

/// mu_bar(A) = 1 - mu(N \ A).
Capacity dual(const Capacity& mu);

}  // namespace mcda
