#include "mcda/identify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "mcda/aggregate.hpp"

namespace mcda {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Problem {
  std::size_t n;
  std::size_t vars;  // 2^n - 2; variable j is coalition j + 1
  MatrixXd design;   // rows: Choquet coefficients of the interior coalitions
  VectorXd target;   // score minus the mu(N) = 1 contribution
  MatrixXd g;        // constraint rows: g z >= h
  VectorXd h;
};

Problem build_problem(std::size_t n, std::span<const ScoredAct> data) {
  Problem p;
  p.n = n;
  const std::size_t size = std::size_t{1} << n;
  p.vars = size - 2;
  p.design.resize(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(p.vars));
  p.target.resize(static_cast<Eigen::Index>(data.size()));
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto c = choquet_coefficients(n, data[r].profile);
    for (std::size_t j = 0; j < p.vars; ++j) p.design(r, j) = c[j + 1];
    p.target(r) = data[r].score - c[size - 1];
  }

  std::vector<std::pair<VectorXd, double>> rows;
  for (std::uint32_t s = 0; s < size; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Coalition a{s};
      if (a.contains(i)) continue;
      const Coalition b = a.with(i);
      VectorXd row = VectorXd::Zero(static_cast<Eigen::Index>(p.vars));
      double rhs = 0.0;
      // value(b) - value(a) >= 0 with the fixed endpoints moved to the right.
      if (b.index() == size - 1) rhs -= 1.0;
      else row(b.index() - 1) += 1.0;
      if (!a.is_empty()) row(a.index() - 1) -= 1.0;
      if (row.isZero()) continue;
      rows.emplace_back(std::move(row), rhs);
    }
  }
  p.g.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(p.vars));
  p.h.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    p.g.row(static_cast<Eigen::Index>(k)) = rows[k].first.transpose();
    p.h(static_cast<Eigen::Index>(k)) = rows[k].second;
  }
  return p;
}

VectorXd interior_values(const Game& g) {
  VectorXd z(static_cast<Eigen::Index>(g.table_size() - 2));
  for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = g.values()[static_cast<std::size_t>(j) + 1];
  return z;
}

std::vector<double> full_values(std::size_t n, const VectorXd& z) {
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (Eigen::Index j = 0; j < z.size(); ++j) v[static_cast<std::size_t>(j) + 1] = z(j);
  v.back() = 1.0;
  return v;
}

// Orthonormal basis of the null space of the working-set rows.
MatrixXd null_space(const MatrixXd& rows, Eigen::Index vars) {
  if (rows.rows() == 0) return MatrixXd::Identity(vars, vars);
  Eigen::HouseholderQR<MatrixXd> qr(rows.transpose());
  const MatrixXd q = qr.householderQ() * MatrixXd::Identity(vars, vars);
  return q.rightCols(vars - rows.rows());
}

bool independent_of(const MatrixXd& rows, const VectorXd& candidate) {
  if (rows.rows() == 0) return candidate.norm() > 0.0;
  MatrixXd stacked(rows.rows() + 1, rows.cols());
  stacked << rows, candidate.transpose();
  Eigen::ColPivHouseholderQR<MatrixXd> qr(stacked.transpose());
  qr.setThreshold(1e-10);
  return qr.rank() == stacked.rows();
}

MatrixXd working_rows(const Problem& p, const std::vector<Eigen::Index>& working) {
  MatrixXd rows(static_cast<Eigen::Index>(working.size()), static_cast<Eigen::Index>(p.vars));
  for (std::size_t k = 0; k < working.size(); ++k) {
    rows.row(static_cast<Eigen::Index>(k)) = p.g.row(working[k]);
  }
  return rows;
}

struct SolveResult {
  VectorXd z;
  std::size_t iterations;
};

SolveResult active_set(const Problem& p, VectorXd z, const FitOptions& options) {
  const auto vars = static_cast<Eigen::Index>(p.vars);
  const MatrixXd hessian = 2.0 * p.design.transpose() * p.design;
  const VectorXd linear = -2.0 * p.design.transpose() * p.target;
  const double scale = std::max(1.0, hessian.cwiseAbs().maxCoeff());
  const double step_tol = options.tolerance * 1e3;
  const double mult_tol = options.tolerance * 1e3 * scale;
  constexpr double kActiveTol = 1e-12;

  std::vector<Eigen::Index> working;
  for (Eigen::Index k = 0; k < p.g.rows(); ++k) {
    const double slack = p.g.row(k).dot(z) - p.h(k);
    if (std::abs(slack) <= kActiveTol &&
        independent_of(working_rows(p, working), p.g.row(k).transpose())) {
      working.push_back(k);
    }
  }

  std::size_t iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    const MatrixXd rows = working_rows(p, working);
    const VectorXd grad = hessian * z + linear;
    VectorXd step = VectorXd::Zero(vars);
    const MatrixXd basis = null_space(rows, vars);
    if (basis.cols() > 0) {
      const MatrixXd reduced = basis.transpose() * hessian * basis;
      const VectorXd rhs = -(basis.transpose() * grad);
      Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(reduced);
      cod.setThreshold(1e-12);
      step = basis * cod.solve(rhs);
    }

    if (step.norm() <= step_tol * (1.0 + z.norm())) {
      if (working.empty()) break;
      const VectorXd lambda =
          rows.transpose().colPivHouseholderQr().solve(grad);
      Eigen::Index drop = -1;
      for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        if (lambda(k) < -mult_tol && (drop < 0 || working[static_cast<std::size_t>(k)] <
                                                      working[static_cast<std::size_t>(drop)])) {
          drop = k;
        }
      }
      if (drop < 0) break;
      working.erase(working.begin() + drop);
      continue;
    }

    double alpha = 1.0;
    Eigen::Index blocking = -1;
    for (Eigen::Index k = 0; k < p.g.rows(); ++k) {
      if (std::find(working.begin(), working.end(), k) != working.end()) continue;
      const double rate = p.g.row(k).dot(step);
      if (rate >= -1e-14) continue;
      const double slack = std::max(0.0, p.g.row(k).dot(z) - p.h(k));
      const double ratio = slack / -rate;
      if (ratio < alpha) {
        alpha = ratio;
        blocking = k;
      }
    }
    z += alpha * step;
    if (blocking >= 0) working.push_back(blocking);
  }
  return {std::move(z), iter};
}

}  // namespace

double fit_objective(const Game& g, std::span<const ScoredAct> data) {
  double total = 0.0;
  for (const auto& d : data) {
    const double r = choquet(g, d.profile) - d.score;
    total += r * r;
  }
  return total;
}

FitReport fit_capacity(std::size_t n, std::span<const ScoredAct> data, const FitOptions& options) {
  if (n < 1 || n > 6) throw Error(ErrorCode::TooLarge, "capacity identification supports 1 <= n <= 6");
  if (data.empty()) throw Error(ErrorCode::InvalidInput, "no scored acts to fit");
  for (const auto& d : data) {
    if (d.profile.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "profile length differs from the criteria count");
    }
    if (!std::isfinite(d.score)) throw Error(ErrorCode::InvalidInput, "non-finite score");
    for (double x : d.profile) {
      if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::OutOfRange, "profile entries must lie in [0,1]");
      }
    }
  }
  if (options.baseline && options.baseline->n() != n) {
    throw Error(ErrorCode::DimensionMismatch, "baseline capacity has the wrong criteria count");
  }

  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  weights.back() = 1.0 - (1.0 / static_cast<double>(n)) * static_cast<double>(n - 1);
  Capacity start = additive_from_weights(weights);
  double start_obj = fit_objective(start, data);
  if (options.baseline) {
    const double base_obj = fit_objective(*options.baseline, data);
    if (base_obj < start_obj) {
      start = *options.baseline;
      start_obj = base_obj;
    }
  }
  if (n == 1) return {start, start_obj, std::sqrt(start_obj / static_cast<double>(data.size())), 0.0, 0, start_obj};

  const Problem problem = build_problem(n, data);
  auto [z, iterations] = active_set(problem, interior_values(start), options);

  // The iterate is feasible up to rounding; report that slack, then restore
  // exact monotonicity by lifting each value to its covered subsets' maximum.
  std::vector<double> v = full_values(n, z);
  const Game raw(n, v);
  double max_violation = 0.0;
  for (const auto& bad : monotonicity_violations(raw)) {
    max_violation = std::max(max_violation, bad.subset_value - bad.superset_value);
  }
  for (std::uint32_t s = 1; s + 1 < v.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Coalition c{s};
      if (c.contains(i)) v[s] = std::max(v[s], v[c.without(i).bits]);
    }
    v[s] = std::min(v[s], 1.0);
  }
  Capacity fitted = make_capacity(n, v);
  double obj = fit_objective(fitted, data);
  if (obj > start_obj) {
    fitted = start;
    obj = start_obj;
  }
  return {fitted, obj, std::sqrt(obj / static_cast<double>(data.size())), max_violation,
          iterations, start_obj};
}

}  // namespace mcda
