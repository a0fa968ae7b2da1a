#include "qwit/optimality.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "qwit/rng.hpp"

namespace qwit {

namespace {

constexpr double kShellLevel = 0.9 * kTangentTol;  // level set targeted by the harvest

PureState pure_of_angles(const std::vector<double>& flat) {
  ProductState ps;
  for (std::size_t k = 0; k + 1 < flat.size(); k += 2) ps.angles.emplace_back(flat[k], flat[k + 1]);
  return ps.to_pure();
}

// Re-expresses arbitrary real angle parameters in the canonical ranges
// (theta in [0, pi], alpha in [0, 2 pi)) without changing the state.
ProductState canonicalize(const std::vector<double>& flat) {
  ProductState out;
  for (std::size_t k = 0; k + 1 < flat.size(); k += 2) {
    Complex a = std::cos(flat[k] / 2);
    Complex b = std::polar(std::sin(flat[k] / 2), flat[k + 1]);
    if (std::abs(a) > 1e-12) {
      const Complex phase = std::polar(1.0, -std::arg(a));
      a *= phase;
      b *= phase;
    }
    const double theta = 2 * std::atan2(std::abs(b), a.real());
    double alpha = std::abs(b) > 1e-12 ? std::arg(b) : 0.0;
    if (alpha < 0) alpha += 2 * M_PI;
    out.angles.emplace_back(theta, alpha);
  }
  return out;
}

bool distinct_from_all(const CVector& v, const std::vector<CVector>& collected) {
  for (const CVector& u : collected)
    if (std::norm(u.dot(v)) >= kDistinctFidelity) return false;
  return true;
}

int rank_of(const std::vector<CVector>& vectors, int dim) {
  if (vectors.empty()) return 0;
  Matrix stacked(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    stacked.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  Eigen::JacobiSVD<Matrix> svd(stacked);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > kRankCutoff) ++rank;
  return rank;
}

EdgeStateParams axis_params(char axis, double x, double fixed1, double fixed2) {
  switch (axis) {
    case 'a': return {x, fixed1, fixed2};
    case 'b': return {fixed1, x, fixed2};
    case 'c': return {fixed1, fixed2, x};
    default: throw std::invalid_argument("edge_trace_curve: axis must be a, b or c");
  }
}

}  // namespace

TangentSet tangent_states(const WitnessOperator& W, int target_count, int restarts,
                          std::uint64_t seed) {
  if (target_count < 1 || restarts < 1)
    throw std::invalid_argument("tangent_states: counts must be positive");
  const int n = W.n_qubits;

  TangentSet out;
  std::vector<CVector> collected;
  std::vector<ProductState> touch_points;

  auto try_add = [&](const ProductState& state, double value) {
    if (std::abs(value) >= kTangentTol) return false;
    const CVector v = state.to_pure().amplitudes;
    if (!distinct_from_all(v, collected)) return false;
    collected.push_back(v);
    out.states.push_back(state);
    out.values.push_back(value);
    return true;
  };

  // Phase 1: local minima of <v|W|v> that land on the hyperplane.
  for (int r = 0; r < restarts && static_cast<int>(collected.size()) < target_count; ++r) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
    const ProductMin local = product_descent(W, random_product_state(n, rng));
    if (try_add(local.state, local.value)) touch_points.push_back(local.state);
  }

  // Phase 2: around each touch point the tangency condition still holds on
  // the eps_tan level set; walk random angle-space directions by binary
  // search to pick up linearly independent tangent states.
  const int budget_per_touch = std::max(32, 8 * target_count);
  for (std::size_t tp = 0;
       tp < touch_points.size() && static_cast<int>(collected.size()) < target_count; ++tp) {
    std::vector<double> origin;
    for (const auto& [theta, alpha] : touch_points[tp].angles) {
      origin.push_back(theta);
      origin.push_back(alpha);
    }
    Rng rng(Rng::derive(seed, 0x10000 + tp));
    for (int d = 0; d < budget_per_touch && static_cast<int>(collected.size()) < target_count;
         ++d) {
      std::vector<double> dir(origin.size());
      double norm = 0;
      for (double& u : dir) {
        u = rng.normal();
        norm += u * u;
      }
      norm = std::sqrt(norm);
      if (norm == 0) continue;
      for (double& u : dir) u /= norm;

      auto value_at = [&](double s) {
        std::vector<double> flat(origin.size());
        for (std::size_t k = 0; k < flat.size(); ++k) flat[k] = origin[k] + s * dir[k];
        const CVector v = pure_of_angles(flat).amplitudes;
        return (v.adjoint() * W.matrix * v)(0, 0).real();
      };

      // Bracket the crossing of the kShellLevel level set, then bisect.
      double lo = 0.0, hi = 0.5;
      while (value_at(hi) < kShellLevel && hi < 10.0) hi *= 2;
      if (value_at(hi) < kShellLevel) continue;  // flat direction; nothing to harvest
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (value_at(mid) < kShellLevel ? lo : hi) = mid;
      }
      std::vector<double> flat(origin.size());
      for (std::size_t k = 0; k < flat.size(); ++k) flat[k] = origin[k] + lo * dir[k];
      try_add(canonicalize(flat), value_at(lo));
    }
  }

  out.span_rank = rank_of(collected, dim_of(n));
  out.reached_target = static_cast<int>(collected.size()) >= target_count;
  return out;
}

OptimalityReport optimality_verdict(const TangentSet& ts, int n_qubits) {
  OptimalityReport report;
  report.span_rank = ts.span_rank;
  report.verdict = ts.span_rank == dim_of(n_qubits) ? OptimalityVerdict::kOptimal
                                                    : OptimalityVerdict::kInconclusive;
  return report;
}

std::vector<PptesHit> pptes_scan(const WitnessOperator& W, int grid_points_per_axis,
                                 std::uint64_t seed) {
  (void)seed;
  if (W.n_qubits != 3) throw std::invalid_argument("pptes_scan: three-qubit witnesses only");
  if (grid_points_per_axis < 2) throw std::invalid_argument("pptes_scan: grid too small");

  std::vector<EdgeStateParams> points;
  const int g = grid_points_per_axis;
  const double lo = 0.05, hi = 0.95;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < g; ++k)
        points.push_back({lo + (hi - lo) * i / (g - 1), lo + (hi - lo) * j / (g - 1),
                          lo + (hi - lo) * k / (g - 1)});
  points.push_back({0.3525, 0.3196, 0.81642});  // distinguished interior point

  std::vector<PptesHit> hits;
  for (const EdgeStateParams& p : points) {
    const DensityMatrix rho = edge_ppt_state(p);
    for (int q = 1; q <= 3; ++q)
      if (!is_ppt(rho, {q}))
        throw std::runtime_error("pptes_scan: edge state unexpectedly NPT");
    const double trace = W.trace_with(rho);
    if (trace < -1e-8) hits.push_back({p, trace});
  }
  return hits;
}

DecomposabilityVerdict nondecomposability_verdict(const std::vector<PptesHit>& hits) {
  return hits.empty() ? DecomposabilityVerdict::kInconclusive
                      : DecomposabilityVerdict::kNondecomposable;
}

EdgeTraceCurve edge_trace_curve(const WitnessOperator& W, char axis, double fixed1,
                                double fixed2) {
  if (W.n_qubits != 3) throw std::invalid_argument("edge_trace_curve: three-qubit witnesses only");

  auto numerator = [&](double x) {
    const EdgeStateParams p = axis_params(axis, x, fixed1, fixed2);
    return p.normalization() * W.trace_with(edge_ppt_state(p));
  };

  EdgeTraceCurve curve;
  curve.axis = axis;

  // Exact three-point fit of numerator(x) = constant + inverse/x + linear*x.
  const double fit_x[3] = {0.2, 0.5, 0.8};
  Eigen::Matrix3d A;
  Eigen::Vector3d rhs;
  for (int i = 0; i < 3; ++i) {
    A(i, 0) = 1;
    A(i, 1) = 1 / fit_x[i];
    A(i, 2) = fit_x[i];
    rhs(i) = numerator(fit_x[i]);
  }
  const Eigen::Vector3d sol = A.fullPivLu().solve(rhs);
  curve.constant = sol(0);
  curve.inverse_coeff = sol(1);
  curve.linear_coeff = sol(2);

  for (int j = 0; j < 10; ++j) {
    const double x = 0.1 + 0.09 * j;  // 0.10 .. 0.91
    const double predicted = curve.constant + curve.inverse_coeff / x + curve.linear_coeff * x;
    const double actual = numerator(x);
    curve.max_residual = std::max(curve.max_residual, std::abs(actual - predicted));
    const EdgeStateParams p = axis_params(axis, x, fixed1, fixed2);
    curve.samples.emplace_back(x, actual / p.normalization());
  }
  if (curve.max_residual >= 1e-9) throw std::runtime_error("trace not rational-affine");
  return curve;
}

}  // namespace qwit
