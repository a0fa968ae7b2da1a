#include <doctest.h>

#include "qwit/optimality.hpp"
#include "qwit/references.hpp"

using namespace qwit;

namespace {

WitnessOperator ideal_bell_witness() {
  const Matrix m = 0.5 * Matrix::Identity(4, 4) - bell_state(0, 0).projector();
  return WitnessOperator::from_matrix(2, m, /*normalize=*/false);
}

// 1/2 I - |GHZ_3><GHZ_3|, a decomposable-style witness: on every edge state
// Tr(W rho) = 1/2 - 2/n >= 1/4 > 0, so the PPTES scan must come up empty.
WitnessOperator ideal_ghz3_witness() {
  const Matrix m = 0.5 * Matrix::Identity(8, 8) - ghz_state(3).projector();
  return WitnessOperator::from_matrix(3, m, /*normalize=*/false);
}

}  // namespace

TEST_SUITE_BEGIN("optimality");

TEST_CASE("tangent_states on the ideal two-qubit witness") {
  const WitnessOperator W = ideal_bell_witness();
  // |00> and |11> are tangent by hand: <00|W|00> = 1/2 - 1/2 = 0.
  ProductState s00{{{0, 0}, {0, 0}}};
  ProductState s11{{{M_PI, 0}, {M_PI, 0}}};
  CHECK(std::abs(W.product_value(s00)) < 1e-12);
  CHECK(std::abs(W.product_value(s11)) < 1e-12);

  const TangentSet ts = tangent_states(W, 8, 128, 1);
  CHECK(ts.states.size() >= 4);
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    CHECK(std::abs(ts.values[i]) < kTangentTol);
    CHECK(std::abs(W.product_value(ts.states[i])) < kTangentTol);
    for (const auto& [theta, alpha] : ts.states[i].angles) {
      CHECK(theta >= 0);
      CHECK(theta <= M_PI + 1e-12);
      CHECK(alpha >= 0);
      CHECK(alpha < 2 * M_PI + 1e-12);
    }
  }
  CHECK(ts.span_rank == 4);
  CHECK(optimality_verdict(ts, 2).verdict == OptimalityVerdict::kOptimal);
}

TEST_CASE("span rank is invariant under global phases") {
  // Hand-built tangent set {|00>, |11>} has rank 2 regardless of phases.
  TangentSet ts;
  ts.states.push_back(ProductState{{{0, 0}, {0, 0}}});
  ts.states.push_back(ProductState{{{M_PI, 1.3}, {M_PI, 2.1}}});  // phased |11>
  ts.values = {0, 0};
  Matrix stacked(2, 4);
  stacked.row(0) = ts.states[0].to_pure().amplitudes.transpose();
  stacked.row(1) = ts.states[1].to_pure().amplitudes.transpose();
  Eigen::JacobiSVD<Matrix> svd(stacked);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > kRankCutoff) ++rank;
  CHECK(rank == 2);
}

TEST_CASE("optimality_verdict is one-sided") {
  TangentSet empty;
  CHECK(optimality_verdict(empty, 2).verdict == OptimalityVerdict::kInconclusive);
  CHECK(optimality_verdict(empty, 2).span_rank == 0);

  TangentSet two;
  two.span_rank = 2;
  CHECK(optimality_verdict(two, 2).verdict == OptimalityVerdict::kInconclusive);

  TangentSet full;
  full.span_rank = 4;
  CHECK(optimality_verdict(full, 2).verdict == OptimalityVerdict::kOptimal);
}

TEST_CASE("pptes_scan detects the published non-decomposable witness") {
  const WitnessOperator ew22 = reference_witness("ew22");

  // The distinguished interior point reproduces the published trace value.
  const DensityMatrix named = edge_ppt_state({0.3525, 0.3196, 0.81642});
  CHECK(ew22.trace_with(named) == doctest::Approx(-0.0129).epsilon(0.02));

  const auto hits = pptes_scan(ew22, 8, 1);  // coarse grid keeps the test quick
  CHECK(!hits.empty());
  for (const auto& hit : hits) {
    CHECK(hit.trace_value < -1e-8);
    const DensityMatrix rho = edge_ppt_state(hit.params);
    for (int q = 1; q <= 3; ++q) CHECK(is_ppt(rho, {q}));
    // Two independent trace routes agree.
    CHECK(ew22.trace_with(rho) ==
          doctest::Approx(ew22.trace_with_dense(rho)).epsilon(1e-12));
  }
  CHECK(nondecomposability_verdict(hits) == DecomposabilityVerdict::kNondecomposable);

  // Reproducibility: same grid, same hits.
  const auto again = pptes_scan(ew22, 8, 1);
  REQUIRE(again.size() == hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i)
    CHECK(again[i].trace_value == hits[i].trace_value);
}

TEST_CASE("pptes_scan is empty for a witness that cannot see PPT states") {
  const auto hits = pptes_scan(ideal_ghz3_witness(), 8, 1);
  CHECK(hits.empty());
  CHECK(nondecomposability_verdict(hits) == DecomposabilityVerdict::kInconclusive);
}

TEST_CASE("nondecomposability_verdict ignores hit ordering") {
  std::vector<PptesHit> hits = {{{0.3, 0.3, 0.8}, -0.01}, {{0.4, 0.2, 0.7}, -0.02}};
  const auto forward = nondecomposability_verdict(hits);
  std::swap(hits[0], hits[1]);
  CHECK(nondecomposability_verdict(hits) == forward);
}

TEST_CASE("published three-qubit tangent angles lie on the GHZ witness plane") {
  const WitnessOperator wghz = reference_witness("wghz");
  const ProductState nu{{{1.57, 4.91}, {1.53, 5.26}, {1.64, 2.38}}};
  CHECK(std::abs(wghz.product_value(nu)) < 5e-3);
}

TEST_CASE("edge_trace_curve") {
  // The published coefficients of the a-axis expansion.
  const WitnessOperator ew22 = reference_witness("ew22");
  const EdgeTraceCurve curve = edge_trace_curve(ew22, 'a', 0.3196, 0.81642);
  CHECK(curve.linear_coeff == doctest::Approx(0.0972).epsilon(0.05));
  CHECK(std::abs(curve.inverse_coeff - 0.0007) < 5e-3);
  CHECK(curve.max_residual < 1e-9);

  // Identity witness: constant curve 1/8.
  RVector c = RVector::Zero(64);
  c(0) = 1.0 / 8;
  const WitnessOperator identity = WitnessOperator::from_coefficients(3, c, false);
  const EdgeTraceCurve flat = edge_trace_curve(identity, 'b', 0.5, 0.5);
  for (const auto& [x, value] : flat.samples) CHECK(value == doctest::Approx(0.125));

  // Diagonal witness: the numerator coefficients match the matrix entries
  // the edge state multiplies (linear term W11 on axis a, inverse term W66).
  Matrix diag = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) diag(i, i) = 0.1 * (i + 1);
  const WitnessOperator diagonal = WitnessOperator::from_matrix(3, diag, false);
  const EdgeTraceCurve hand = edge_trace_curve(diagonal, 'a', 0.3, 0.6);
  CHECK(hand.linear_coeff == doctest::Approx(diag(1, 1).real()).epsilon(1e-9));
  CHECK(hand.inverse_coeff == doctest::Approx(diag(6, 6).real()).epsilon(1e-9));

  CHECK_THROWS(edge_trace_curve(ew22, 'q', 0.3, 0.3));
}

TEST_SUITE_END();
