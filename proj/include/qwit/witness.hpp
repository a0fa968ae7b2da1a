#pragma once

#include <cstdint>
#include <string>

#include "qwit/features.hpp"
#include "qwit/states.hpp"
#include "qwit/svm.hpp"

namespace qwit {

// Hermitian operator W = sum_t coefficients[t] sigma_t with the coefficient
// vector in canonical Pauli order.  Tr(W rho) can therefore be computed as a
// dot product with the state's feature vector.
struct WitnessOperator {
  int n_qubits = 0;
  RVector coefficients;
  Matrix matrix;                 // cached dense form
  bool unit_trace = false;       // normalization tag

  static WitnessOperator from_coefficients(int n_qubits, RVector coefficients,
                                           bool normalize = true);
  static WitnessOperator from_matrix(int n_qubits, const Matrix& m, bool normalize = true);

  // Coefficient-space route: coefficients . features(rho).
  double trace_with(const DensityMatrix& rho) const;
  // Dense route, for cross-checking the coefficient-space one.
  double trace_with_dense(const DensityMatrix& rho) const;
  double product_value(const ProductState& nu) const;  // <nu|W|nu>
  double min_eigenvalue() const;
};

// Folds the hyperplane into a witness: coefficients[t] = w[t] for t != 0 and
// coefficients[0] = w[0] + b, so Tr(W rho) = w.x(rho) + b exactly; then
// rescales to unit trace when the identity coefficient is positive.
WitnessOperator assemble_witness(const SvmModel& model);

struct ProductMin {
  double value = 0;
  ProductState state;
};

// Multi-start coordinate descent over the 2N angles; each per-qubit step is
// the exact 2x2 Rayleigh-quotient minimizer.  Returns the best local minimum
// found -- a certified upper bound on the true minimum.
ProductMin min_over_product_states(const WitnessOperator& W, int restarts, std::uint64_t seed);

// Single descent from a given start; exposed for refinement and tangent search.
ProductMin product_descent(const WitnessOperator& W, const ProductState& start);

// Shifts the identity coefficient so the product-state minimum lands at zero
// (within tolerance) and renormalizes.  Errors if the shifted operator loses
// its negative eigenvalue -- then no witness separates this data.
struct CalibrationResult {
  WitnessOperator witness;
  double total_shift = 0;  // signed, in pre-normalization trace units
  int iterations = 0;
};
CalibrationResult calibrate(const WitnessOperator& W, int restarts, std::uint64_t seed);

struct VerifyReport {
  bool valid = false;
  double min_product_value = 0;
  double min_eigenvalue = 0;
  bool detected_state_npt = false;   // NPT check of the min-eigenvector projector
  DensityMatrix detected_state;
  std::string failure;               // empty when valid
};
VerifyReport verify_witness(const WitnessOperator& W, int restarts, std::uint64_t seed);

struct ThresholdReport {
  std::string family;
  double slope = 0;
  double intercept = 0;
  double crossing = 0;       // p* = -intercept/slope (meaningful when detects)
  double fit_residual = 0;   // |midpoint - affine prediction|
  bool detects = false;      // slope < 0 and p* < 1
};

// Tr(W rho_p) on the Werner family of `base` is affine in p; fits the line
// from the endpoints and checks the midpoint residual.
ThresholdReport detection_threshold(const WitnessOperator& W, const PureState& base);

}  // namespace qwit
