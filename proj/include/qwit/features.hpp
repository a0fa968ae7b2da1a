#pragma once

#include <vector>

#include "qwit/qcore.hpp"

namespace qwit {

// Length-4^N vector of Pauli expectations Tr(sigma_t rho) in canonical order.
// values[0] is always 1 (the all-identity string) for a valid state.
struct FeatureVector {
  int n_qubits = 0;
  RVector values;
};

FeatureVector feature_vector(const DensityMatrix& rho);

// Inverse map rho = 2^{-N} sum_t values[t] sigma_t; errors if the result is
// not a valid state (the Pauli basis is complete, so this is exact for
// feature vectors of actual states).
DensityMatrix reconstruct_state(const FeatureVector& f);

struct PcaProjection {
  RVector mean;
  Eigen::MatrixXd components;      // k rows, each an orthonormal direction
  RVector explained_variance;      // descending
};

PcaProjection pca_fit(const std::vector<FeatureVector>& samples, int k);
RVector pca_transform(const PcaProjection& proj, const FeatureVector& f);

}  // namespace qwit
