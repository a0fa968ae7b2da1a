#include "qwit/features.hpp"

#include <stdexcept>

namespace qwit {

FeatureVector feature_vector(const DensityMatrix& rho) {
  const auto& paulis = pauli_table(rho.n_qubits);
  FeatureVector f;
  f.n_qubits = rho.n_qubits;
  f.values.resize(static_cast<Eigen::Index>(paulis.size()));
  for (std::size_t t = 0; t < paulis.size(); ++t)
    f.values(static_cast<Eigen::Index>(t)) = expectation(paulis[t], rho.mat);
  return f;
}

DensityMatrix reconstruct_state(const FeatureVector& f) {
  const auto& paulis = pauli_table(f.n_qubits);
  if (static_cast<std::size_t>(f.values.size()) != paulis.size())
    throw std::invalid_argument("reconstruct_state: feature length mismatch");
  const int d = dim_of(f.n_qubits);
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t t = 0; t < paulis.size(); ++t)
    m += f.values(static_cast<Eigen::Index>(t)) * paulis[t];
  m /= d;
  if (hermitian_eigenvalues(m).front() < -kPsdTol)
    throw std::runtime_error("reconstruct_state: not a state");
  return DensityMatrix::checked(f.n_qubits, std::move(m));
}

PcaProjection pca_fit(const std::vector<FeatureVector>& samples, int k) {
  const int m = static_cast<int>(samples.size());
  if (m < k + 1) throw std::invalid_argument("pca_fit: need at least k+1 samples");
  const Eigen::Index dim = samples.front().values.size();
  for (const auto& s : samples)
    if (s.values.size() != dim) throw std::invalid_argument("pca_fit: inconsistent dimensions");
  if (k < 1 || static_cast<Eigen::Index>(k) > dim)
    throw std::invalid_argument("pca_fit: invalid component count");

  RVector mean = RVector::Zero(dim);
  for (const auto& s : samples) mean += s.values;
  mean /= m;

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& s : samples) {
    const RVector centered = s.values - mean;
    cov += centered * centered.transpose();
  }
  cov /= (m - 1);

  // Reuse the Hermitian solver on the real symmetric covariance.
  const EigenSystem sys = hermitian_eigensystem(cov.cast<Complex>());

  PcaProjection proj;
  proj.mean = std::move(mean);
  proj.components.resize(k, dim);
  proj.explained_variance.resize(k);
  for (int i = 0; i < k; ++i) {
    const Eigen::Index col = dim - 1 - i;  // eigenvalues come back ascending
    proj.explained_variance(i) = sys.values[static_cast<std::size_t>(col)];
    proj.components.row(i) = sys.vectors.col(col).real().transpose();
  }
  return proj;
}

RVector pca_transform(const PcaProjection& proj, const FeatureVector& f) {
  if (f.values.size() != proj.mean.size())
    throw std::invalid_argument("pca_transform: dimension mismatch");
  return proj.components * (f.values - proj.mean);
}

}  // namespace qwit
