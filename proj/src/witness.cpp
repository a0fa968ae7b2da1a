#include "qwit/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace qwit {

namespace {

constexpr double kDescentTol = 1e-14;   // sweep-to-sweep value change
constexpr int kMaxSweeps = 500;
constexpr double kCalibrateTarget = 1e-9;
constexpr int kMaxCalibrateIters = 20;
constexpr double kNegativeEigTol = -1e-12;

CVector qubit_vector(double theta, double alpha) {
  CVector q(2);
  q(0) = std::cos(theta / 2);
  q(1) = std::polar(std::sin(theta / 2), alpha);
  return q;
}

std::pair<double, double> angles_of(const CVector& q) {
  Complex a = q(0), b = q(1);
  if (std::abs(a) > 1e-12) {
    const Complex phase = std::polar(1.0, -std::arg(a));
    a *= phase;
    b *= phase;
  }
  const double theta = 2 * std::atan2(std::abs(b), a.real());
  double alpha = std::abs(b) > 1e-12 ? std::arg(b) : 0.0;
  if (alpha < 0) alpha += 2 * M_PI;
  return {theta, alpha};
}

// Smallest-eigenvalue eigenvector of a Hermitian 2x2, in closed form.
CVector min_eigvec_2x2(const Matrix& m) {
  const double a = m(0, 0).real(), d = m(1, 1).real();
  const Complex c = m(0, 1);
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(c));
  const double lambda = 0.5 * (a + d) - half_gap;
  CVector v(2);
  if (std::abs(c) < 1e-15 * (std::abs(a) + std::abs(d) + 1)) {
    v(0) = a <= d ? 1 : 0;
    v(1) = a <= d ? 0 : 1;
    return v;
  }
  // Pick the better-conditioned null-space column of (m - lambda I).
  if (std::abs(lambda - d) >= std::abs(lambda - a)) {
    v(0) = lambda - d;
    v(1) = std::conj(c);
  } else {
    v(0) = c;
    v(1) = lambda - a;
  }
  v /= v.norm();
  return v;
}

CVector assemble_product(const std::vector<CVector>& qubits) {
  CVector v = CVector::Ones(1);
  for (const CVector& q : qubits) {
    CVector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q(0);
      next(2 * i + 1) = v(i) * q(1);
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace

WitnessOperator WitnessOperator::from_coefficients(int n_qubits, RVector coefficients,
                                                   bool normalize) {
  const auto& paulis = pauli_table(n_qubits);
  if (static_cast<std::size_t>(coefficients.size()) != paulis.size())
    throw std::invalid_argument("witness: coefficient length must be 4^N");
  WitnessOperator W;
  W.n_qubits = n_qubits;
  if (normalize && coefficients(0) > 0) {
    // Unit trace: Tr(W) = 2^N * c_0.
    coefficients /= dim_of(n_qubits) * coefficients(0);
    W.unit_trace = true;
  }
  W.coefficients = std::move(coefficients);
  const int d = dim_of(n_qubits);
  W.matrix = Matrix::Zero(d, d);
  for (std::size_t t = 0; t < paulis.size(); ++t)
    W.matrix += W.coefficients(static_cast<Eigen::Index>(t)) * paulis[t];
  return W;
}

WitnessOperator WitnessOperator::from_matrix(int n_qubits, const Matrix& m, bool normalize) {
  const int d = dim_of(n_qubits);
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument("witness: dimension mismatch");
  // Project onto the Pauli basis; real coefficients make the result the
  // Hermitian part of m.
  const auto& paulis = pauli_table(n_qubits);
  RVector coeffs(static_cast<Eigen::Index>(paulis.size()));
  for (std::size_t t = 0; t < paulis.size(); ++t)
    coeffs(static_cast<Eigen::Index>(t)) = (paulis[t] * m).trace().real() / d;
  return from_coefficients(n_qubits, std::move(coeffs), normalize);
}

double WitnessOperator::trace_with(const DensityMatrix& rho) const {
  // Tr(W rho) = sum_t c_t Tr(sigma_t rho) = c . x(rho)
  return coefficients.dot(feature_vector(rho).values);
}

double WitnessOperator::trace_with_dense(const DensityMatrix& rho) const {
  return (matrix * rho.mat).trace().real();
}

double WitnessOperator::product_value(const ProductState& nu) const {
  const CVector v = nu.to_pure().amplitudes;
  return (v.adjoint() * matrix * v)(0, 0).real();
}

double WitnessOperator::min_eigenvalue() const {
  return hermitian_eigenvalues(matrix).front();
}

WitnessOperator assemble_witness(const SvmModel& model) {
  const Eigen::Index len = model.w.size();
  int n_qubits = 0;
  while ((Eigen::Index(1) << (2 * n_qubits)) < len) ++n_qubits;
  if ((Eigen::Index(1) << (2 * n_qubits)) != len)
    throw std::invalid_argument("assemble_witness: weight length is not 4^N");
  RVector coeffs = model.w;
  coeffs(0) += model.b;  // the identity feature is constantly 1
  return WitnessOperator::from_coefficients(n_qubits, std::move(coeffs));
}

ProductMin product_descent(const WitnessOperator& W, const ProductState& start) {
  const int n = W.n_qubits;
  if (start.n_qubits() != n) throw std::invalid_argument("product_descent: qubit count mismatch");
  std::vector<CVector> qubits;
  qubits.reserve(n);
  for (const auto& [theta, alpha] : start.angles) qubits.push_back(qubit_vector(theta, alpha));

  double prev = 0;
  bool have_prev = false;
  double value = 0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (int k = 0; k < n; ++k) {
      // Effective 2x2 operator on qubit k with the others frozen.
      CVector basis_vec[2];
      for (int bit = 0; bit < 2; ++bit) {
        std::vector<CVector> factors = qubits;
        CVector e = CVector::Zero(2);
        e(bit) = 1;
        factors[k] = e;
        basis_vec[bit] = assemble_product(factors);
      }
      Matrix m(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          m(r, c) = (basis_vec[r].adjoint() * W.matrix * basis_vec[c])(0, 0);
      m = 0.5 * (m + m.adjoint().eval());
      qubits[k] = min_eigvec_2x2(m);
    }
    const CVector full = assemble_product(qubits);
    value = (full.adjoint() * W.matrix * full)(0, 0).real();
    if (have_prev && std::abs(prev - value) < kDescentTol) break;
    prev = value;
    have_prev = true;
  }

  ProductMin out;
  out.value = value;
  out.state.angles.reserve(n);
  for (const CVector& q : qubits) out.state.angles.push_back(angles_of(q));
  return out;
}

ProductMin min_over_product_states(const WitnessOperator& W, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("min_over_product_states: restarts >= 1");
  ProductMin best;
  bool have_best = false;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
    const ProductState start = random_product_state(W.n_qubits, rng);
    const ProductMin candidate = product_descent(W, start);
    if (!have_best || candidate.value < best.value) {  // strict: first index wins ties
      best = candidate;
      have_best = true;
    }
  }
  return best;
}

CalibrationResult calibrate(const WitnessOperator& W, int restarts, std::uint64_t seed) {
  CalibrationResult result;
  result.witness = W;
  for (int iter = 0; iter < kMaxCalibrateIters; ++iter) {
    const double m =
        min_over_product_states(result.witness, restarts, Rng::derive(seed, iter)).value;
    if (std::abs(m) <= kCalibrateTarget) break;
    // Tr((W - m I) rho) = Tr(W rho) - m for every state, so shifting the
    // identity coefficient by -m moves the product-state minimum to zero.
    RVector coeffs = result.witness.coefficients;
    coeffs(0) -= m;
    result.total_shift -= m;
    result.witness = WitnessOperator::from_coefficients(W.n_qubits, std::move(coeffs));
    ++result.iterations;
  }
  if (result.witness.min_eigenvalue() >= kNegativeEigTol)
    throw std::runtime_error("no witness separates this data");
  return result;
}

VerifyReport verify_witness(const WitnessOperator& W, int restarts, std::uint64_t seed) {
  VerifyReport report;
  report.min_product_value = min_over_product_states(W, restarts, seed).value;
  const EigenSystem sys = hermitian_eigensystem(W.matrix);
  report.min_eigenvalue = sys.values.front();

  if (report.min_product_value < -kValidityTol)
    report.failure = "not a witness: negative on a product state";
  else if (report.min_eigenvalue >= kNegativeEigTol)
    report.failure = "not a witness: no negative eigenvalue";
  report.valid = report.failure.empty();

  if (report.min_eigenvalue < kNegativeEigTol) {
    // The minimum-eigenvalue eigenvector is a state the witness detects.
    const CVector v = sys.vectors.col(0);
    report.detected_state = DensityMatrix{W.n_qubits, v * v.adjoint()};
    report.detected_state_npt = is_npt_any_bipartition(report.detected_state);
  }
  return report;
}

ThresholdReport detection_threshold(const WitnessOperator& W, const PureState& base) {
  if (base.n_qubits != W.n_qubits)
    throw std::invalid_argument("detection_threshold: qubit count mismatch");
  const double f0 = W.trace_with(werner(base, 0.0));
  const double f1 = W.trace_with(werner(base, 1.0));
  const double fh = W.trace_with(werner(base, 0.5));

  ThresholdReport report;
  report.family = "werner";
  report.intercept = f0;
  report.slope = f1 - f0;
  report.fit_residual = std::abs(fh - (f0 + 0.5 * report.slope));
  if (report.fit_residual >= 1e-10)
    throw std::runtime_error("detection_threshold: trace not affine in p");
  if (report.slope < 0) {
    report.crossing = -report.intercept / report.slope;
    report.detects = report.crossing < 1.0;
  }
  return report;
}

}  // namespace qwit
