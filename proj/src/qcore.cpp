#include "qwit/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qwit {

namespace {

const Matrix& single_pauli(Pauli p) {
  static const Matrix mats[4] = {
      (Matrix(2, 2) << 1, 0, 0, 1).finished(),
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  return mats[static_cast<int>(p)];
}

}  // namespace

std::size_t PauliString::index() const {
  std::size_t idx = 0;
  for (Pauli p : letters) idx = idx * 4 + static_cast<std::size_t>(p);
  return idx;
}

PauliString PauliString::from_index(std::size_t index, int n_qubits) {
  PauliString out;
  out.letters.resize(n_qubits);
  for (int k = n_qubits - 1; k >= 0; --k) {
    out.letters[k] = static_cast<Pauli>(index & 3);
    index >>= 2;
  }
  if (index != 0) throw std::invalid_argument("pauli index out of range for qubit count");
  return out;
}

std::string PauliString::str() const {
  static const char names[] = "IXYZ";
  std::string s;
  for (Pauli p : letters) s.push_back(names[static_cast<int>(p)]);
  return s;
}

Matrix tensor_product(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_product: no factors");
  for (const Matrix& f : factors)
    if (f.rows() != f.cols()) throw std::invalid_argument("tensor_product: non-square factor");
  Matrix out = Matrix::Identity(1, 1);
  for (const Matrix& f : factors) {
    Matrix next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = out(i, j) * f;
    out = std::move(next);
  }
  return out;
}

Matrix pauli_matrix(const PauliString& p) {
  if (p.letters.empty()) throw std::invalid_argument("pauli_matrix: empty string");
  std::vector<Matrix> factors;
  factors.reserve(p.letters.size());
  for (Pauli letter : p.letters) factors.push_back(single_pauli(letter));
  return tensor_product(factors);
}

const std::vector<Matrix>& pauli_table(int n_qubits) {
  static std::map<int, std::vector<Matrix>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n_qubits);
  if (it == cache.end()) {
    std::vector<Matrix> table;
    const std::size_t count = std::size_t(1) << (2 * n_qubits);
    table.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
      table.push_back(pauli_matrix(PauliString::from_index(t, n_qubits)));
    it = cache.emplace(n_qubits, std::move(table)).first;
  }
  return it->second;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double expectation(const Matrix& op, const Matrix& rho) {
  if (op.rows() != rho.rows() || op.cols() != rho.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  if (!is_hermitian(op, 1e-10)) throw std::invalid_argument("expectation: operator not Hermitian");
  const Complex tr = (op * rho).trace();
  if (std::abs(tr.imag()) >= kExpectationImagTol)
    throw std::runtime_error("non-Hermitian expectation");
  return tr.real();
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (!is_hermitian(m, 1e-10)) throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  if (!is_hermitian(m, 1e-10)) throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const auto& ev = solver.eigenvalues();
  return {std::vector<double>(ev.data(), ev.data() + ev.size()), solver.eigenvectors()};
}

Matrix partial_transpose(const Matrix& rho, const std::set<int>& subsystems, int n_qubits) {
  const int d = dim_of(n_qubits);
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  for (int q : subsystems)
    if (q < 1 || q > n_qubits) throw std::invalid_argument("partial_transpose: qubit index out of range");
  Matrix out(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      int rr = r, cc = c;
      for (int q : subsystems) {
        const int bit = n_qubits - q;  // qubit 1 is the most significant bit
        const int br = (r >> bit) & 1, bc = (c >> bit) & 1;
        rr = (rr & ~(1 << bit)) | (bc << bit);
        cc = (cc & ~(1 << bit)) | (br << bit);
      }
      out(rr, cc) = rho(r, c);
    }
  }
  return out;
}

bool is_ppt(const Matrix& rho, const std::set<int>& subsystems, int n_qubits) {
  const Matrix pt = partial_transpose(rho, subsystems, n_qubits);
  return hermitian_eigenvalues(pt).front() >= -kPsdTol;
}

DensityMatrix DensityMatrix::checked(int n_qubits, Matrix m) {
  const int d = dim_of(n_qubits);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("DensityMatrix: dimension mismatch");
  if (!is_hermitian(m, kHermitianTol)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace not 1");
  if (hermitian_eigenvalues(m).front() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  return DensityMatrix{n_qubits, std::move(m)};
}

DensityMatrix pure_to_density(const PureState& psi) {
  if (std::abs(psi.amplitudes.norm() - 1.0) > kHermitianTol)
    throw std::invalid_argument("pure_to_density: state not normalized");
  return DensityMatrix{psi.n_qubits, psi.projector()};
}

bool is_ppt(const DensityMatrix& rho, const std::set<int>& subsystems) {
  return is_ppt(rho.mat, subsystems, rho.n_qubits);
}

}  // namespace qwit
