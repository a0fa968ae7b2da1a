#pragma once

#include <Eigen/Dense>
#include <complex>
#include <set>
#include <string>
#include <vector>

namespace qwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// All numerical tolerances live here so every module agrees on them.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;        // min eigenvalue >= -kPsdTol
inline constexpr double kExpectationImagTol = 1e-10;
inline constexpr double kValidityTol = 1e-6;    // eps_val: product-state floor of a calibrated witness
inline constexpr double kTangentTol = 1e-6;     // eps_tan: |<v|W|v>| for tangency
inline constexpr double kRankCutoff = 1e-8;     // singular values above this count toward span rank
inline constexpr double kDistinctFidelity = 1.0 - 1e-6;

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

// A length-N word over {I,X,Y,Z}.  Canonical integer index is the base-4
// encoding with qubit 1 most significant and digit order I < X < Y < Z;
// file formats and feature layouts depend on this being bit-exact.
struct PauliString {
  std::vector<Pauli> letters;  // letters[0] acts on qubit 1

  std::size_t index() const;
  static PauliString from_index(std::size_t index, int n_qubits);
  std::string str() const;  // e.g. "XZ", "IYI"
};

// Kronecker product in listed order (factor 1 outermost / most significant).
Matrix tensor_product(const std::vector<Matrix>& factors);

Matrix pauli_matrix(const PauliString& p);

// All 4^N Pauli-string matrices in canonical order, built once per N and cached.
const std::vector<Matrix>& pauli_table(int n_qubits);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

// Tr(op * rho).  Throws if op is not Hermitian, dimensions mismatch, or the
// imaginary part of the trace exceeds kExpectationImagTol.
double expectation(const Matrix& op, const Matrix& rho);

// Ascending eigenvalues of a Hermitian matrix (throws on non-Hermitian input).
std::vector<double> hermitian_eigenvalues(const Matrix& m);

// Full eigensystem; eigenvalues ascending, columns of `vectors` matching.
struct EigenSystem {
  std::vector<double> values;
  Matrix vectors;
};
EigenSystem hermitian_eigensystem(const Matrix& m);

// Transposes the tensor indices of the named qubits (1-based, qubit 1 most
// significant).  Involution; preserves trace and Hermiticity.
Matrix partial_transpose(const Matrix& rho, const std::set<int>& subsystems, int n_qubits);

bool is_ppt(const Matrix& rho, const std::set<int>& subsystems, int n_qubits);

struct PureState {
  int n_qubits = 0;
  CVector amplitudes;

  Matrix projector() const { return amplitudes * amplitudes.adjoint(); }
};

// Validated trace-one PSD Hermitian matrix.  Construct via `checked` to
// enforce the three state invariants; the raw constructor is for internal
// use where validity is guaranteed by construction.
struct DensityMatrix {
  int n_qubits = 0;
  Matrix mat;

  static DensityMatrix checked(int n_qubits, Matrix m);
};

DensityMatrix pure_to_density(const PureState& psi);
bool is_ppt(const DensityMatrix& rho, const std::set<int>& subsystems);

inline int dim_of(int n_qubits) { return 1 << n_qubits; }

}  // namespace qwit
