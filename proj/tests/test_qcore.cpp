#include <doctest.h>

#include "qwit/qcore.hpp"
#include "qwit/rng.hpp"
#include "qwit/states.hpp"

using namespace qwit;

TEST_SUITE_BEGIN("qcore");

TEST_CASE("pauli string index round-trip and ordering") {
  CHECK(PauliString{{Pauli::I, Pauli::I}}.index() == 0);
  CHECK(PauliString{{Pauli::I, Pauli::X}}.index() == 1);
  CHECK(PauliString{{Pauli::X, Pauli::I}}.index() == 4);  // qubit 1 most significant
  CHECK(PauliString{{Pauli::Z, Pauli::Z}}.index() == 15);
  for (std::size_t t = 0; t < 64; ++t) CHECK(PauliString::from_index(t, 3).index() == t);
  CHECK(PauliString::from_index(6, 2).str() == "XY");
}

TEST_CASE("tensor_product basics") {
  const Matrix I2 = Matrix::Identity(2, 2);
  CHECK((tensor_product({I2, I2}) - Matrix::Identity(4, 4)).norm() == doctest::Approx(0));

  const Matrix zz = pauli_matrix(PauliString{{Pauli::Z, Pauli::Z}});
  CVector e01 = CVector::Zero(4);
  e01(1) = 1;  // |01>
  CHECK((e01.adjoint() * zz * e01)(0, 0).real() == doctest::Approx(-1));

  const Matrix xx = pauli_matrix(PauliString{{Pauli::X, Pauli::X}});
  CHECK(xx(0, 3) == Complex(1, 0));
  CHECK(xx(0, 0) == Complex(0, 0));

  CHECK_THROWS(tensor_product({}));
  CHECK_THROWS(tensor_product({Matrix::Zero(2, 3)}));
}

TEST_CASE("pauli_matrix examples") {
  CHECK((pauli_matrix(PauliString{{Pauli::I}}) - Matrix::Identity(2, 2)).norm() ==
        doctest::Approx(0));
  const Matrix z = pauli_matrix(PauliString{{Pauli::Z}});
  CHECK(z(0, 0) == Complex(1, 0));
  CHECK(z(1, 1) == Complex(-1, 0));
  const Matrix xz = pauli_matrix(PauliString{{Pauli::X, Pauli::Z}});
  CHECK(xz(0, 2) == Complex(1, 0));
  CHECK(xz(1, 3) == Complex(-1, 0));
  CHECK_THROWS(pauli_matrix(PauliString{}));
}

TEST_CASE("pauli matrices square to identity, N <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const int d = dim_of(n);
    for (const Matrix& p : pauli_table(n)) {
      CHECK(is_hermitian(p));
      CHECK((p * p - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("expectation") {
  const DensityMatrix bell = pure_to_density(bell_state(0, 0));
  CHECK(expectation(Matrix::Identity(4, 4), bell.mat) == doctest::Approx(1));
  const Matrix zz = pauli_matrix(PauliString{{Pauli::Z, Pauli::Z}});
  CHECK(expectation(zz, bell.mat) == doctest::Approx(1));

  CHECK_THROWS(expectation(Matrix::Identity(2, 2), bell.mat));  // dimension mismatch
  Matrix skew = Matrix::Zero(4, 4);
  skew(0, 1) = Complex(0, 1);  // not Hermitian
  CHECK_THROWS(expectation(skew, bell.mat));
}

TEST_CASE("expectation is linear") {
  Rng rng(11);
  const Matrix op = pauli_matrix(PauliString{{Pauli::X, Pauli::Y}});
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix r1 = random_separable_mixture(2, 3, rng);
    const DensityMatrix r2 = random_separable_mixture(2, 2, rng);
    const double alpha = rng.uniform();
    const Matrix mix = alpha * r1.mat + (1 - alpha) * r2.mat;
    CHECK(expectation(op, mix) ==
          doctest::Approx(alpha * expectation(op, r1.mat) + (1 - alpha) * expectation(op, r2.mat))
              .epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eigenvalues") {
  const auto id = hermitian_eigenvalues(Matrix::Identity(4, 4));
  for (double v : id) CHECK(v == doctest::Approx(1));

  const auto zz = hermitian_eigenvalues(pauli_matrix(PauliString{{Pauli::Z, Pauli::Z}}));
  CHECK(zz[0] == doctest::Approx(-1));
  CHECK(zz[1] == doctest::Approx(-1));
  CHECK(zz[2] == doctest::Approx(1));
  CHECK(zz[3] == doctest::Approx(1));

  // Bell-diagonal spectrum at c1=c2=c3 matching the closed form {1,0,0,0}
  // is checked via the tetrahedron-corner state (1,-1,1).
  const auto corner = hermitian_eigenvalues(bell_diagonal(1, -1, 1).mat);
  CHECK(corner[3] == doctest::Approx(1).epsilon(1e-10));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(corner[i]) < 1e-10);

  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1;
  CHECK_THROWS(hermitian_eigenvalues(skew));
}

TEST_CASE("partial_transpose") {
  Rng rng(5);
  const DensityMatrix rho = random_separable_mixture(2, 4, rng);

  CHECK((partial_transpose(rho.mat, {}, 2) - rho.mat).norm() == doctest::Approx(0));
  CHECK((partial_transpose(rho.mat, {1, 2}, 2) - rho.mat.transpose()).norm() ==
        doctest::Approx(0));

  const Matrix pt = partial_transpose(rho.mat, {2}, 2);
  CHECK(is_hermitian(pt, 1e-12));
  CHECK(pt.trace().real() == doctest::Approx(1));
  CHECK((partial_transpose(pt, {2}, 2) - rho.mat).norm() == doctest::Approx(0));  // involution

  const DensityMatrix pure_bell = werner(bell_state(0, 0), 1.0);
  CHECK(hermitian_eigenvalues(partial_transpose(pure_bell.mat, {2}, 2)).front() ==
        doctest::Approx(-0.5).epsilon(1e-10));

  CHECK_THROWS(partial_transpose(rho.mat, {3}, 2));
}

TEST_CASE("is_ppt") {
  const PureState bell = bell_state(0, 0);
  CHECK(is_ppt(werner(bell, 0.2), {2}));
  CHECK(!is_ppt(werner(bell, 0.9), {2}));
  CHECK(is_ppt(werner(bell, 0.0), {1}));  // maximally mixed
}

TEST_CASE("DensityMatrix invariants are enforced") {
  CHECK_THROWS(DensityMatrix::checked(2, Matrix::Identity(4, 4)));        // trace 4
  CHECK_THROWS(DensityMatrix::checked(2, Matrix::Identity(2, 2)));        // wrong dim
  Matrix neg = Matrix::Zero(4, 4);
  neg(0, 0) = 2;
  neg(1, 1) = -1;
  CHECK_THROWS(DensityMatrix::checked(2, neg));                           // not PSD
  CHECK(DensityMatrix::checked(2, Matrix::Identity(4, 4) / 4).n_qubits == 2);
}

TEST_SUITE_END();
