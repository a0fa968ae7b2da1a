#include <doctest.h>

#include "qwit/references.hpp"

using namespace qwit;

TEST_SUITE_BEGIN("references");

TEST_CASE("all bundled witnesses are Hermitian operators with a negative eigenvalue") {
  for (const std::string& name : reference_names()) {
    const WitnessOperator W = reference_witness(name);
    CHECK(is_hermitian(W.matrix, 1e-12));
    CHECK(W.min_eigenvalue() < 0);
    CHECK(W.matrix.rows() == dim_of(reference_qubits(name)));
    // Published matrices follow a near-unit-trace convention.
    CHECK(W.matrix.trace().real() == doctest::Approx(1.0).epsilon(0.02));
  }
  CHECK_THROWS(reference_witness("nope"));
}

TEST_CASE("raw matrices keep the published entries") {
  const Matrix w1 = reference_matrix("w1");
  CHECK(w1(0, 0).real() == 0.0545);
  CHECK(w1(0, 3) == Complex(-0.5066, 0.0053));
  CHECK(w1.trace().real() == doctest::Approx(0.9998));

  // The GHZ witness as published carries a small rounding asymmetry; the
  // operator form symmetrizes it away.
  const Matrix wghz = reference_matrix("wghz");
  CHECK((wghz - wghz.adjoint()).cwiseAbs().maxCoeff() > 0);
  CHECK((wghz - wghz.adjoint()).cwiseAbs().maxCoeff() < 0.011);
  const WitnessOperator W = reference_witness("wghz");
  CHECK(is_hermitian(W.matrix, 1e-12));
  CHECK((W.matrix - 0.5 * (wghz + wghz.adjoint())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("two-qubit reference detects the Bell state") {
  const WitnessOperator w1 = reference_witness("w1");
  const DensityMatrix bell = pure_to_density(bell_state(0, 0));
  // 1/2 (W[0,0] + W[0,3] + W[3,0] + W[3,3]) from the published entries.
  CHECK(w1.trace_with(bell) == doctest::Approx(-0.4530).epsilon(2e-3));
  CHECK(w1.trace_with(bell) ==
        doctest::Approx(expectation(w1.matrix, bell.mat)).epsilon(1e-12));
}

TEST_CASE("three-qubit GHZ reference detects the GHZ state") {
  const WitnessOperator wghz = reference_witness("wghz");
  const DensityMatrix ghz = pure_to_density(ghz_state(3));
  CHECK(wghz.trace_with(ghz) < -0.3);
}

TEST_SUITE_END();
