#pragma once

#include <string>
#include <vector>

#include "qwit/witness.hpp"

namespace qwit {

// Published witness matrices bundled for cross-checks: "w1" (two-qubit Bell
// witness), "wghz" (three-qubit GHZ witness), "ew22" (three-qubit
// non-decomposable witness), "w4" (four-qubit GHZ witness).
std::vector<std::string> reference_names();

// Raw matrix exactly as published (wghz carries a small asymmetry from
// rounding in the source; callers wanting an operator should prefer
// reference_witness, which projects onto the Hermitian part).
Matrix reference_matrix(const std::string& name);

WitnessOperator reference_witness(const std::string& name);

int reference_qubits(const std::string& name);

}  // namespace qwit
