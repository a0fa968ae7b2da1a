#include "qwit/references.hpp"

#include <stdexcept>

namespace qwit {

namespace {

const double kW1[16][2] = {
    {0.0545, 0.0}, {-0.0019, 0.0017}, {-0.0098, -0.0014}, {-0.5066, 0.0053},
    {-0.0019, -0.0017}, {0.4134, 0.0}, {-0.0091, 0.0195}, {0.0199, -0.0059},
    {-0.0098, 0.0014}, {-0.0091, -0.0195}, {0.4793, 0.0}, {-0.0052, 0.0076},
    {-0.5066, -0.0053}, {0.0199, 0.0059}, {-0.0052, -0.0076}, {0.0526, 0.0},
};

const double kWghz[64][2] = {
    {0.053, 0.0}, {-0.005, -0.008}, {-0.001, 0.004}, {-0.013, 0.012}, {0.0, -0.008}, {-0.011, -0.006}, {-0.002, -0.018}, {-0.373, -0.004},
    {-0.005, 0.008}, {0.162, 0.0}, {0.005, 0.0}, {-0.008, -0.01}, {0.016, 0.013}, {-0.008, -0.009}, {0.011, 0.004}, {0.022, -0.004},
    {-0.001, -0.004}, {0.005, 0.001}, {0.164, 0.0}, {-0.012, 0.005}, {-0.008, 0.003}, {0.009, 0.0}, {0.009, -0.008}, {0.009, 0.001},
    {-0.013, -0.012}, {-0.008, 0.01}, {-0.012, 0.0}, {0.126, 0.0}, {-0.005, 0.004}, {-0.006, -0.007}, {0.005, 0.001}, {0.005, 0.001},
    {0.0, 0.008}, {0.016, -0.013}, {-0.008, -0.003}, {-0.005, -0.004}, {0.159, 0.0}, {0.007, -0.008}, {-0.006, -0.008}, {0.011, -0.007},
    {-0.011, 0.006}, {-0.008, 0.009}, {0.009, 0.0}, {-0.006, 0.007}, {0.007, 0.008}, {0.135, 0.0}, {0.01, 0.012}, {-0.001, 0.0},
    {-0.002, 0.018}, {0.011, -0.004}, {0.009, 0.008}, {0.005, -0.001}, {-0.006, 0.008}, {0.01, -0.012}, {0.147, 0.0}, {-0.001, -0.008},
    {-0.373, 0.004}, {0.022, 0.004}, {0.009, -0.001}, {0.005, -0.001}, {0.011, 0.007}, {-0.001, 0.0}, {-0.001, 0.008}, {0.051, 0.0},
};

const double kEw22[64][2] = {
    {0.359, 0.0}, {-0.004, -0.0189}, {-0.0045, 0.0429}, {0.0358, 0.008}, {-0.0028, -0.0009}, {0.0037, 0.0085}, {0.0362, -0.0143}, {-0.4971, 0.068},
    {-0.0046, 0.0189}, {0.0972, 0.0}, {-0.0177, -0.0214}, {-0.0255, -0.0078}, {0.0062, -0.0269}, {-0.0167, 0.0079}, {0.0248, -0.0502}, {-0.0148, 0.0053},
    {-0.0045, -0.0429}, {-0.0177, 0.0214}, {0.123, 0.0}, {-0.015, -0.0022}, {-0.0043, -0.0159}, {0.0046, -0.0226}, {0.0183, -0.0088}, {0.026, -0.0287},
    {0.0358, -0.008}, {-0.0255, 0.0078}, {-0.015, 0.0022}, {0.0074, 0.0}, {0.0408, -0.019}, {0.0263, 0.017}, {-0.0226, 0.0633}, {-0.0109, -0.0015},
    {-0.0028, 0.0009}, {0.0062, 0.0269}, {-0.0043, 0.0159}, {0.0408, 0.019}, {0.0006, 0.0}, {-0.0007, 0.0018}, {-0.0062, 0.0021}, {0.0003, -0.0245},
    {0.0037, -0.0085}, {-0.0167, -0.0079}, {0.0046, 0.0226}, {0.0263, -0.017}, {-0.0007, -0.0018}, {0.0009, 0.0}, {-0.0153, -0.0065}, {0.0146, -0.0077},
    {0.0362, 0.0143}, {0.0248, 0.0502}, {0.0183, 0.0088}, {-0.0226, -0.0633}, {-0.0062, -0.0021}, {-0.0153, 0.0065}, {0.0007, 0.0}, {0.002, 0.0038},
    {-0.4971, -0.068}, {-0.0148, -0.0053}, {0.026, 0.0287}, {-0.0109, 0.0015}, {0.0003, 0.0245}, {0.0146, 0.0077}, {0.002, -0.0038}, {0.4107, 0.0},
};

const double kW4[256][2] = {
    {0.059, 0.0}, {0.002, 0.001}, {0.001, 0.003}, {-0.0, -0.007}, {0.0, -0.002}, {-0.003, 0.0}, {0.0, 0.0}, {0.001, 0.006}, {0.0, -0.001}, {0.011, 0.005}, {-0.001, 0.0}, {0.0, 0.001}, {0.004, -0.002}, {0.012, -0.001}, {0.001, 0.005}, {-0.607, 0.002},
    {0.002, -0.001}, {0.065, 0.0}, {0.113, 0.0}, {0.003, -0.003}, {0.005, 0.006}, {0.001, 0.002}, {-0.004, -0.002}, {-0.004, 0.009}, {0.014, -0.003}, {0.002, 0.003}, {0.002, 0.005}, {0.0, -0.001}, {0.001, 0.001}, {0.002, -0.002}, {0.0, -0.006}, {-0.005, 0.005},
    {0.001, -0.003}, {0.113, 0.0}, {0.063, 0.0}, {-0.001, -0.004}, {-0.001, -0.003}, {-0.004, -0.002}, {0.001, -0.001}, {0.01, -0.004}, {-0.001, 0.0}, {0.002, 0.005}, {0.003, 0.0}, {-0.001, 0.006}, {-0.005, 0.0}, {0.0, -0.006}, {0.001, -0.002}, {-0.007, -0.008},
    {0.0, 0.007}, {0.003, 0.003}, {-0.001, 0.004}, {0.056, 0.0}, {0.001, -0.004}, {0.004, -0.006}, {0.004, -0.005}, {0.001, 0.0}, {-0.01, 0.001}, {-0.005, 0.006}, {-0.001, 0.005}, {0.001, 0.001}, {0.004, -0.01}, {0.003, -0.004}, {-0.005, -0.009}, {0.0, 0.004},
    {0.0, 0.002}, {0.005, -0.006}, {-0.001, 0.003}, {0.001, 0.004}, {0.065, 0.0}, {-0.003, 0.0}, {-0.001, 0.001}, {-0.002, 0.007}, {0.002, -0.003}, {0.005, 0.005}, {0.007, -0.001}, {0.008, 0.005}, {0.001, -0.001}, {0.003, 0.0}, {0.005, 0.002}, {0.005, 0.001},
    {-0.003, 0.0}, {0.001, -0.002}, {-0.004, 0.002}, {0.004, 0.006}, {-0.003, 0.0}, {0.061, 0.0}, {0.11, 0.0}, {-0.001, -0.01}, {-0.007, -0.005}, {-0.006, -0.008}, {0.002, -0.021}, {-0.005, 0.01}, {-0.002, 0.001}, {-0.003, -0.001}, {-0.002, -0.003}, {-0.007, -0.003},
    {0.0, 0.0}, {-0.004, 0.002}, {0.001, 0.001}, {0.004, 0.005}, {-0.001, -0.001}, {0.11, 0.0}, {0.058, 0.0}, {-0.009, 0.004}, {-0.004, 0.003}, {0.002, -0.021}, {0.004, -0.001}, {0.018, 0.012}, {-0.001, -0.001}, {-0.002, -0.003}, {0.001, -0.003}, {-0.007, -0.003},
    {0.001, -0.006}, {-0.004, -0.009}, {0.01, 0.004}, {0.001, 0.0}, {-0.002, -0.007}, {-0.001, 0.01}, {-0.009, -0.004}, {0.072, 0.0}, {0.0, 0.002}, {0.0, -0.008}, {-0.008, 0.006}, {0.011, -0.003}, {-0.011, -0.001}, {-0.007, -0.001}, {0.009, -0.007}, {0.002, 0.0},
    {0.0, 0.001}, {0.014, 0.003}, {-0.001, 0.0}, {-0.01, -0.001}, {0.002, 0.003}, {-0.007, 0.005}, {-0.004, -0.003}, {-0.0, -0.002}, {0.065, 0.0}, {0.002, 0.0}, {0.005, -0.003}, {0.003, -0.006}, {0.003, 0.003}, {-0.004, -0.004}, {-0.001, -0.006}, {0.001, -0.001},
    {0.011, -0.005}, {0.002, -0.003}, {0.002, -0.005}, {-0.005, -0.006}, {0.005, -0.005}, {-0.006, 0.008}, {0.002, 0.021}, {0.0, 0.008}, {0.002, 0.0}, {0.061, 0.0}, {0.101, 0.0}, {0.0, 0.002}, {-0.006, 0.0}, {-0.002, -0.001}, {-0.004, 0.005}, {0.0, -0.005},
    {-0.001, 0.0}, {0.002, -0.005}, {0.003, 0.0}, {-0.001, -0.005}, {0.007, 0.001}, {0.002, 0.021}, {0.004, 0.001}, {-0.008, -0.006}, {0.005, 0.003}, {0.101, 0.0}, {0.061, 0.0}, {0.003, 0.009}, {-0.008, -0.01}, {-0.004, 0.005}, {-0.001, 0.0}, {-0.007, -0.005},
    {-0.0, -0.001}, {0.0, 0.001}, {-0.001, -0.006}, {0.001, -0.001}, {0.008, -0.005}, {-0.005, -0.01}, {0.018, -0.012}, {0.011, 0.003}, {0.003, 0.006}, {-0.0, -0.002}, {0.003, -0.009}, {0.069, 0.0}, {0.003, 0.005}, {-0.003, 0.007}, {-0.003, 0.003}, {0.004, 0.003},
    {0.004, 0.002}, {0.001, -0.001}, {-0.005, 0.0}, {0.004, 0.01}, {0.001, 0.001}, {-0.002, -0.001}, {-0.001, 0.001}, {-0.011, 0.001}, {0.003, -0.003}, {-0.006, 0.0}, {-0.008, 0.01}, {0.003, -0.005}, {0.062, 0.0}, {-0.002, 0.0}, {-0.004, 0.001}, {-0.007, -0.005},
    {0.012, 0.001}, {0.002, 0.002}, {0.0, 0.006}, {0.003, 0.004}, {0.003, 0.0}, {-0.003, 0.001}, {-0.002, 0.003}, {-0.007, 0.001}, {-0.004, 0.004}, {-0.002, 0.001}, {-0.004, -0.005}, {-0.003, -0.007}, {-0.002, 0.0}, {0.063, 0.0}, {0.104, 0.0}, {0.0, 0.0},
    {0.001, -0.005}, {0.0, 0.006}, {0.001, 0.002}, {-0.005, 0.009}, {0.005, -0.002}, {-0.002, 0.003}, {0.001, 0.003}, {0.009, 0.007}, {-0.001, 0.006}, {-0.004, -0.005}, {-0.001, 0.0}, {-0.003, -0.003}, {-0.004, -0.001}, {0.104, 0.0}, {0.067, 0.0}, {0.0, 0.005},
    {-0.607, -0.002}, {-0.005, -0.005}, {-0.007, 0.008}, {0.0, -0.004}, {0.005, -0.001}, {-0.007, 0.003}, {-0.007, 0.003}, {0.002, 0.0}, {0.001, 0.001}, {0.0, 0.005}, {-0.007, 0.005}, {0.004, -0.003}, {-0.007, 0.005}, {0.0, 0.0}, {-0.0, -0.005}, {0.055, 0.0},
};

Matrix build(const double (*entries)[2], int d) {
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = Complex(entries[r * d + c][0], entries[r * d + c][1]);
  return m;
}

}  // namespace

std::vector<std::string> reference_names() { return {"w1", "wghz", "ew22", "w4"}; }

int reference_qubits(const std::string& name) {
  if (name == "w1") return 2;
  if (name == "wghz" || name == "ew22") return 3;
  if (name == "w4") return 4;
  throw std::invalid_argument("unknown reference witness: " + name);
}

Matrix reference_matrix(const std::string& name) {
  if (name == "w1") return build(kW1, 4);
  if (name == "wghz") return build(kWghz, 8);
  if (name == "ew22") return build(kEw22, 8);
  if (name == "w4") return build(kW4, 16);
  throw std::invalid_argument("unknown reference witness: " + name);
}

WitnessOperator reference_witness(const std::string& name) {
  // Pauli projection with real coefficients keeps exactly the Hermitian part
  // and preserves the published scale (no unit-trace rescaling).
  return WitnessOperator::from_matrix(reference_qubits(name), reference_matrix(name),
                                      /*normalize=*/false);
}

}  // namespace qwit
