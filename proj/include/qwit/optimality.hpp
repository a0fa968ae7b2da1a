#pragma once

#include <cstdint>
#include <vector>

#include "qwit/witness.hpp"

namespace qwit {

struct TangentSet {
  std::vector<ProductState> states;   // each with |<v|W|v>| < eps_tan
  std::vector<double> values;
  int span_rank = 0;                  // numerical rank of the amplitude matrix
  bool reached_target = true;         // warning flag when fewer than requested
};

// Collects distinct product states on the witness hyperplane.  Local minima
// of <v|W|v> found by multi-start descent seed the search; because a trained
// witness typically touches the separable set at isolated points, additional
// tangent states are harvested from the eps_tan level set around each touch
// point (binary search along random directions in angle space).
TangentSet tangent_states(const WitnessOperator& W, int target_count, int restarts,
                          std::uint64_t seed);

enum class OptimalityVerdict { kOptimal, kInconclusive };

struct OptimalityReport {
  OptimalityVerdict verdict = OptimalityVerdict::kInconclusive;
  int span_rank = 0;
};

// OPTIMAL iff the tangent states span the full Hilbert space (rank 2^N):
// then no positive operator can be subtracted from W.  One-sided: a smaller
// rank proves nothing.
OptimalityReport optimality_verdict(const TangentSet& ts, int n_qubits);

struct PptesHit {
  EdgeStateParams params;
  double trace_value = 0;  // < 0: the witness detects this PPT state
};

// Scans the edge-state parameter cube (0.05, 0.95)^3 on a uniform grid plus
// one distinguished interior point; every grid state is asserted PPT on all
// single-qubit transposes before its witness trace is taken.  The seed is
// accepted for interface stability but the scan itself is a fixed grid.
std::vector<PptesHit> pptes_scan(const WitnessOperator& W, int grid_points_per_axis,
                                 std::uint64_t seed);

enum class DecomposabilityVerdict { kNondecomposable, kInconclusive };

// A decomposable witness cannot detect any PPT state, so one hit suffices.
DecomposabilityVerdict nondecomposability_verdict(const std::vector<PptesHit>& hits);

struct EdgeTraceCurve {
  char axis = 'a';
  // Numerator fit: n(x) * Tr(W rho(x)) = constant + inverse_coeff / x + linear_coeff * x.
  double constant = 0;
  double inverse_coeff = 0;
  double linear_coeff = 0;
  std::vector<std::pair<double, double>> samples;  // (x, Tr(W rho(x)))
  double max_residual = 0;
};

// Samples Tr(W rho_edge) along one of a|b|c with the other two fixed and
// verifies the alpha + beta/x + gamma*x functional form of the numerator.
EdgeTraceCurve edge_trace_curve(const WitnessOperator& W, char axis, double fixed1,
                                double fixed2);

}  // namespace qwit
