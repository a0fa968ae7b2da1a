#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwit/qcore.hpp"
#include "qwit/rng.hpp"

namespace qwit {

// N pairs of angles (theta in [0,pi], alpha in [0,2pi)); the amplitude vector
// is the tensor product of (cos theta/2, e^{i alpha} sin theta/2) per qubit.
struct ProductState {
  std::vector<std::pair<double, double>> angles;

  int n_qubits() const { return static_cast<int>(angles.size()); }
  PureState to_pure() const;
};

PureState bell_state(int i, int j);
PureState ghz_state(int n);

// 1/4 (I + c1 XX + c2 YY + c3 ZZ); rejects parameters outside the tetrahedron.
DensityMatrix bell_diagonal(double c1, double c2, double c3);

// p |psi><psi| + (1-p)/2^N I
DensityMatrix werner(const PureState& base, double p);

// GHZ_3 tensored with a fourth qubit cos(theta)|0> + e^{i alpha} sin(theta)|1>.
PureState ghz3_times_qubit(double theta, double alpha);

ProductState random_product_state(int n, Rng& rng);
DensityMatrix random_separable_mixture(int n, int k, Rng& rng);

struct EdgeStateParams {
  double a = 1, b = 1, c = 1;
  double normalization() const { return 2 + a + 1 / a + b + 1 / b + c + 1 / c; }
};

// The three-qubit bound-entangled edge state: diag(1,a,b,c,1/c,1/b,1/a,1)
// plus the two (0,7) corners, all divided by the normalization. PPT for every
// single-qubit transpose yet entangled for suitable parameters.
DensityMatrix edge_ppt_state(const EdgeStateParams& params);

struct LabeledSample {
  DensityMatrix rho;
  int label = 0;                 // +1 separable, -1 entangled
  std::string family;            // provenance tag
  std::string params;            // provenance parameters, human-readable
};

enum class EntangledFamily { kWerner, kEdge };

struct DatasetConfig {
  int n_qubits = 2;
  int per_class = 500;
  std::uint64_t seed = 7;
  EntangledFamily entangled_family = EntangledFamily::kWerner;
  // Werner entangled-class sampling range.
  double p_min = 0.5;
  double p_max = 1.0;
  // Separable-class composition.
  double mixture_fraction = 0.7;  // rest are sub-threshold Werner states
  int max_mixture_terms = 8;
  double separable_p_cap = -1;    // < 0 means "use the PPT boundary"
  // Edge-family sampling box (used when entangled_family == kEdge).
  double edge_lo[3] = {0.2, 0.2, 0.5};
  double edge_hi[3] = {0.5, 0.5, 0.95};
  // Base state of the Werner families; empty amplitudes means GHZ_N.
  PureState base_state;
};

// Balanced labeled set: every -1 sample NPT-verified (or edge-family, which
// is certified entangled downstream by the witness itself), every +1 sample a
// product mixture or sub-threshold Werner verified PPT on all bipartitions.
std::vector<LabeledSample> generate_dataset(const DatasetConfig& config);

// Werner separability boundary 1/(1 + 2^{N-1}) for a maximally entangled base.
double ppt_boundary(int n_qubits);

bool is_npt_any_bipartition(const DensityMatrix& rho);
bool is_ppt_all_bipartitions(const DensityMatrix& rho);

PureState resolve_base_state(const DatasetConfig& config);

}  // namespace qwit
