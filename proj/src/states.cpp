#include "qwit/states.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qwit {

namespace {

CVector qubit_amplitudes(double theta, double alpha) {
  CVector q(2);
  q(0) = std::cos(theta / 2);
  q(1) = std::polar(std::sin(theta / 2), alpha);
  return q;
}

std::string format_params(const char* fmt, double x, double y = 0, double z = 0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, x, y, z);
  return buf;
}

}  // namespace

PureState ProductState::to_pure() const {
  CVector v = CVector::Ones(1);
  for (const auto& [theta, alpha] : angles) {
    const CVector q = qubit_amplitudes(theta, alpha);
    CVector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q(0);
      next(2 * i + 1) = v(i) * q(1);
    }
    v = std::move(next);
  }
  return PureState{n_qubits(), std::move(v)};
}

PureState bell_state(int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1))
    throw std::invalid_argument("bell_state: i, j must be bits");
  CVector v = CVector::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  v(j) = s;                              // |0,j>
  v(2 + (1 - j)) = (i == 0 ? s : -s);    // (-1)^i |1, 1^j>
  return PureState{2, std::move(v)};
}

PureState ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("ghz_state: need at least 2 qubits");
  CVector v = CVector::Zero(dim_of(n));
  v(0) = v(dim_of(n) - 1) = 1.0 / std::sqrt(2.0);
  return PureState{n, std::move(v)};
}

DensityMatrix bell_diagonal(double c1, double c2, double c3) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double sign_i = (i == 0) ? 1 : -1;
      const double sign_ij = ((i + j) % 2 == 0) ? 1 : -1;
      const double sign_j = (j == 0) ? 1 : -1;
      const double lambda = 0.25 * (1 + sign_i * c1 - sign_ij * c2 + sign_j * c3);
      if (lambda < -kPsdTol) throw std::invalid_argument("bell_diagonal: outside tetrahedron");
    }
  }
  const auto& paulis = pauli_table(2);
  Matrix m = 0.25 * (Matrix::Identity(4, 4) + c1 * paulis[PauliString{{Pauli::X, Pauli::X}}.index()] +
                     c2 * paulis[PauliString{{Pauli::Y, Pauli::Y}}.index()] +
                     c3 * paulis[PauliString{{Pauli::Z, Pauli::Z}}.index()]);
  return DensityMatrix::checked(2, std::move(m));
}

DensityMatrix werner(const PureState& base, double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("werner: p outside [0,1]");
  const int d = dim_of(base.n_qubits);
  Matrix m = p * base.projector() + (1 - p) / d * Matrix::Identity(d, d);
  return DensityMatrix{base.n_qubits, std::move(m)};
}

PureState ghz3_times_qubit(double theta, double alpha) {
  const PureState g = ghz_state(3);
  const CVector q = qubit_amplitudes(theta, alpha);
  CVector v(16);
  for (int i = 0; i < 8; ++i) {
    v(2 * i) = g.amplitudes(i) * q(0);
    v(2 * i + 1) = g.amplitudes(i) * q(1);
  }
  return PureState{4, std::move(v)};
}

ProductState random_product_state(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_product_state: need at least 1 qubit");
  ProductState out;
  out.angles.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    // theta = arccos(1-2u) gives the Haar marginal on the Bloch sphere.
    out.angles.emplace_back(std::acos(1 - 2 * u), 2 * M_PI * v);
  }
  return out;
}

DensityMatrix random_separable_mixture(int n, int k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("random_separable_mixture: need at least 1 term");
  // Uniform simplex weights via normalized exponential draws.
  std::vector<double> weights(k);
  double total = 0;
  for (double& w : weights) {
    double u;
    do {
      u = rng.uniform();
    } while (u == 0.0);
    w = -std::log(u);
    total += w;
  }
  const int d = dim_of(n);
  Matrix m = Matrix::Zero(d, d);
  for (double w : weights) m += (w / total) * random_product_state(n, rng).to_pure().projector();
  return DensityMatrix{n, std::move(m)};
}

DensityMatrix edge_ppt_state(const EdgeStateParams& params) {
  if (params.a <= 0 || params.b <= 0 || params.c <= 0)
    throw std::invalid_argument("edge_ppt_state: parameters must be positive");
  const double n = params.normalization();
  Matrix m = Matrix::Zero(8, 8);
  const double diag[8] = {1, params.a, params.b, params.c,
                          1 / params.c, 1 / params.b, 1 / params.a, 1};
  for (int i = 0; i < 8; ++i) m(i, i) = diag[i] / n;
  m(0, 7) = m(7, 0) = 1.0 / n;
  return DensityMatrix{3, std::move(m)};
}

double ppt_boundary(int n_qubits) { return 1.0 / (1 + dim_of(n_qubits - 1)); }

bool is_npt_any_bipartition(const DensityMatrix& rho) {
  return !is_ppt_all_bipartitions(rho);
}

bool is_ppt_all_bipartitions(const DensityMatrix& rho) {
  const int n = rho.n_qubits;
  // Every nontrivial bipartition, enumerated once (a subset and its
  // complement give transposed matrices with identical spectra).
  for (int mask = 1; mask < dim_of(n - 1); ++mask) {
    std::set<int> subs;
    for (int q = 1; q <= n; ++q)
      if ((mask >> (q - 1)) & 1) subs.insert(q);
    if (!is_ppt(rho, subs)) return false;
  }
  return true;
}

PureState resolve_base_state(const DatasetConfig& config) {
  if (config.base_state.amplitudes.size() > 0) {
    if (config.base_state.n_qubits != config.n_qubits)
      throw std::invalid_argument("dataset: base state qubit count mismatch");
    return config.base_state;
  }
  return ghz_state(config.n_qubits);
}

std::vector<LabeledSample> generate_dataset(const DatasetConfig& config) {
  if (config.n_qubits < 2 || config.per_class < 1)
    throw std::invalid_argument("dataset: invalid configuration");
  if (config.entangled_family == EntangledFamily::kEdge && config.n_qubits != 3)
    throw std::invalid_argument("dataset: edge family is three-qubit only");

  const PureState base = resolve_base_state(config);
  const double p_cap =
      config.separable_p_cap >= 0 ? config.separable_p_cap : ppt_boundary(config.n_qubits);
  const int mixtures = static_cast<int>(config.mixture_fraction * config.per_class);

  std::vector<LabeledSample> samples;
  samples.reserve(2 * config.per_class);

  for (int i = 0; i < config.per_class; ++i) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(i)));
    LabeledSample s;
    s.label = +1;
    if (i < mixtures) {
      const int k = rng.uniform_int(1, config.max_mixture_terms);
      s.rho = random_separable_mixture(config.n_qubits, k, rng);
      s.family = "product-mixture";
      s.params = format_params("k=%.0f", static_cast<double>(k));
    } else {
      const double p = rng.uniform() * p_cap;
      s.rho = werner(base, p);
      s.family = "werner-separable";
      s.params = format_params("p=%.17g", p);
    }
    if (!is_ppt_all_bipartitions(s.rho))
      throw std::runtime_error("dataset: separable sample failed the PPT check");
    samples.push_back(std::move(s));
  }

  for (int i = 0; i < config.per_class; ++i) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(config.per_class + i)));
    LabeledSample s;
    s.label = -1;
    if (config.entangled_family == EntangledFamily::kWerner) {
      bool realized = false;
      for (int attempt = 0; attempt < 1000 && !realized; ++attempt) {
        const double p = config.p_min + (config.p_max - config.p_min) * rng.uniform();
        DensityMatrix rho = werner(base, p);
        if (is_npt_any_bipartition(rho)) {
          s.rho = std::move(rho);
          s.family = "werner-entangled";
          s.params = format_params("p=%.17g", p);
          realized = true;
        }
      }
      if (!realized)
        throw std::runtime_error("cannot realize entangled sample in configured range");
    } else {
      EdgeStateParams p;
      p.a = config.edge_lo[0] + (config.edge_hi[0] - config.edge_lo[0]) * rng.uniform();
      p.b = config.edge_lo[1] + (config.edge_hi[1] - config.edge_lo[1]) * rng.uniform();
      p.c = config.edge_lo[2] + (config.edge_hi[2] - config.edge_lo[2]) * rng.uniform();
      s.rho = edge_ppt_state(p);
      // Edge states are PPT by construction: entanglement is certified later
      // by the non-decomposable witness, not by an NPT check here.
      s.family = "edge-ppt-entangled";
      s.params = format_params("a=%.17g b=%.17g c=%.17g", p.a, p.b, p.c);
    }
    samples.push_back(std::move(s));
  }

  return samples;
}

}  // namespace qwit
