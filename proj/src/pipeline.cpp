#include "qwit/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "qwit/rng.hpp"

namespace qwit {

namespace {

// Jittered copy of a product state: perturb each qubit vector with complex
// Gaussian noise and renormalize.  Used to thicken the separable evidence
// around a dip so one retraining round fixes a whole neighbourhood.
PureState jitter_product(const ProductState& state, double noise, Rng& rng) {
  CVector v = CVector::Ones(1);
  for (const auto& [theta, alpha] : state.angles) {
    CVector q(2);
    q(0) = std::cos(theta / 2) + noise * Complex(rng.normal(), rng.normal());
    q(1) = std::polar(std::sin(theta / 2), alpha) + noise * Complex(rng.normal(), rng.normal());
    q /= q.norm();
    CVector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q(0);
      next(2 * i + 1) = v(i) * q(1);
    }
    v = std::move(next);
  }
  return PureState{state.n_qubits(), std::move(v)};
}

void append_separable(LabeledFeatures& data, const FeatureVector& f) {
  const Eigen::Index row = data.X.rows();
  data.X.conservativeResize(row + 1, Eigen::NoChange);
  data.y.conservativeResize(row + 1);
  data.X.row(row) = f.values.transpose();
  data.y(row) = +1;
}

}  // namespace

LabeledFeatures featurize(const std::vector<LabeledSample>& samples) {
  if (samples.empty()) throw std::invalid_argument("featurize: empty sample list");
  LabeledFeatures data;
  const FeatureVector first = feature_vector(samples.front().rho);
  data.X.resize(static_cast<Eigen::Index>(samples.size()), first.values.size());
  data.y.resize(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    data.X.row(static_cast<Eigen::Index>(i)) =
        feature_vector(samples[i].rho).values.transpose();
    data.y(static_cast<Eigen::Index>(i)) = samples[i].label;
  }
  return data;
}

TrainedWitness build_witness(const LabeledFeatures& data, int n_qubits,
                             const PipelineConfig& config) {
  LabeledFeatures work = data;
  TrainedWitness out;
  WitnessOperator W;

  for (int round = 0; round <= config.refine_rounds; ++round) {
    const TrainResult trained = train(work, config.svm);
    W = assemble_witness(trained.model);
    out.model = trained.model;
    out.train_accuracy = trained.accuracy;
    out.objective = trained.objective;
    out.refine_rounds_used = round;

    // Local dips of <v|W|v> below zero are places where the hyperplane cuts
    // into the separable set.
    std::vector<ProductMin> dips;
    dips.reserve(config.restarts);
    for (int r = 0; r < config.restarts; ++r) {
      Rng rng(Rng::derive(config.seed,
                          0x1000 + static_cast<std::uint64_t>(round) * config.restarts + r));
      dips.push_back(product_descent(W, random_product_state(n_qubits, rng)));
    }
    std::sort(dips.begin(), dips.end(),
              [](const ProductMin& a, const ProductMin& b) { return a.value < b.value; });
    out.final_dip = dips.front().value;
    if (round == config.refine_rounds || out.final_dip > -config.refine_stop) break;

    Rng jitter_rng(Rng::derive(config.seed, 0x2000 + round));
    for (int i = 0; i < config.refine_top && i < static_cast<int>(dips.size()); ++i) {
      if (dips[i].value > -1e-7) break;
      const PureState dip_state = dips[i].state.to_pure();
      append_separable(work, feature_vector(pure_to_density(dip_state)));
      for (int j = 0; j < config.refine_jitter; ++j) {
        const PureState neighbour =
            jitter_product(dips[i].state, config.refine_noise, jitter_rng);
        append_separable(work, feature_vector(pure_to_density(neighbour)));
      }
    }
  }

  const CalibrationResult calibrated =
      calibrate(W, config.calibrate_restarts, Rng::derive(config.seed, 0xCA11));
  out.witness = calibrated.witness;
  out.calibration_shift = calibrated.total_shift;
  out.calibration_iterations = calibrated.iterations;
  return out;
}

PipelineConfig default_pipeline_config(int n_qubits, EntangledFamily family) {
  PipelineConfig cfg;
  cfg.svm.rel_tol = 0;  // run the full epoch budget; determinism over speed
  if (family == EntangledFamily::kEdge) {
    cfg.svm.C = 100;
    cfg.svm.lr0 = 0.05;  // larger steps overshoot the divergence guard at this C
    cfg.svm.max_epochs = 6000;
    cfg.refine_rounds = 20;
    cfg.refine_top = 8;
    cfg.refine_noise = 0.12;
    cfg.restarts = 96;
    return cfg;
  }
  switch (n_qubits) {
    case 2:
      cfg.svm.C = 10;
      cfg.svm.lr0 = 0.1;
      cfg.svm.max_epochs = 2000;
      cfg.refine_rounds = 4;
      break;
    case 3:
      cfg.svm.C = 10;
      cfg.svm.lr0 = 0.1;
      cfg.svm.max_epochs = 2000;
      cfg.refine_rounds = 6;
      break;
    case 4:
      cfg.svm.C = 100;
      cfg.svm.lr0 = 0.1;
      cfg.svm.max_epochs = 6000;
      cfg.refine_rounds = 8;
      break;
    default:
      throw std::invalid_argument("default_pipeline_config: 2 to 4 qubits");
  }
  return cfg;
}

DatasetConfig default_dataset_config(int n_qubits, EntangledFamily family) {
  DatasetConfig cfg;
  cfg.n_qubits = n_qubits;
  cfg.entangled_family = family;
  if (family == EntangledFamily::kWerner) {
    switch (n_qubits) {
      case 2: cfg.p_min = 0.5; break;
      case 3: cfg.p_min = 0.6; break;   // the published three-qubit sampling range
      case 4: cfg.p_min = 0.13; break;  // close to the detection floor
      default: throw std::invalid_argument("default_dataset_config: 2 to 4 qubits");
    }
  }
  return cfg;
}

}  // namespace qwit
