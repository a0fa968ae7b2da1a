#pragma once

#include <cstdint>
#include <vector>

#include "qwit/optimality.hpp"
#include "qwit/witness.hpp"

namespace qwit {

// End-to-end witness construction: train, then iteratively patch the
// hyperplane where it dips below the separable set (cutting-plane style:
// offending product states and jittered neighbours are appended as separable
// samples and the SVM is retrained), then calibrate the identity coefficient.
struct PipelineConfig {
  TrainConfig svm;
  int refine_rounds = 4;       // retraining rounds (0 disables refinement)
  int refine_top = 4;          // deepest dip states appended per round
  int refine_jitter = 5;       // jittered neighbours per dip state
  double refine_noise = 0.15;  // complex Gaussian jitter scale on qubit vectors
  double refine_stop = 1e-4;   // stop refining once the dip is above -this
  int restarts = 64;           // product-minimization restarts per round
  int calibrate_restarts = 128;
  std::uint64_t seed = 1;
};

struct TrainedWitness {
  SvmModel model;
  WitnessOperator witness;      // calibrated
  double train_accuracy = 0;
  double objective = 0;
  double calibration_shift = 0;
  int calibration_iterations = 0;
  int refine_rounds_used = 0;
  double final_dip = 0;         // product minimum before calibration
};

TrainedWitness build_witness(const LabeledFeatures& data, int n_qubits,
                             const PipelineConfig& config);

LabeledFeatures featurize(const std::vector<LabeledSample>& samples);

// Hyperparameters that reliably reach the detection targets per system size
// and entangled family, found empirically on the default datasets.
PipelineConfig default_pipeline_config(int n_qubits, EntangledFamily family);
DatasetConfig default_dataset_config(int n_qubits, EntangledFamily family);

}  // namespace qwit
