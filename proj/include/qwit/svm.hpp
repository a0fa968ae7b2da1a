#pragma once

#include <cstdint>

#include "qwit/qcore.hpp"

namespace qwit {

struct SvmModel {
  RVector w;
  double b = 0;
  double C = 10;
};

struct TrainConfig {
  double C = 10;
  double lr0 = 0.1;             // eta_t = lr0 / (1 + t / decay_scale)
  double decay_scale = 100;
  int max_epochs = 2000;
  double rel_tol = 1e-9;        // early stop on relative objective change
  int patience = 50;            // ... sustained over this many epochs
  std::uint64_t seed = 0;       // reserved; full-batch descent is seed-free
};

// Labeled features: rows of X are samples, y entries are +1/-1.
struct LabeledFeatures {
  Eigen::MatrixXd X;
  RVector y;
};

// 1/2 |w|^2 + C sum_i max(0, 1 - y_i (w . x_i + b))
double hinge_objective(const SvmModel& model, const LabeledFeatures& data);

// Subgradient of the objective at (w, b); samples exactly on the margin take
// the loss-active branch (deterministic tie-break).
struct Subgradient {
  RVector dw;
  double db = 0;
};
Subgradient hinge_subgradient(const SvmModel& model, const LabeledFeatures& data);

struct TrainResult {
  SvmModel model;
  double objective = 0;
  double accuracy = 0;  // training-set accuracy of the returned model
  int epochs = 0;
};

// Deterministic full-batch subgradient descent; returns the best iterate seen.
TrainResult train(const LabeledFeatures& data, const TrainConfig& config);

struct Prediction {
  int label = 0;          // +1 (separable) iff decision >= 0
  double decision = 0;    // w . x + b
};
Prediction predict(const SvmModel& model, const RVector& x);

double training_accuracy(const SvmModel& model, const LabeledFeatures& data);

}  // namespace qwit
