#include "qwit/svm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qwit {

namespace {

void check_dims(const SvmModel& model, const LabeledFeatures& data) {
  if (data.X.rows() != data.y.size() || data.X.cols() != model.w.size())
    throw std::invalid_argument("svm: dimension mismatch");
}

}  // namespace

double hinge_objective(const SvmModel& model, const LabeledFeatures& data) {
  check_dims(model, data);
  const RVector decisions = ((data.X * model.w).array() + model.b).matrix();
  const RVector margins = data.y.cwiseProduct(decisions);
  double loss = 0;
  for (Eigen::Index i = 0; i < margins.size(); ++i) loss += std::max(0.0, 1.0 - margins(i));
  return 0.5 * model.w.squaredNorm() + model.C * loss;
}

Subgradient hinge_subgradient(const SvmModel& model, const LabeledFeatures& data) {
  check_dims(model, data);
  const RVector decisions = ((data.X * model.w).array() + model.b).matrix();
  const RVector margins = data.y.cwiseProduct(decisions);
  Subgradient g;
  g.dw = model.w;
  g.db = 0;
  for (Eigen::Index i = 0; i < margins.size(); ++i) {
    if (margins(i) <= 1.0) {  // on-margin samples take the active branch
      g.dw -= model.C * data.y(i) * data.X.row(i).transpose();
      g.db -= model.C * data.y(i);
    }
  }
  return g;
}

TrainResult train(const LabeledFeatures& data, const TrainConfig& config) {
  const Eigen::Index m = data.X.rows();
  if (m == 0 || data.y.size() != m) throw std::invalid_argument("svm: bad training data");
  if (!data.X.allFinite() || !data.y.allFinite())
    throw std::invalid_argument("svm: non-finite features");
  bool has_pos = false, has_neg = false;
  for (Eigen::Index i = 0; i < m; ++i) (data.y(i) > 0 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) throw std::invalid_argument("degenerate dataset");

  SvmModel model{RVector::Zero(data.X.cols()), 0.0, config.C};
  double best_objective = hinge_objective(model, data);
  SvmModel best_model = model;
  double previous_objective = best_objective;
  double last_improved_objective = best_objective;
  int stale_epochs = 0;
  int epoch = 0;

  for (; epoch < config.max_epochs; ++epoch) {
    const Subgradient g = hinge_subgradient(model, data);
    const double eta = config.lr0 / (1.0 + epoch / config.decay_scale);
    // Scale the step by 1/m: the objective sums over samples, so its raw
    // subgradient grows with the dataset and would overshoot otherwise.
    model.w -= (eta / m) * g.dw;
    model.b -= (eta / m) * g.db;

    const double objective = hinge_objective(model, data);
    // Divergence means the objective blew up within a single epoch; kink
    // overshoot during normal oscillation stays well under this factor.
    if (!std::isfinite(objective) || objective > 10.0 * previous_objective) {
      std::ostringstream msg;
      msg << "svm: divergence at epoch " << epoch << " (objective " << objective
          << ", previous " << previous_objective << "); lower lr0 or C";
      throw std::runtime_error(msg.str());
    }
    previous_objective = objective;
    if (objective < best_objective) {
      best_objective = objective;
      best_model = model;
    }
    // Early stop when the best objective has stopped moving.
    if (last_improved_objective - best_objective < config.rel_tol * std::abs(best_objective)) {
      if (++stale_epochs >= config.patience) {
        ++epoch;
        break;
      }
    } else {
      stale_epochs = 0;
      last_improved_objective = best_objective;
    }
  }

  TrainResult result;
  result.model = std::move(best_model);
  result.objective = best_objective;
  result.accuracy = training_accuracy(result.model, data);
  result.epochs = epoch;
  return result;
}

Prediction predict(const SvmModel& model, const RVector& x) {
  if (x.size() != model.w.size()) throw std::invalid_argument("predict: dimension mismatch");
  const double decision = model.w.dot(x) + model.b;
  return Prediction{decision >= 0 ? +1 : -1, decision};
}

double training_accuracy(const SvmModel& model, const LabeledFeatures& data) {
  check_dims(model, data);
  Eigen::Index correct = 0;
  for (Eigen::Index i = 0; i < data.X.rows(); ++i) {
    const double decision = data.X.row(i).dot(model.w) + model.b;
    const int label = decision >= 0 ? +1 : -1;
    if (label * data.y(i) > 0) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.X.rows());
}

}  // namespace qwit
