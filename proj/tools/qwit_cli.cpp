// Command-line front end: dataset generation, training, certification and
// PCA export, with seed-deterministic outputs throughout.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "qwit/io.hpp"
#include "qwit/pipeline.hpp"
#include "qwit/references.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerdict = 3;
constexpr int kExitIo = 4;

struct VerdictFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

qwit::EntangledFamily parse_family(const std::string& name) {
  if (name == "werner") return qwit::EntangledFamily::kWerner;
  if (name == "edge") return qwit::EntangledFamily::kEdge;
  throw CLI::ValidationError("--family must be werner or edge");
}

int cmd_gen(int qubits, int per_class, std::uint64_t seed, const std::string& family,
            double p_min, double p_max, const std::string& out) {
  qwit::DatasetConfig config = qwit::default_dataset_config(qubits, parse_family(family));
  config.per_class = per_class;
  config.seed = seed;
  if (p_min >= 0) config.p_min = p_min;
  if (p_max >= 0) config.p_max = p_max;

  const auto samples = qwit::generate_dataset(config);
  qwit::write_dataset(out + ".csv", samples, config);

  int separable = 0, entangled = 0;
  for (const auto& s : samples) (s.label > 0 ? separable : entangled)++;
  std::cout << "wrote " << out << ".csv: " << separable << " separable, " << entangled
            << " entangled (" << qubits << " qubits, seed " << seed << ")\n";
  return kExitOk;
}

void print_threshold(const qwit::ThresholdReport& t) {
  std::cout << "threshold: Tr(W rho_p) = " << short_num(t.slope) << " p + "
            << short_num(t.intercept);
  if (t.detects)
    std::cout << ", detects Werner family for p > " << short_num(t.crossing) << "\n";
  else
    std::cout << ", family not detected\n";
}

int cmd_train(const std::string& data_path, const std::string& out,
              const std::string& load_reference, const CLI::App* cmd, double C, int epochs,
              double lr, std::uint64_t seed, int restarts, int refine_rounds) {
  if (!load_reference.empty()) {
    // Cross-check path: calibrate and verify a bundled published matrix.
    const qwit::WitnessOperator raw = qwit::reference_witness(load_reference);
    const auto calibrated = qwit::calibrate(raw, restarts > 0 ? restarts : 256, seed);
    const auto report = qwit::verify_witness(calibrated.witness, restarts > 0 ? restarts : 256,
                                             seed + 1);
    std::cout << "reference " << load_reference << ": calibration shift "
              << short_num(calibrated.total_shift) << ", min product value "
              << short_num(report.min_product_value) << ", min eigenvalue "
              << short_num(report.min_eigenvalue) << "\n";
    if (!report.valid) throw VerdictFailure(report.failure);
    std::vector<std::pair<std::string, std::string>> fields = {
        {"source", "reference:" + load_reference},
        {"calibration_shift", qwit::format_double(calibrated.total_shift)},
        {"min_product_value", qwit::format_double(report.min_product_value)},
        {"min_eigenvalue", qwit::format_double(report.min_eigenvalue)},
        {"verdict", "valid"},
    };
    qwit::write_witness(out + ".ew", calibrated.witness, fields);
    std::cout << "wrote " << out << ".ew (valid witness)\n";
    return kExitOk;
  }

  const qwit::LoadedDataset dataset = qwit::read_dataset(data_path);
  const int n = dataset.n_qubits;
  auto family = qwit::EntangledFamily::kWerner;
  if (auto it = dataset.metadata.find("entangled_family");
      it != dataset.metadata.end() && it->second == "edge")
    family = qwit::EntangledFamily::kEdge;

  qwit::PipelineConfig config = qwit::default_pipeline_config(n, family);
  config.seed = seed;
  if (cmd->count("--C")) config.svm.C = C;
  if (cmd->count("--epochs")) config.svm.max_epochs = epochs;
  if (cmd->count("--lr")) config.svm.lr0 = lr;
  if (cmd->count("--restarts")) config.restarts = restarts;
  if (cmd->count("--refine-rounds")) config.refine_rounds = refine_rounds;

  const qwit::TrainedWitness result = qwit::build_witness(dataset.data, n, config);
  const auto report =
      qwit::verify_witness(result.witness, config.calibrate_restarts, config.seed + 1);

  std::cout << "training accuracy " << short_num(result.train_accuracy) << " (objective "
            << short_num(result.objective) << ", " << result.refine_rounds_used
            << " refinement rounds)\n";
  std::cout << "min product value " << short_num(report.min_product_value)
            << ", min eigenvalue " << short_num(report.min_eigenvalue) << "\n";

  std::vector<std::pair<std::string, std::string>> fields = {
      {"source", "trained"},
      {"seed", std::to_string(config.seed)},
      {"accuracy", qwit::format_double(result.train_accuracy)},
      {"objective", qwit::format_double(result.objective)},
      {"refine_rounds", std::to_string(result.refine_rounds_used)},
      {"calibration_shift", qwit::format_double(result.calibration_shift)},
      {"min_product_value", qwit::format_double(report.min_product_value)},
      {"min_eigenvalue", qwit::format_double(report.min_eigenvalue)},
      {"verdict", report.valid ? "valid" : report.failure},
  };

  if (family == qwit::EntangledFamily::kWerner) {
    const auto threshold =
        qwit::detection_threshold(result.witness, qwit::ghz_state(n));
    print_threshold(threshold);
    fields.emplace_back("threshold_slope", qwit::format_double(threshold.slope));
    fields.emplace_back("threshold_intercept", qwit::format_double(threshold.intercept));
    fields.emplace_back("threshold_crossing", qwit::format_double(threshold.crossing));
  }

  std::map<std::string, std::string> model_meta = {
      {"seed", std::to_string(config.seed)},
      {"epochs", std::to_string(config.svm.max_epochs)},
      {"lr0", qwit::format_double(config.svm.lr0)},
      {"objective", qwit::format_double(result.objective)},
      {"accuracy", qwit::format_double(result.train_accuracy)},
  };
  qwit::write_model(out + ".model", result.model, model_meta);
  qwit::write_witness(out + ".ew", result.witness, fields);
  std::cout << "wrote " << out << ".model and " << out << ".ew\n";

  if (!report.valid) throw VerdictFailure(report.failure);
  return kExitOk;
}

int cmd_certify(const std::string& witness_path, const std::string& out, int restarts,
                int target, int grid, std::uint64_t seed, bool skip_calibrate) {
  qwit::WitnessOperator W = qwit::read_witness(witness_path).witness;
  std::ostringstream report;
  report << "qwit-certify v1\n";
  report << "witness " << witness_path << "\n";

  if (!skip_calibrate) {
    const auto calibrated = qwit::calibrate(W, restarts, seed);
    W = calibrated.witness;
    report << "calibration_shift " << qwit::format_double(calibrated.total_shift) << "\n";
  }

  const auto verify = qwit::verify_witness(W, restarts, seed + 1);
  report << "min_product_value " << qwit::format_double(verify.min_product_value) << "\n";
  report << "min_eigenvalue " << qwit::format_double(verify.min_eigenvalue) << "\n";
  if (!verify.valid) {
    report << "verdict " << verify.failure << "\n";
    qwit::write_text_file(out, report.str());
    throw VerdictFailure(verify.failure);
  }
  report << "verdict valid\n";

  const int want = target > 0 ? target : 2 * qwit::dim_of(W.n_qubits);
  const auto tangents = qwit::tangent_states(W, want, restarts, seed + 2);
  const auto optimality = qwit::optimality_verdict(tangents, W.n_qubits);
  report << "tangent_states " << tangents.states.size() << "\n";
  for (std::size_t i = 0; i < tangents.states.size(); ++i) {
    report << "tangent " << i;
    for (const auto& [theta, alpha] : tangents.states[i].angles)
      report << " " << qwit::format_double(theta) << " " << qwit::format_double(alpha);
    report << " value " << qwit::format_double(tangents.values[i]) << "\n";
  }
  report << "span_rank " << optimality.span_rank << "\n";
  const bool optimal = optimality.verdict == qwit::OptimalityVerdict::kOptimal;
  report << "optimality " << (optimal ? "OPTIMAL" : "INCONCLUSIVE") << "\n";
  std::cout << "optimality: " << (optimal ? "OPTIMAL" : "INCONCLUSIVE") << " (span rank "
            << optimality.span_rank << " of " << qwit::dim_of(W.n_qubits) << ")\n";

  if (W.n_qubits == 3) {
    const auto hits = qwit::pptes_scan(W, grid, seed + 3);
    const auto verdict = qwit::nondecomposability_verdict(hits);
    report << "pptes_hits " << hits.size() << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(hits.size(), 20); ++i)
      report << "pptes_hit " << qwit::format_double(hits[i].params.a) << " "
             << qwit::format_double(hits[i].params.b) << " "
             << qwit::format_double(hits[i].params.c) << " "
             << qwit::format_double(hits[i].trace_value) << "\n";
    const bool nondecomposable = verdict == qwit::DecomposabilityVerdict::kNondecomposable;
    report << "decomposability "
           << (nondecomposable ? "NONDECOMPOSABLE" : "INCONCLUSIVE") << "\n";
    std::cout << "non-decomposability: "
              << (nondecomposable ? "NONDECOMPOSABLE" : "INCONCLUSIVE") << " (" << hits.size()
              << " PPT entangled states detected)\n";
  }

  qwit::write_text_file(out, report.str());
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

int cmd_pca(const std::string& data_path, const std::string& out, int components) {
  const qwit::LoadedDataset dataset = qwit::read_dataset(data_path);
  std::vector<qwit::FeatureVector> features;
  features.reserve(dataset.data.X.rows());
  for (Eigen::Index i = 0; i < dataset.data.X.rows(); ++i)
    features.push_back({dataset.n_qubits, dataset.data.X.row(i).transpose()});

  const qwit::PcaProjection proj = qwit::pca_fit(features, components);
  std::vector<std::pair<qwit::RVector, int>> rows;
  rows.reserve(features.size());
  for (std::size_t i = 0; i < features.size(); ++i)
    rows.emplace_back(qwit::pca_transform(proj, features[i]),
                      static_cast<int>(dataset.data.y(static_cast<Eigen::Index>(i))));
  qwit::write_pca(out, rows);

  const double total = proj.explained_variance.sum();
  std::cout << "explained variance shares:";
  for (Eigen::Index k = 0; k < proj.explained_variance.size(); ++k)
    std::cout << " " << short_num(total > 0 ? proj.explained_variance(k) / total : 0);
  std::cout << "\nwrote " << out << " (" << rows.size() << " rows)\n";
  return kExitOk;
}

int cmd_dump_reference(const std::string& name, const std::string& out) {
  const qwit::WitnessOperator W = qwit::reference_witness(name);
  qwit::write_witness(out, W, {{"source", "reference:" + name}});
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement-witness toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a labeled dataset");
  int qubits = 2, per_class = 500;
  std::uint64_t seed = 7;
  std::string family = "werner", out = "dataset";
  double p_min = -1, p_max = -1;
  gen->add_option("--qubits", qubits)->check(CLI::Range(2, 4));
  gen->add_option("--per-class", per_class)->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--family", family)->check(CLI::IsMember({"werner", "edge"}));
  gen->add_option("--p-min", p_min);
  gen->add_option("--p-max", p_max);
  gen->add_option("--out", out);

  // train
  auto* train = app.add_subcommand("train", "train and calibrate a witness");
  std::string data_path, train_out = "witness", load_reference;
  double C = 10, lr = 0.1;
  int epochs = 2000, restarts = 0, refine_rounds = 0;
  std::uint64_t train_seed = 1;
  train->add_option("--data", data_path);
  train->add_option("--out", train_out);
  train->add_option("--C", C)->check(CLI::PositiveNumber);
  train->add_option("--epochs", epochs)->check(CLI::PositiveNumber);
  train->add_option("--lr", lr)->check(CLI::PositiveNumber);
  train->add_option("--seed", train_seed);
  train->add_option("--restarts", restarts);
  train->add_option("--refine-rounds", refine_rounds);
  train->add_option("--load-reference", load_reference)
      ->check(CLI::IsMember({"w1", "wghz", "ew22", "w4"}));

  // certify
  auto* certify = app.add_subcommand("certify", "optimality and PPTES certification");
  std::string witness_path, certify_out = "certify.txt";
  int certify_restarts = 256, target = 0, grid = 20;
  std::uint64_t certify_seed = 1;
  bool skip_calibrate = false;
  certify->add_option("--witness", witness_path)->required();
  certify->add_option("--out", certify_out);
  certify->add_option("--restarts", certify_restarts)->check(CLI::PositiveNumber);
  certify->add_option("--target", target);
  certify->add_option("--grid", grid)->check(CLI::Range(2, 100));
  certify->add_option("--seed", certify_seed);
  certify->add_flag("--skip-calibrate", skip_calibrate);

  // pca
  auto* pca = app.add_subcommand("pca", "project a dataset onto principal components");
  std::string pca_data, pca_out = "pca.csv";
  int components = 3;
  pca->add_option("--data", pca_data)->required();
  pca->add_option("--out", pca_out);
  pca->add_option("--components", components)->check(CLI::Range(1, 16));

  // dump-reference
  auto* dump = app.add_subcommand("dump-reference", "write a bundled reference witness file");
  std::string dump_name, dump_out;
  dump->add_option("--name", dump_name)
      ->required()
      ->check(CLI::IsMember({"w1", "wghz", "ew22", "w4"}));
  dump->add_option("--out", dump_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (gen->parsed()) return cmd_gen(qubits, per_class, seed, family, p_min, p_max, out);
    if (train->parsed()) {
      if (load_reference.empty() && data_path.empty())
        throw CLI::ValidationError("train needs --data or --load-reference");
      return cmd_train(data_path, train_out, load_reference, train, C, epochs, lr, train_seed,
                       restarts, refine_rounds);
    }
    if (certify->parsed())
      return cmd_certify(witness_path, certify_out, certify_restarts, target, grid,
                         certify_seed, skip_calibrate);
    if (pca->parsed()) return cmd_pca(pca_data, pca_out, components);
    if (dump->parsed()) return cmd_dump_reference(dump_name, dump_out);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qwit::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const VerdictFailure& e) {
    std::cerr << "verdict failure: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << "verdict failure: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitConfig;
}
