// Python bindings for the main operations: state construction, Pauli
// features, witness training and certification.  Reports cross the boundary
// as plain dicts; matrices and vectors as numpy arrays via Eigen.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwit/io.hpp"
#include "qwit/pipeline.hpp"
#include "qwit/references.hpp"

namespace py = pybind11;
using namespace qwit;

namespace {

EntangledFamily parse_family(const std::string& family) {
  if (family == "werner") return EntangledFamily::kWerner;
  if (family == "edge") return EntangledFamily::kEdge;
  throw std::invalid_argument("unknown entangled family: " + family);
}

ProductState product_from_angles(const std::vector<std::pair<double, double>>& angles) {
  return ProductState{angles};
}

py::dict threshold_dict(const ThresholdReport& r) {
  py::dict d;
  d["slope"] = r.slope;
  d["intercept"] = r.intercept;
  d["crossing"] = r.crossing;
  d["fit_residual"] = r.fit_residual;
  d["detects"] = r.detects;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qwit, m) {
  m.doc() = "entanglement-witness construction and certification";

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_static("checked", &DensityMatrix::checked, py::arg("n_qubits"), py::arg("matrix"))
      .def_readonly("n_qubits", &DensityMatrix::n_qubits)
      .def_readonly("matrix", &DensityMatrix::mat);

  py::class_<ProductState>(m, "ProductState")
      .def(py::init(&product_from_angles), py::arg("angles"))
      .def_readonly("angles", &ProductState::angles)
      .def("amplitudes",
           [](const ProductState& s) { return CVector(s.to_pure().amplitudes); });

  py::class_<WitnessOperator>(m, "Witness")
      .def_static(
          "from_coefficients",
          [](int n, const RVector& c, bool normalize) {
            return WitnessOperator::from_coefficients(n, c, normalize);
          },
          py::arg("n_qubits"), py::arg("coefficients"), py::arg("normalize") = true)
      .def_static("from_matrix", &WitnessOperator::from_matrix, py::arg("n_qubits"),
                  py::arg("matrix"), py::arg("normalize") = true)
      .def_readonly("n_qubits", &WitnessOperator::n_qubits)
      .def_readonly("coefficients", &WitnessOperator::coefficients)
      .def_readonly("matrix", &WitnessOperator::matrix)
      .def_readonly("unit_trace", &WitnessOperator::unit_trace)
      .def("trace_with", &WitnessOperator::trace_with, py::arg("rho"))
      .def("product_value", &WitnessOperator::product_value, py::arg("state"))
      .def("min_eigenvalue", &WitnessOperator::min_eigenvalue);

  // states
  m.def("bell_state", [](int i, int j) { return CVector(bell_state(i, j).amplitudes); },
        py::arg("i"), py::arg("j"));
  m.def("ghz_state", [](int n) { return CVector(ghz_state(n).amplitudes); }, py::arg("n"));
  m.def(
      "werner",
      [](const CVector& base, double p) {
        const int n = static_cast<int>(std::lround(std::log2(double(base.size()))));
        return werner(PureState{n, base}, p);
      },
      py::arg("base"), py::arg("p"));
  m.def(
      "edge_ppt_state",
      [](double a, double b, double c) { return edge_ppt_state({a, b, c}); }, py::arg("a"),
      py::arg("b"), py::arg("c"));
  m.def("ppt_boundary", &ppt_boundary, py::arg("n_qubits"));

  // features
  m.def("feature_vector",
        [](const DensityMatrix& rho) { return RVector(feature_vector(rho).values); },
        py::arg("rho"));
  m.def(
      "reconstruct_state",
      [](int n, const RVector& values) { return reconstruct_state({n, values}); },
      py::arg("n_qubits"), py::arg("features"));

  // qcore
  m.def(
      "partial_transpose",
      [](const Matrix& rho, const std::vector<int>& qubits, int n) {
        return partial_transpose(rho, std::set<int>(qubits.begin(), qubits.end()), n);
      },
      py::arg("rho"), py::arg("qubits"), py::arg("n_qubits"));
  m.def(
      "is_ppt",
      [](const DensityMatrix& rho, const std::vector<int>& qubits) {
        return is_ppt(rho, std::set<int>(qubits.begin(), qubits.end()));
      },
      py::arg("rho"), py::arg("qubits"));

  // datasets
  m.def(
      "generate_dataset",
      [](int n_qubits, int per_class, std::uint64_t seed, const std::string& family) {
        DatasetConfig config = default_dataset_config(n_qubits, parse_family(family));
        config.per_class = per_class;
        config.seed = seed;
        const LabeledFeatures data = featurize(generate_dataset(config));
        return py::make_tuple(data.X, data.y);
      },
      py::arg("n_qubits"), py::arg("per_class") = 500, py::arg("seed") = 7,
      py::arg("family") = "werner");

  // training + certification
  m.def(
      "build_witness",
      [](const Eigen::MatrixXd& X, const RVector& y, int n_qubits,
         const std::string& family, std::uint64_t seed) {
        PipelineConfig config = default_pipeline_config(n_qubits, parse_family(family));
        config.seed = seed;
        const TrainedWitness tw = build_witness({X, y}, n_qubits, config);
        py::dict d;
        d["witness"] = tw.witness;
        d["w"] = tw.model.w;
        d["b"] = tw.model.b;
        d["train_accuracy"] = tw.train_accuracy;
        d["objective"] = tw.objective;
        d["calibration_shift"] = tw.calibration_shift;
        d["refine_rounds_used"] = tw.refine_rounds_used;
        d["final_dip"] = tw.final_dip;
        return d;
      },
      py::arg("X"), py::arg("y"), py::arg("n_qubits"), py::arg("family") = "werner",
      py::arg("seed") = 1);

  m.def(
      "min_over_product_states",
      [](const WitnessOperator& W, int restarts, std::uint64_t seed) {
        const ProductMin pm = min_over_product_states(W, restarts, seed);
        return py::make_tuple(pm.value, pm.state);
      },
      py::arg("witness"), py::arg("restarts") = 64, py::arg("seed") = 1);

  m.def(
      "calibrate",
      [](const WitnessOperator& W, int restarts, std::uint64_t seed) {
        const CalibrationResult r = calibrate(W, restarts, seed);
        py::dict d;
        d["witness"] = r.witness;
        d["total_shift"] = r.total_shift;
        d["iterations"] = r.iterations;
        return d;
      },
      py::arg("witness"), py::arg("restarts") = 128, py::arg("seed") = 1);

  m.def(
      "verify_witness",
      [](const WitnessOperator& W, int restarts, std::uint64_t seed) {
        const VerifyReport r = verify_witness(W, restarts, seed);
        py::dict d;
        d["valid"] = r.valid;
        d["min_product_value"] = r.min_product_value;
        d["min_eigenvalue"] = r.min_eigenvalue;
        d["detected_state_npt"] = r.detected_state_npt;
        d["failure"] = r.failure;
        return d;
      },
      py::arg("witness"), py::arg("restarts") = 128, py::arg("seed") = 1);

  m.def(
      "detection_threshold",
      [](const WitnessOperator& W, const CVector& base) {
        const int n = static_cast<int>(std::lround(std::log2(double(base.size()))));
        return threshold_dict(detection_threshold(W, PureState{n, base}));
      },
      py::arg("witness"), py::arg("base"));

  m.def(
      "optimality_certificate",
      [](const WitnessOperator& W, int target_count, int restarts, std::uint64_t seed) {
        const TangentSet ts = tangent_states(W, target_count, restarts, seed);
        const OptimalityReport opt = optimality_verdict(ts, W.n_qubits);
        py::dict d;
        d["span_rank"] = opt.span_rank;
        d["optimal"] = opt.verdict == OptimalityVerdict::kOptimal;
        d["tangent_values"] = ts.values;
        std::vector<std::vector<std::pair<double, double>>> angles;
        for (const ProductState& s : ts.states) angles.push_back(s.angles);
        d["tangent_states"] = angles;
        return d;
      },
      py::arg("witness"), py::arg("target_count") = 0, py::arg("restarts") = 256,
      py::arg("seed") = 1);

  m.def(
      "pptes_scan",
      [](const WitnessOperator& W, int grid, std::uint64_t seed) {
        std::vector<py::tuple> hits;
        for (const PptesHit& hit : pptes_scan(W, grid, seed))
          hits.push_back(py::make_tuple(hit.params.a, hit.params.b, hit.params.c,
                                        hit.trace_value));
        return hits;
      },
      py::arg("witness"), py::arg("grid") = 20, py::arg("seed") = 1);

  // references + persistence
  m.def("reference_names", &reference_names);
  m.def("reference_witness", &reference_witness, py::arg("name"));
  m.def(
      "write_witness",
      [](const std::string& path, const WitnessOperator& W) { write_witness(path, W, {}); },
      py::arg("path"), py::arg("witness"));
  m.def("read_witness",
        [](const std::string& path) { return read_witness(path).witness; }, py::arg("path"));
}
