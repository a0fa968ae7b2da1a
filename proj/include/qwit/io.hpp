#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwit/features.hpp"
#include "qwit/pipeline.hpp"
#include "qwit/states.hpp"
#include "qwit/svm.hpp"
#include "qwit/witness.hpp"

namespace qwit {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal representation (17 significant digits): all
// serialized numbers survive write/read bit-exactly, which the determinism
// guarantees depend on.
std::string format_double(double x);

// Dataset: CSV with a header naming the Pauli strings, one sample per row
// (label first), plus a key-value metadata sidecar carrying the generating
// config and per-sample provenance.
void write_dataset(const std::string& csv_path, const std::vector<LabeledSample>& samples,
                   const DatasetConfig& config);

struct LoadedDataset {
  LabeledFeatures data;
  int n_qubits = 0;
  std::map<std::string, std::string> metadata;  // empty if no sidecar found
};
LoadedDataset read_dataset(const std::string& csv_path);

std::string meta_path_for(const std::string& csv_path);

// SVM model: key-value text with the weight list in canonical Pauli order.
void write_model(const std::string& path, const SvmModel& model,
                 const std::map<std::string, std::string>& metadata);

struct LoadedModel {
  SvmModel model;
  std::map<std::string, std::string> metadata;
};
LoadedModel read_model(const std::string& path);

// Witness: structured text with n_qubits, coefficients, the dense matrix as
// two number grids, the normalization tag and free-form report fields.
void write_witness(const std::string& path, const WitnessOperator& W,
                   const std::vector<std::pair<std::string, std::string>>& report_fields);

struct LoadedWitness {
  WitnessOperator witness;
  std::map<std::string, std::string> report;
};
LoadedWitness read_witness(const std::string& path);

// PCA export: pc1 .. pck, label rows.
void write_pca(const std::string& path, const std::vector<std::pair<RVector, int>>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qwit
