#include "qwit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qwit {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

void write_or_throw(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

double parse_double(const std::string& token) {
  std::size_t pos = 0;
  const double value = std::stod(token, &pos);
  if (pos != token.size()) throw IoError("malformed number: " + token);
  return value;
}

int qubits_from_dim(std::size_t dim) {
  int n = 0;
  while ((std::size_t(1) << (2 * n)) < dim) ++n;
  if ((std::size_t(1) << (2 * n)) != dim) throw IoError("feature count is not 4^N");
  return n;
}

std::string expect_line(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("unexpected end of file: " + path);
  return line;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string meta_path_for(const std::string& csv_path) {
  const std::string suffix = ".csv";
  if (csv_path.size() > suffix.size() &&
      csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return csv_path.substr(0, csv_path.size() - suffix.size()) + ".meta";
  return csv_path + ".meta";
}

void write_dataset(const std::string& csv_path, const std::vector<LabeledSample>& samples,
                   const DatasetConfig& config) {
  if (samples.empty()) throw IoError("write_dataset: empty sample list");
  const int n = samples.front().rho.n_qubits;
  const std::size_t dim = std::size_t(1) << (2 * n);

  std::ostringstream csv;
  csv << "label";
  for (std::size_t t = 0; t < dim; ++t) csv << "," << PauliString::from_index(t, n).str();
  csv << "\n";
  for (const LabeledSample& s : samples) {
    const FeatureVector f = feature_vector(s.rho);
    csv << s.label;
    for (Eigen::Index t = 0; t < f.values.size(); ++t) csv << "," << format_double(f.values(t));
    csv << "\n";
  }
  write_or_throw(csv_path, csv.str());

  std::ostringstream meta;
  meta << "n_qubits " << n << "\n";
  meta << "per_class " << config.per_class << "\n";
  meta << "seed " << config.seed << "\n";
  meta << "entangled_family "
       << (config.entangled_family == EntangledFamily::kWerner ? "werner" : "edge") << "\n";
  meta << "p_min " << format_double(config.p_min) << "\n";
  meta << "p_max " << format_double(config.p_max) << "\n";
  meta << "mixture_fraction " << format_double(config.mixture_fraction) << "\n";
  meta << "max_mixture_terms " << config.max_mixture_terms << "\n";
  meta << "separable_p_cap "
       << format_double(config.separable_p_cap >= 0 ? config.separable_p_cap
                                                    : ppt_boundary(n))
       << "\n";
  meta << "base " << (config.base_state.amplitudes.size() > 0 ? "custom" : "ghz") << "\n";
  for (std::size_t i = 0; i < samples.size(); ++i)
    meta << "sample " << i << " " << samples[i].label << " " << samples[i].family << " "
         << samples[i].params << "\n";
  write_or_throw(meta_path_for(csv_path), meta.str());
}

LoadedDataset read_dataset(const std::string& csv_path) {
  std::ifstream in = open_in(csv_path);
  LoadedDataset out;

  std::string line = expect_line(in, csv_path);
  std::size_t dim = 0;
  for (char ch : line)
    if (ch == ',') ++dim;
  out.n_qubits = qubits_from_dim(dim);

  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string token;
    std::vector<double> row;
    row.reserve(dim + 1);
    while (std::getline(ss, token, ',')) row.push_back(parse_double(token));
    if (row.size() != dim + 1) throw IoError("row width mismatch in " + csv_path);
    labels.push_back(row.front());
    rows.push_back(std::vector<double>(row.begin() + 1, row.end()));
  }
  if (rows.empty()) throw IoError("no samples in " + csv_path);

  out.data.X.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  out.data.y.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j)
      out.data.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    out.data.y(static_cast<Eigen::Index>(i)) = labels[i];
  }

  std::ifstream meta(meta_path_for(csv_path));
  if (meta) {
    while (std::getline(meta, line)) {
      if (line.empty()) continue;
      std::istringstream ss(line);
      std::string key;
      ss >> key;
      if (key == "sample") {
        std::string index;
        ss >> index;
        key = "sample." + index;
      }
      std::string value;
      std::getline(ss, value);
      if (!value.empty() && value.front() == ' ') value.erase(0, 1);
      out.metadata[key] = value;
    }
  }
  return out;
}

void write_model(const std::string& path, const SvmModel& model,
                 const std::map<std::string, std::string>& metadata) {
  const int n = qubits_from_dim(static_cast<std::size_t>(model.w.size()));
  std::ostringstream out;
  out << "qwit-model v1\n";
  out << "n_qubits " << n << "\n";
  out << "C " << format_double(model.C) << "\n";
  out << "b " << format_double(model.b) << "\n";
  for (const auto& [key, value] : metadata) out << key << " " << value << "\n";
  out << "w " << model.w.size() << "\n";
  for (Eigen::Index t = 0; t < model.w.size(); ++t)
    out << PauliString::from_index(static_cast<std::size_t>(t), n).str() << " "
        << format_double(model.w(t)) << "\n";
  out << "end\n";
  write_or_throw(path, out.str());
}

LoadedModel read_model(const std::string& path) {
  std::ifstream in = open_in(path);
  if (expect_line(in, path) != "qwit-model v1") throw IoError("not a model file: " + path);
  LoadedModel out;
  std::string line;
  Eigen::Index w_count = -1;
  while (std::getline(in, line)) {
    if (line == "end") break;
    std::istringstream ss(line);
    std::string key, value;
    ss >> key;
    std::getline(ss, value);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    if (key == "C") {
      out.model.C = parse_double(value);
    } else if (key == "b") {
      out.model.b = parse_double(value);
    } else if (key == "w") {
      w_count = static_cast<Eigen::Index>(std::stoul(value));
      out.model.w.resize(w_count);
      for (Eigen::Index t = 0; t < w_count; ++t) {
        std::istringstream row(expect_line(in, path));
        std::string name, num;
        row >> name >> num;
        out.model.w(t) = parse_double(num);
      }
    } else {
      out.metadata[key] = value;
    }
  }
  if (w_count < 0) throw IoError("model file missing weights: " + path);
  return out;
}

void write_witness(const std::string& path, const WitnessOperator& W,
                   const std::vector<std::pair<std::string, std::string>>& report_fields) {
  std::ostringstream out;
  out << "qwit-witness v1\n";
  out << "n_qubits " << W.n_qubits << "\n";
  out << "normalization " << (W.unit_trace ? "unit_trace" : "unnormalized") << "\n";
  out << "coefficients " << W.coefficients.size() << "\n";
  for (Eigen::Index t = 0; t < W.coefficients.size(); ++t)
    out << PauliString::from_index(static_cast<std::size_t>(t), W.n_qubits).str() << " "
        << format_double(W.coefficients(t)) << "\n";
  const int d = dim_of(W.n_qubits);
  out << "matrix_real " << d << "\n";
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) out << (c ? " " : "") << format_double(W.matrix(r, c).real());
    out << "\n";
  }
  out << "matrix_imag " << d << "\n";
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) out << (c ? " " : "") << format_double(W.matrix(r, c).imag());
    out << "\n";
  }
  out << "report\n";
  for (const auto& [key, value] : report_fields) out << key << " " << value << "\n";
  out << "end\n";
  write_or_throw(path, out.str());
}

LoadedWitness read_witness(const std::string& path) {
  std::ifstream in = open_in(path);
  if (expect_line(in, path) != "qwit-witness v1") throw IoError("not a witness file: " + path);

  int n_qubits = -1;
  bool unit_trace = false;
  RVector coeffs;
  std::string line;

  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "n_qubits") {
      ss >> n_qubits;
    } else if (key == "normalization") {
      std::string tag;
      ss >> tag;
      unit_trace = (tag == "unit_trace");
    } else if (key == "coefficients") {
      Eigen::Index count;
      ss >> count;
      coeffs.resize(count);
      for (Eigen::Index t = 0; t < count; ++t) {
        std::istringstream row(expect_line(in, path));
        std::string name, num;
        row >> name >> num;
        coeffs(t) = parse_double(num);
      }
    } else if (key == "matrix_real" || key == "matrix_imag") {
      int d;
      ss >> d;
      for (int r = 0; r < d; ++r) expect_line(in, path);  // informative; rebuilt below
    } else if (key == "report") {
      break;
    }
  }
  if (n_qubits < 0 || coeffs.size() == 0) throw IoError("incomplete witness file: " + path);

  LoadedWitness out;
  out.witness = WitnessOperator::from_coefficients(n_qubits, std::move(coeffs),
                                                   /*normalize=*/false);
  out.witness.unit_trace = unit_trace;

  while (std::getline(in, line)) {
    if (line == "end") break;
    std::istringstream ss(line);
    std::string key, value;
    ss >> key;
    std::getline(ss, value);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    out.report[key] = value;
  }
  return out;
}

void write_pca(const std::string& path, const std::vector<std::pair<RVector, int>>& rows) {
  std::ostringstream out;
  if (rows.empty()) throw IoError("write_pca: no rows");
  for (Eigen::Index k = 0; k < rows.front().first.size(); ++k)
    out << "pc" << (k + 1) << ",";
  out << "label\n";
  for (const auto& [coords, label] : rows) {
    for (Eigen::Index k = 0; k < coords.size(); ++k) out << format_double(coords(k)) << ",";
    out << label << "\n";
  }
  write_or_throw(path, out.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  write_or_throw(path, content);
}

}  // namespace qwit
