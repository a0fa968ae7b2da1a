#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "qwit/io.hpp"
#include "qwit/references.hpp"

using namespace qwit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("format_double round-trips exactly") {
  const double values[] = {0.1, 1.0 / 3, -0.45305123456789012, 1e-300, 12345.678901234567};
  for (double v : values) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("dataset write/read round-trip") {
  DatasetConfig config;
  config.n_qubits = 2;
  config.per_class = 10;
  config.seed = 4;
  const auto samples = generate_dataset(config);
  const std::string path = "/tmp/qwit_io_ds.csv";
  write_dataset(path, samples, config);

  const LoadedDataset loaded = read_dataset(path);
  CHECK(loaded.n_qubits == 2);
  REQUIRE(loaded.data.X.rows() == 20);
  REQUIRE(loaded.data.X.cols() == 16);
  CHECK(loaded.metadata.at("entangled_family") == "werner");
  CHECK(loaded.metadata.at("seed") == "4");
  CHECK(loaded.metadata.count("sample.0") == 1);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FeatureVector f = feature_vector(samples[i].rho);
    CHECK((loaded.data.X.row(static_cast<Eigen::Index>(i)).transpose() - f.values)
              .cwiseAbs()
              .maxCoeff() == 0);  // exact via 17-digit decimals
    CHECK(loaded.data.y(static_cast<Eigen::Index>(i)) == samples[i].label);
  }
}

TEST_CASE("model write/read round-trip") {
  SvmModel model{RVector::Zero(16), -0.12345678901234567, 42.5};
  Rng rng(8);
  for (Eigen::Index t = 0; t < 16; ++t) model.w(t) = rng.uniform() - 0.5;

  const std::string path = "/tmp/qwit_io_model.txt";
  write_model(path, model, {{"seed", "7"}});
  const LoadedModel loaded = read_model(path);
  CHECK(loaded.model.C == model.C);
  CHECK(loaded.model.b == model.b);
  CHECK((loaded.model.w - model.w).cwiseAbs().maxCoeff() == 0);
  CHECK(loaded.metadata.at("seed") == "7");
}

TEST_CASE("witness write/read round-trip") {
  const WitnessOperator W = reference_witness("w1");
  const std::string path = "/tmp/qwit_io_witness.ew";
  write_witness(path, W, {{"verdict", "valid"}, {"note", "round trip"}});

  const LoadedWitness loaded = read_witness(path);
  CHECK(loaded.witness.n_qubits == 2);
  CHECK(loaded.witness.unit_trace == W.unit_trace);
  CHECK((loaded.witness.coefficients - W.coefficients).cwiseAbs().maxCoeff() == 0);
  CHECK((loaded.witness.matrix - W.matrix).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(loaded.report.at("verdict") == "valid");

  // Serialization is deterministic byte-for-byte.
  const std::string path2 = "/tmp/qwit_io_witness2.ew";
  write_witness(path2, W, {{"verdict", "valid"}, {"note", "round trip"}});
  CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("pca export shape") {
  std::vector<std::pair<RVector, int>> rows;
  rows.emplace_back(RVector::Constant(3, 0.25), 1);
  rows.emplace_back(RVector::Constant(3, -1.5), -1);
  const std::string path = "/tmp/qwit_io_pca.csv";
  write_pca(path, rows);
  const std::string content = slurp(path);
  CHECK(content.rfind("pc1,pc2,pc3,label\n", 0) == 0);
  CHECK(std::count(content.begin(), content.end(), '\n') == 3);
}

TEST_CASE("errors surface as IoError") {
  CHECK_THROWS_AS(read_dataset("/nonexistent/dir/file.csv"), IoError);
  CHECK_THROWS_AS(read_model("/nonexistent/dir/model.txt"), IoError);
  CHECK_THROWS_AS(read_witness("/nonexistent/dir/witness.ew"), IoError);
  SvmModel model{RVector::Zero(16), 0, 10};
  CHECK_THROWS_AS(write_model("/nonexistent/dir/model.txt", model, {}), IoError);

  // A file of the wrong kind is rejected.
  write_text_file("/tmp/qwit_io_bogus.txt", "hello\n");
  CHECK_THROWS_AS(read_witness("/tmp/qwit_io_bogus.txt"), IoError);
}

TEST_SUITE_END();
