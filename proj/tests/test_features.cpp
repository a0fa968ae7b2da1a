#include <doctest.h>

#include <algorithm>

#include "qwit/features.hpp"
#include "qwit/states.hpp"

using namespace qwit;

TEST_SUITE_BEGIN("features");

TEST_CASE("feature_vector basics") {
  const FeatureVector mixed = feature_vector(werner(bell_state(0, 0), 0.0));
  CHECK(mixed.values(0) == doctest::Approx(1));
  CHECK(mixed.values.tail(15).cwiseAbs().maxCoeff() < 1e-12);

  const FeatureVector bell = feature_vector(pure_to_density(bell_state(0, 0)));
  CHECK(bell.values(PauliString{{Pauli::X, Pauli::X}}.index()) == doctest::Approx(1));
  CHECK(bell.values(PauliString{{Pauli::Y, Pauli::Y}}.index()) == doctest::Approx(-1));
  CHECK(bell.values(PauliString{{Pauli::Z, Pauli::Z}}.index()) == doctest::Approx(1));
  int nonzero = 0;
  for (Eigen::Index t = 0; t < 16; ++t)
    if (std::abs(bell.values(t)) > 1e-12) ++nonzero;
  CHECK(nonzero == 4);
}

TEST_CASE("feature_vector is linear") {
  Rng rng(3);
  const DensityMatrix r1 = random_separable_mixture(2, 3, rng);
  const DensityMatrix r2 = random_separable_mixture(2, 4, rng);
  const DensityMatrix mix{2, 0.5 * r1.mat + 0.5 * r2.mat};
  const RVector lhs = feature_vector(mix).values;
  const RVector rhs = 0.5 * (feature_vector(r1).values + feature_vector(r2).values);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("reconstruct_state round-trip") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_separable_mixture(2, 1 + i % 6, rng);
    const FeatureVector f = feature_vector(rho);
    const DensityMatrix back = reconstruct_state(f);
    CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((feature_vector(back).values - f.values).cwiseAbs().maxCoeff() < 1e-10);
  }

  FeatureVector identity_only{2, RVector::Zero(16)};
  identity_only.values(0) = 1;
  CHECK((reconstruct_state(identity_only).mat - Matrix::Identity(4, 4) / 4).norm() ==
        doctest::Approx(0));

  const FeatureVector bell = feature_vector(pure_to_density(bell_state(0, 0)));
  CHECK((reconstruct_state(bell).mat - bell_state(0, 0).projector()).cwiseAbs().maxCoeff() <
        1e-10);

  FeatureVector bogus{2, RVector::Zero(16)};
  bogus.values(0) = 1;
  bogus.values(15) = 3;  // pushes an eigenvalue negative
  CHECK_THROWS_AS(reconstruct_state(bogus), std::runtime_error);
}

TEST_CASE("Parseval identity ties feature norm to purity") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = random_separable_mixture(2, 1 + i % 8, rng);
    const double purity = (rho.mat * rho.mat).trace().real();
    CHECK(feature_vector(rho).values.squaredNorm() ==
          doctest::Approx(4 * purity).epsilon(1e-8));
  }
}

namespace {

std::vector<FeatureVector> werner_line_samples(int count) {
  std::vector<FeatureVector> out;
  for (int i = 0; i < count; ++i)
    out.push_back(feature_vector(werner(bell_state(0, 0), double(i) / (count - 1))));
  return out;
}

}  // namespace

TEST_CASE("pca_fit") {
  const std::vector<FeatureVector> identical(5, feature_vector(werner(bell_state(0, 0), 0.3)));
  const PcaProjection flat = pca_fit(identical, 3);
  CHECK(flat.explained_variance.cwiseAbs().maxCoeff() < 1e-12);

  const auto line = werner_line_samples(20);
  const PcaProjection proj = pca_fit(line, 3);
  const double total = proj.explained_variance.sum();
  CHECK(proj.explained_variance(0) / total >= 0.9999);
  CHECK(proj.explained_variance(0) >= proj.explained_variance(1));

  // Orthonormality.
  const Eigen::MatrixXd gram = proj.components * proj.components.transpose();
  CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);

  CHECK_THROWS(pca_fit(std::vector<FeatureVector>(2, line[0]), 3));  // too few samples
}

TEST_CASE("pca_transform") {
  const auto line = werner_line_samples(20);
  const PcaProjection proj = pca_fit(line, 2);

  FeatureVector mean{2, proj.mean};
  CHECK(pca_transform(proj, mean).cwiseAbs().maxCoeff() < 1e-12);

  // Ordering of p is preserved along PC1 (up to one global sign).
  std::vector<double> pc1;
  for (const auto& f : line) pc1.push_back(pca_transform(proj, f)(0));
  const bool increasing = std::is_sorted(pc1.begin(), pc1.end());
  const bool decreasing = std::is_sorted(pc1.rbegin(), pc1.rend());
  CHECK((increasing || decreasing));

  // Transformed sample variance reproduces explained_variance.
  for (int k = 0; k < 2; ++k) {
    double mean_k = 0;
    for (const auto& f : line) mean_k += pca_transform(proj, f)(k);
    mean_k /= line.size();
    double var = 0;
    for (const auto& f : line) {
      const double x = pca_transform(proj, f)(k) - mean_k;
      var += x * x;
    }
    var /= (line.size() - 1);
    CHECK(var == doctest::Approx(proj.explained_variance(k)).epsilon(1e-8));
  }

  FeatureVector wrong{1, RVector::Zero(4)};
  CHECK_THROWS(pca_transform(proj, wrong));
}

TEST_CASE("pca is invariant to sample order") {
  // Random mixtures give a generic covariance with distinct top eigenvalues,
  // so component directions are well defined up to sign.
  Rng rng(31);
  std::vector<FeatureVector> cloud;
  for (int i = 0; i < 40; ++i)
    cloud.push_back(feature_vector(random_separable_mixture(2, 1 + i % 8, rng)));
  const PcaProjection a = pca_fit(cloud, 2);
  std::reverse(cloud.begin(), cloud.end());
  const PcaProjection b = pca_fit(cloud, 2);
  CHECK((a.explained_variance - b.explained_variance).cwiseAbs().maxCoeff() < 1e-10);
  for (int k = 0; k < 2; ++k) {
    const double overlap = std::abs(a.components.row(k).dot(b.components.row(k)));
    CHECK(overlap == doctest::Approx(1).epsilon(1e-8));
  }
}

TEST_SUITE_END();
