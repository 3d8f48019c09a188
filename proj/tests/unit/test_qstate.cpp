#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "boxlab/discord2.hpp"
#include "boxlab/qstate.hpp"
#include "boxlab/random.hpp"
#include "oracles.hpp"

using namespace boxlab;

namespace {

std::array<std::array<Vec3, 2>, 2> as_pairs2(const MeasurementSettings& s) { return {s.parties[0], s.parties[1]}; }
std::array<std::array<Vec3, 2>, 3> as_pairs3(const MeasurementSettings& s) {
  return {s.parties[0], s.parties[1], s.parties[2]};
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

}  // namespace

TEST(DensityMatrix, RejectsInvalidMatrices) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4) / 4.0;
  EXPECT_NO_THROW(DensityMatrix::from_matrix(m));
  Eigen::MatrixXcd trace2 = m * 2.0;
  EXPECT_THROW(DensityMatrix::from_matrix(trace2), Error);
  Eigen::MatrixXcd nonHerm = m;
  nonHerm(0, 1) = std::complex<double>(0, 0.1);
  EXPECT_THROW(DensityMatrix::from_matrix(nonHerm), Error);
  Eigen::MatrixXcd negative = Eigen::MatrixXcd::Zero(4, 4);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(negative), Error);
  EXPECT_THROW(DensityMatrix::from_matrix(Eigen::MatrixXcd::Identity(3, 3) / 3.0), Error);
}

TEST(Settings, RejectsNonUnitVectors) {
  MeasurementSettings s{{{Vec3{1, 0, 0}, Vec3{0, 1, 0}}, {Vec3{0, 0, 2}, Vec3{1, 0, 0}}}};
  EXPECT_THROW(validate_settings(s, 2), Error);
  EXPECT_THROW(born_box2(make_state("PsiPlus"), s), Error);
}

TEST(Settings, CatalogEntriesAreUnitVectors) {
  for (const auto& entry : settings_names()) {
    const auto open = entry.find('(');
    const std::string name = entry.substr(0, open);
    ParamMap params;
    if (open != std::string::npos) params[entry.substr(open + 1, entry.size() - open - 2)] = 0.35;
    const MeasurementSettings s = settings_catalog(name, params);
    for (const auto& party : s.parties)
      for (const auto& v : party) EXPECT_NEAR(norm(v), 1.0, 1e-12) << entry;
  }
  EXPECT_THROW(settings_catalog("NoSuchSettings"), Error);
}

TEST(Settings, InlineParameterForm) {
  const MeasurementSettings a = settings_catalog("PRQ(0.5)");
  const MeasurementSettings b = settings_catalog("PRQ", {{"tau", 0.5}});
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int c = 0; c < 3; ++c) EXPECT_DOUBLE_EQ(a.parties[k][i][c], b.parties[k][i][c]);
}

TEST(BornRule, MatchesOracleOnRandomStates) {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_mixed_state(rng, 2);
    const MeasurementSettings s = random_settings(rng, 2);
    const BipartiteBox P = born_box2(rho, s);
    const auto want = oracle::born2(rho.matrix(), as_pairs2(s));
    for (int k = 0; k < 16; ++k) EXPECT_NEAR(P.data()[k], want[k], 1e-12);
  }
}

TEST(BornRule, TripartiteMatchesOracle) {
  Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    const DensityMatrix rho = random_mixed_state(rng, 3);
    const MeasurementSettings s = random_settings(rng, 3);
    const TripartiteBox P = born_box3(rho, s);
    const auto want = oracle::born3(rho.matrix(), as_pairs3(s));
    for (int k = 0; k < 64; ++k) EXPECT_NEAR(P.data()[k], want[k], 1e-12);
  }
}

TEST(BornRule, BoxesAreNonSignaling) {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const BipartiteBox P = born_box2(random_mixed_state(rng, 2), random_settings(rng, 2));
    EXPECT_TRUE(validate_table(P.data()).empty());
    const TripartiteBox Q = born_box3(random_mixed_state(rng, 3), random_settings(rng, 3));
    EXPECT_TRUE(validate_table3(Q.data()).empty());
  }
}

TEST(BornRule, CorrelationShortcutAgrees) {
  Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_mixed_state(rng, 2);
    const MeasurementSettings s = random_settings(rng, 2);
    const BipartiteBox P = born_box2(rho, s);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        EXPECT_NEAR(correlation_shortcut(rho, s.parties[0][x], s.parties[1][y]), joint_expectation(P, x, y), 1e-12);
  }
}

TEST(BornRule, BlochFastPathAgrees) {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_mixed_state(rng, 2);
    const MeasurementSettings s = random_settings(rng, 2);
    EXPECT_LT(max_abs_diff(born_box2(rho, s), born_box2(bloch_data(rho), s)), 1e-12);
  }
}

TEST(States, SingletHasAntiCorrelation) {
  const Eigen::Matrix3d T = correlation_matrix(make_state("Singlet"));
  EXPECT_NEAR(T(0, 0), -1, 1e-12);
  EXPECT_NEAR(T(1, 1), -1, 1e-12);
  EXPECT_NEAR(T(2, 2), -1, 1e-12);
}

TEST(States, SchmidtMatchesOracleVector) {
  const double theta = 0.37;
  const auto want = oracle::pure2(std::cos(theta), 0, 0, std::sin(theta));
  EXPECT_LT((make_state("Schmidt", {{"theta", theta}}).matrix() - want).norm(), 1e-12);
}

TEST(States, FamiliesValidateParameters) {
  EXPECT_THROW(make_state("Werner2", {{"p", 1.5}}), Error);
  EXPECT_THROW(make_state("Schmidt"), Error);
  EXPECT_THROW(make_state("GhzWMix", {{"p", 0.3}, {"q", 0.3}}), Error);
  EXPECT_THROW(make_state("Nope"), Error);
  EXPECT_NO_THROW(make_state("GhzWMix", {{"p", 0.3}, {"q", 0.7}}));
  for (const auto& f : state_families()) EXPECT_FALSE(f.empty());
}

TEST(States, Werner3IsNormalized) {
  const DensityMatrix rho = make_state("Werner3", {{"p", 0.0}});
  EXPECT_LT((rho.matrix() - Eigen::MatrixXcd::Identity(8, 8) / 8.0).norm(), 1e-12);
}

TEST(States, BellDiagonalWeightsMustSumToOne) {
  ParamMap w{{"w0", 0.5}, {"w1", 0.5}};
  EXPECT_NO_THROW(make_state("BellDiagonal", w));
  w["w2"] = 0.1;
  EXPECT_THROW(make_state("BellDiagonal", w), Error);
}

TEST(Entanglement, ClosedForms) {
  const double theta = 0.3;
  const auto e = entanglement_params("Schmidt", {{"theta", theta}});
  EXPECT_NEAR(e.concurrence, std::sin(2 * theta), 1e-12);
  EXPECT_NEAR(e.tangle, std::pow(std::sin(2 * theta), 2), 1e-12);
  EXPECT_NEAR(entanglement_params("GHZ").threeTangle, 1.0, 1e-12);
  const auto w = entanglement_params("WClass", {{"a", 1}, {"b", 1}, {"c", 1}});
  EXPECT_NEAR(w.c12, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(w.threeTangle, 0.0, 1e-12);
  EXPECT_THROW(entanglement_params("Werner2", {{"p", 0.5}}), Error);
}

TEST(Hardy, ConstraintsVanishAndParadoxMatchesFormula) {
  const std::complex<double> b(0.4, 0.1), c(0.5, -0.2), d(0.6, 0.3);
  const auto h = hardy_check(b, c, d);
  EXPECT_NEAR(h.h1, 0, 1e-12);
  EXPECT_NEAR(h.h2, 0, 1e-12);
  EXPECT_NEAR(h.h3, 0, 1e-12);
  const double n = std::norm(b) + std::norm(c) + std::norm(d);
  const double want =
      std::norm(b * c * d) / (n * n * n) / ((std::norm(b) + std::norm(d)) / n * (std::norm(c) + std::norm(d)) / n);
  EXPECT_NEAR(h.paradox, want, 1e-12);
}

TEST(Hardy, EqualAmplitudes) {
  const double a = 1 / std::sqrt(3.0);
  EXPECT_NEAR(hardy_probability(a, a, a), 1.0 / 12.0, 1e-12);
  EXPECT_THROW(hardy_probability(1, 1, 1), Error);
  EXPECT_THROW(hardy_probability(1, 0, 0), Error);
}

TEST(ClassicalQuantum, CqStateFactorizes) {
  const DensityMatrix rho = cq_state(0.3, {0, 0, 1}, {0.2, 0.1, 0.5}, {-0.4, 0.3, 0.1});
  const Eigen::Matrix3d T = correlation_matrix(rho);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(T);
  EXPECT_NEAR(svd.singularValues()(1), 0.0, 1e-12);
}

TEST(ClassicalQuantum, AlignedMeasurementsGiveZeroDiscord) {
  const DensityMatrix rho = cq_state(0.3, {0, 0, 1}, {0.2, 0.1, 0.5}, {-0.4, 0.3, 0.1});
  Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    MeasurementSettings s = random_settings(rng, 2);
    s.parties[0] = {Vec3{0, 0, 1}, Vec3{1, 0, 0}};
    const BipartiteBox P = born_box2(rho, s);
    EXPECT_NEAR(bell_discord(P), 0, 1e-12);
    EXPECT_NEAR(mermin_discord(P), 0, 1e-12);
  }
}

TEST(ClassicalQuantum, GeneralMeasurementsCanGiveNonzeroDiscord) {
  // Rank-one correlations u_i w_j with |u0| != |u1| and |w0| != |w1| have nonzero pairing terms.
  const DensityMatrix rho = cq_state(1.0, {0, 0, 1}, {0, 0, 1}, {0, 0, 1});
  const double c = std::cos(1.0), s = std::sin(1.0);
  const MeasurementSettings st{{{Vec3{0, 0, 1}, Vec3{s, 0, c}}, {Vec3{0, 0, 1}, Vec3{std::sin(1.2), 0, std::cos(1.2)}}}};
  EXPECT_GT(bell_discord(born_box2(rho, st)), 0.1);
}

TEST(Anchors, PsiPlusWithXYSettingsGivesMerminBox) {
  const BipartiteBox P = born_box2(make_state("PsiPlus"), settings_catalog("MSb"));
  EXPECT_LT(max_abs_diff(P, vertex(VertexId::mermin_mm(0, 0, 0))), 1e-12);
}

TEST(Anchors, PsiPlusWithMcSettingsGivesAnotherMerminBox) {
  const BipartiteBox P = born_box2(make_state("PsiPlus"), settings_catalog("M_C"));
  EXPECT_LT(max_abs_diff(P, vertex(VertexId::mermin_mm(1, 1, 1))), 1e-12);
  EXPECT_NEAR(mermin_discord(P), 2.0, 1e-12);
}
