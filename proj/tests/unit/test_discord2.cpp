#include <gtest/gtest.h>

#include <cmath>

#include "boxlab/discord2.hpp"
#include "boxlab/random.hpp"
#include "oracles.hpp"

using namespace boxlab;

namespace {

const double kSqrt2 = std::sqrt(2.0);

BipartiteBox box_of(const oracle::Table2& t) { return make_box(t); }

}  // namespace

TEST(BellFunctions, MatchOracleOnRandomBoxes) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const BipartiteBox P = random_ns_box(rng);
    oracle::Table2 t;
    std::copy(P.data().begin(), P.data().end(), t.begin());
    const auto b = bell_functions(P), m = mermin_functions(P);
    const auto ob = oracle::bell(t), om = oracle::mermin(t);
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(b.v[k], ob[k], 1e-12);
      EXPECT_NEAR(m.v[k], om[k], 1e-12);
    }
    EXPECT_NEAR(bell_discord(P), oracle::bell_discord(t), 1e-12);
    EXPECT_NEAR(mermin_discord(P), oracle::mermin_discord(t), 1e-12);
  }
}

TEST(Discords, ExtremalValues) {
  for (const auto& id : all_vertex_ids(VertexKind::PR)) {
    EXPECT_NEAR(bell_discord(vertex(id)), 4.0, 1e-12) << id.label();
    EXPECT_NEAR(mermin_discord(vertex(id)), 0.0, 1e-12) << id.label();
  }
  for (const auto& id : all_vertex_ids(VertexKind::MerminMM)) {
    EXPECT_NEAR(bell_discord(vertex(id)), 0.0, 1e-12) << id.label();
    EXPECT_NEAR(mermin_discord(vertex(id)), 2.0, 1e-12) << id.label();
  }
  for (const auto& id : all_vertex_ids(VertexKind::MerminNMM)) {
    EXPECT_NEAR(bell_discord(vertex(id)), 0.0, 1e-12) << id.label();
    EXPECT_NEAR(mermin_discord(vertex(id)), 2.0, 1e-12) << id.label();
  }
  for (const auto& id : all_vertex_ids(VertexKind::Det)) {
    EXPECT_NEAR(bell_discord(vertex(id)), 0.0, 1e-12) << id.label();
    EXPECT_NEAR(mermin_discord(vertex(id)), 0.0, 1e-12) << id.label();
  }
  for (const auto& id : all_vertex_ids(VertexKind::CC)) {
    EXPECT_NEAR(bell_discord(vertex(id)), 0.0, 1e-12) << id.label();
    EXPECT_NEAR(mermin_discord(vertex(id)), 0.0, 1e-12) << id.label();
  }
  EXPECT_NEAR(bell_discord(vertex(VertexId::tsirelson(0, 0, 0))), 2 * kSqrt2, 1e-12);
  EXPECT_NEAR(bell_discord(vertex(VertexId::noise())), 0.0, 1e-15);
}

TEST(Discords, RangesHoldOnRandomBoxes) {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const BipartiteBox P = random_ns_box(rng);
    EXPECT_GE(bell_discord(P), 0.0);
    EXPECT_LE(bell_discord(P), 4.0 + kEps);
    EXPECT_GE(mermin_discord(P), 0.0);
    EXPECT_LE(mermin_discord(P), 2.0 + kEps);
  }
}

TEST(SignedValues, ChshOfPrBoxes) {
  for (const auto& id : all_vertex_ids(VertexKind::PR)) {
    const BipartiteBox P = vertex(id);
    const auto& b = id.bits;
    EXPECT_NEAR(chsh_value(P, b[0], b[1], b[2]), 4.0, 1e-12) << id.label();
    EXPECT_NEAR(chsh_value(P, b[0], b[1], b[2] ^ 1), -4.0, 1e-12) << id.label();
  }
}

TEST(SignedValues, MerminOfMerminBox) {
  const BipartiteBox M = vertex(VertexId::mermin_mm(0, 0, 0));
  double best = -10;
  for (int c = 0; c < 8; ++c) best = std::max(best, mermin_value(M, c >> 2, (c >> 1) & 1, c & 1));
  EXPECT_NEAR(best, 2.0, 1e-12);
}

TEST(Steering, FlagsAboveSqrt2Only) {
  const BipartiteBox M = vertex(VertexId::mermin_mm(0, 0, 0));
  const auto strong = steering_check(isotropic(M, 0.9));
  const auto weak = steering_check(isotropic(M, 0.6));
  EXPECT_TRUE(std::any_of(strong.begin(), strong.end(), [](bool b) { return b; }));
  EXPECT_FALSE(std::any_of(weak.begin(), weak.end(), [](bool b) { return b; }));
}

TEST(Linearity, IsotropicFamiliesScaleLinearly) {
  for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
    EXPECT_NEAR(bell_discord(isotropic(vertex(VertexId::pr(1, 0, 1)), p)), 4 * p, 1e-12);
    EXPECT_NEAR(mermin_discord(isotropic(vertex(VertexId::mermin_mm(1, 1, 0)), p)), 2 * p, 1e-12);
  }
}

TEST(Linearity, AlignedMixturesAreAdditive) {
  // G is additive for a PR box mixed with a G = 0 box whose signed CHSH is maximal along the same label.
  Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const BipartiteBox L = random_local_mixture(rng);
    int best = 0;
    for (int c = 1; c < 8; ++c)
      if (chsh_value(L, c >> 2, (c >> 1) & 1, c & 1) > chsh_value(L, best >> 2, (best >> 1) & 1, best & 1)) best = c;
    if (bell_discord(L) > 1e-12) continue;
    const BipartiteBox pr = vertex(VertexId::pr(best >> 2, (best >> 1) & 1, best & 1));
    for (double mu : {0.2, 0.5, 0.8}) {
      const std::array<BipartiteBox, 2> parts{pr, L};
      const std::array<double, 2> w{mu, 1 - mu};
      EXPECT_NEAR(bell_discord(mix(parts, w)), 4 * mu, 1e-9);
    }
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(TotalCorrelation, ProductBoxesHaveNone) {
  for (const auto& id : all_vertex_ids(VertexKind::Det)) EXPECT_NEAR(total_correlation(vertex(id)), 0.0, 1e-12);
  EXPECT_NEAR(total_correlation(vertex(VertexId::noise())), 0.0, 1e-12);
}

TEST(TotalCorrelation, DecomposesForPrAndMerminBoxes) {
  const BipartiteBox pr = vertex(VertexId::pr(0, 0, 0));
  const auto m = measures(pr);
  EXPECT_NEAR(m.T, 4.0, 1e-12);
  EXPECT_NEAR(m.C.value, 0.0, 1e-12);
  EXPECT_EQ(m.C.sign, 0);
  const auto mm = measures(vertex(VertexId::mermin_mm(0, 0, 0)));
  EXPECT_NEAR(mm.T, 2.0, 1e-12);
  EXPECT_NEAR(mm.Q, 2.0, 1e-12);
}

TEST(TotalCorrelation, ClassicallyCorrelatedBoxIsPureC) {
  const auto m = measures(vertex(VertexId::cc(0, 0, 0)));
  EXPECT_NEAR(m.G, 0.0, 1e-12);
  EXPECT_NEAR(m.Q, 0.0, 1e-12);
  EXPECT_GT(m.T, 1.0);
  EXPECT_NEAR(m.C.value, m.T, 1e-12);
  EXPECT_EQ(m.C.sign, 1);
}

TEST(Monogamy, HoldsOnVertices) {
  for (auto kind : {VertexKind::PR, VertexKind::Det, VertexKind::MerminMM, VertexKind::MerminNMM}) {
    for (const auto& id : all_vertex_ids(kind)) {
      const auto r = monogamy_checks(vertex(id));
      EXPECT_TRUE(r.holds) << id.label();
      EXPECT_GE(r.bellMargin, -kEps);
      EXPECT_GE(r.discordMargin, -kEps);
    }
  }
  EXPECT_NEAR(monogamy_checks(vertex(VertexId::pr(0, 0, 0))).bellMargin, 0.0, 1e-12);
}

TEST(PairingTerms, QuadPermutationInvariance) {
  const Quad q{{0.3, 1.7, 2.2, 0.9}};
  const double base = pairing_min(q);
  const std::array<std::array<int, 4>, 4> perms{{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}, {0, 2, 1, 3}}};
  for (const auto& p : perms) {
    Quad r;
    for (int i = 0; i < 4; ++i) r.v[i] = q.v[p[i]];
    EXPECT_NEAR(pairing_min(r), base, 1e-15);
  }
}
