#include <gtest/gtest.h>

#include <set>

#include "boxlab/box.hpp"
#include "oracles.hpp"

using namespace boxlab;

namespace {

void expect_table(const BipartiteBox& P, const oracle::Table2& want, double tol = 1e-12) {
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(P.data()[i], want[i], tol) << "entry " << i;
}

}  // namespace

TEST(BoxValidation, AcceptsUniformTable) {
  const auto t = oracle::noise();
  EXPECT_NO_THROW(make_box(t));
  EXPECT_TRUE(validate_table(t).empty());
}

TEST(BoxValidation, RejectsBadNormalization) {
  auto t = oracle::noise();
  t[0] = 0.3;
  ErrorCode code{};
  EXPECT_FALSE(validate_table(t, &code).empty());
  EXPECT_EQ(code, ErrorCode::NotNormalized);
  EXPECT_THROW(make_box(t), Error);
}

TEST(BoxValidation, RejectsNegativeEntries) {
  auto t = oracle::noise();
  t[0] = -0.25;
  t[1] = 0.75;
  ErrorCode code{};
  validate_table(t, &code);
  EXPECT_EQ(code, ErrorCode::Negative);
}

TEST(BoxValidation, ClampsTinyNegativeEntries) {
  auto t = oracle::pr(0, 0, 0);
  t[1] = -1e-12;
  t[0] += 1e-12;
  const BipartiteBox P = make_box(t);
  EXPECT_EQ(P.data()[1], 0.0);
}

TEST(BoxValidation, RejectsSignaling) {
  oracle::Table2 t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[oracle::idx2(x, y, y, 0)] = 1.0;
  ErrorCode code{};
  EXPECT_FALSE(validate_table(t, &code).empty());
  EXPECT_EQ(code, ErrorCode::Signaling);
}

TEST(Vertices, PrBoxesMatchOracle) {
  for (int c = 0; c < 8; ++c) {
    const int al = c >> 2, be = (c >> 1) & 1, ga = c & 1;
    expect_table(vertex(VertexId::pr(al, be, ga)), oracle::pr(al, be, ga));
  }
}

TEST(Vertices, DeterministicBoxesMatchOracle) {
  for (int c = 0; c < 16; ++c) {
    const int al = c >> 3, be = (c >> 2) & 1, ga = (c >> 1) & 1, ep = c & 1;
    expect_table(vertex(VertexId::det(al, be, ga, ep)), oracle::det(al, be, ga, ep));
  }
}

TEST(Vertices, CatalogSizesAndDistinctness) {
  EXPECT_EQ(all_vertex_ids(VertexKind::PR).size(), 8u);
  EXPECT_EQ(all_vertex_ids(VertexKind::Det).size(), 16u);
  EXPECT_EQ(all_vertex_ids(VertexKind::MerminMM).size(), 8u);
  EXPECT_EQ(all_vertex_ids(VertexKind::MerminNMM).size(), 32u);
  std::set<std::array<double, 16>> seen;
  for (auto kind : {VertexKind::PR, VertexKind::Det}) {
    for (const auto& id : all_vertex_ids(kind)) seen.insert(vertex(id).data());
  }
  EXPECT_EQ(seen.size(), 24u);
}

TEST(Vertices, EveryCatalogBoxIsValid) {
  for (auto kind : {VertexKind::PR, VertexKind::Det, VertexKind::MerminMM, VertexKind::MerminNMM, VertexKind::CC,
                    VertexKind::Tsirelson, VertexKind::Noise}) {
    for (const auto& id : all_vertex_ids(kind)) EXPECT_TRUE(validate_table(vertex(id).data()).empty()) << id.label();
  }
}

TEST(Vertices, LabelsRoundTrip) {
  for (auto kind : {VertexKind::PR, VertexKind::Det, VertexKind::MerminMM, VertexKind::MerminNMM, VertexKind::CC,
                    VertexKind::Tsirelson, VertexKind::Noise}) {
    for (const auto& id : all_vertex_ids(kind)) EXPECT_EQ(parse_vertex_id(id.label()), id) << id.label();
  }
  EXPECT_THROW(parse_vertex_id("PR2"), Error);
  EXPECT_THROW(parse_vertex_id("Nothing"), Error);
}

TEST(Vertices, MerminBoxIsHalfOfTwoPrBoxes) {
  const auto want = oracle::mixture(oracle::pr(0, 0, 0), oracle::pr(1, 1, 0), 0.5);
  expect_table(vertex(VertexId::mermin_mm(0, 0, 0)), want);
}

TEST(Vertices, TsirelsonIsIsotropicPr) {
  const double w = 1 / std::sqrt(2.0);
  expect_table(vertex(VertexId::tsirelson(0, 0, 0)), oracle::mixture(oracle::pr(0, 0, 0), oracle::noise(), w));
}

TEST(Correlators, MatchOracle) {
  const auto t = oracle::mixture(oracle::pr(1, 0, 1), oracle::det(1, 0, 1, 1), 0.3);
  const BipartiteBox P = make_box(t);
  const auto E = correlators(P);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      EXPECT_NEAR(E[x][y], oracle::corr(t, x, y), 1e-12);
      EXPECT_NEAR(joint_expectation(P, x, y), oracle::corr(t, x, y), 1e-12);
    }
  EXPECT_NEAR(marginal_probability(P, Party::A, 1, 0), 0.3 * 0.5 + 0.7 * 0.0, 1e-12);
  EXPECT_NEAR(marginal_expectation(P, Party::B, 0), 0.7 * -1.0, 1e-12);
}

TEST(Mixing, WeightsMustBeConvex) {
  const std::array<BipartiteBox, 2> boxes{vertex(VertexId::pr(0, 0, 0)), vertex(VertexId::noise())};
  const std::array<double, 2> bad{0.7, 0.7};
  EXPECT_THROW(mix(boxes, bad), Error);
  const std::array<double, 2> neg{1.2, -0.2};
  EXPECT_THROW(mix(boxes, neg), Error);
  const std::array<double, 2> ok{0.25, 0.75};
  expect_table(mix(boxes, ok), oracle::mixture(oracle::pr(0, 0, 0), oracle::noise(), 0.25));
  EXPECT_THROW(isotropic(boxes[0], 1.5), Error);
}

TEST(LroGroup, HasOrder128AndIsClosed) {
  const auto& G = lro_group();
  ASSERT_EQ(G.size(), 128u);
  std::set<int> codes;
  for (const auto& g : G) codes.insert(g.code());
  EXPECT_EQ(codes.size(), 128u);
  for (int i = 0; i < 128; i += 7)
    for (int j = 0; j < 128; j += 5) EXPECT_TRUE(codes.count(compose(G[i], G[j]).code()));
}

TEST(LroGroup, CompositionMatchesSequentialApplication) {
  const BipartiteBox P = make_box(oracle::mixture(oracle::pr(0, 1, 0), oracle::det(1, 1, 0, 1), 0.6));
  const auto& G = lro_group();
  for (int i = 0; i < 128; i += 3)
    for (int j = 0; j < 128; j += 11) {
      const BipartiteBox seq = apply_lro(apply_lro(P, G[i]), G[j]);
      EXPECT_LT(max_abs_diff(seq, apply_lro(P, compose(G[i], G[j]))), 1e-15) << i << "," << j;
    }
}

TEST(LroGroup, InverseUndoes) {
  const BipartiteBox P = make_box(oracle::mixture(oracle::pr(1, 1, 0), oracle::det(0, 1, 1, 0), 0.45));
  for (const auto& g : lro_group()) {
    EXPECT_LT(max_abs_diff(apply_lro(apply_lro(P, g), inverse(g)), P), 1e-15);
    EXPECT_EQ(compose(g, inverse(g)), Lro::identity());
  }
}

TEST(LroGroup, PrOrbitIsAllEightPrBoxes) {
  std::set<std::array<double, 16>> orbit;
  for (const auto& g : lro_group()) orbit.insert(apply_lro(vertex(VertexId::pr(0, 0, 0)), g).data());
  EXPECT_EQ(orbit.size(), 8u);
  for (const auto& id : all_vertex_ids(VertexKind::PR)) EXPECT_TRUE(orbit.count(vertex(id).data()));
}

TEST(LroGroup, DeterministicOrbitIsAllSixteen) {
  std::set<std::array<double, 16>> orbit;
  for (const auto& g : lro_group()) orbit.insert(apply_lro(vertex(VertexId::det(0, 0, 0, 0)), g).data());
  EXPECT_EQ(orbit.size(), 16u);
}
