#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "scrolls/cone.hpp"
#include "scrolls/error.hpp"
#include "scrolls/graph.hpp"
#include "scrolls/sequences.hpp"
#include "scrolls/series.hpp"

using namespace scrolls;

namespace {

const PrimeField F;

using Edge = std::tuple<std::string, std::string, bool>;

std::set<Edge> edge_set(const SpecializationGraph& g) {
  std::set<Edge> out;
  for (const auto& e : g.edges) out.emplace(node_label(g.nodes[e.from]), node_label(g.nodes[e.to]), e.generic);
  return out;
}

}  // namespace

TEST(Cone, Base) {
  auto r = classify_cone_section({0, 1, 1}, std::vector<PrimeField::Elem>{1}, random_section_form(F, {1, 1}, 1));
  EXPECT_EQ(r.kind, ConeCase::Base);
  EXPECT_EQ(r.scroll, (ScrollType{1, 1}));
  EXPECT_FALSE(r.base_section);
}

TEST(Cone, SmallerCone) {
  auto r = classify_cone_section({0, 0, 2}, std::vector<PrimeField::Elem>{1, 0}, random_section_form(F, {2}, 1));
  EXPECT_EQ(r.kind, ConeCase::SmallerCone);
  EXPECT_EQ(r.scroll, (ScrollType{0, 2}));
}

TEST(Cone, ConeOverSection) {
  auto rest = random_section_form(F, {1, 2}, 5);
  auto r = classify_cone_section({0, 1, 2}, std::vector<PrimeField::Elem>{0}, rest);
  EXPECT_EQ(r.kind, ConeCase::ConeOverSection);
  ASSERT_TRUE(r.base_section);
  EXPECT_EQ(r.base_section->scroll_part, (ScrollType{3}));
  EXPECT_EQ(*r.base_section, analyze_section_form(rest));
  EXPECT_EQ(r.scroll, (ScrollType{0, 3}));
}

TEST(Cone, Errors) {
  auto rest = random_section_form(F, {1, 2}, 5);
  EXPECT_THROW(classify_cone_section({1, 1, 2}, std::vector<PrimeField::Elem>{}, rest), Error);
  EXPECT_THROW(classify_cone_section({0, 1, 2}, std::vector<PrimeField::Elem>{1, 1}, rest), Error);
  EXPECT_THROW(classify_cone_section({0, 1, 3}, std::vector<PrimeField::Elem>{1}, rest), Error);
  SectionForm zero({1, 2}, {BinaryForm(F, 1), BinaryForm(F, 2)});
  try {
    classify_cone_section({0, 1, 2}, std::vector<PrimeField::Elem>{0}, zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AllZero);
  }
}

TEST(Cone, CasesPartitionTheDomain) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    const int pos = 1 + static_cast<int>(rng() % 3);
    std::vector<int> positive;
    for (int i = 0; i < pos; ++i) positive.push_back(1 + static_cast<int>(rng() % 3));
    std::sort(positive.begin(), positive.end());
    parts.insert(parts.end(), positive.begin(), positive.end());
    ScrollType a(parts);
    std::vector<PrimeField::Elem> v(static_cast<std::size_t>(k), 0);
    const bool vertex_hit = rng() % 2;
    if (vertex_hit) v[rng() % v.size()] = 1 + static_cast<PrimeField::Elem>(rng() % 100);
    auto rest = random_section_form(F, ScrollType(positive), rng());
    if (!vertex_hit && pos == 1) continue;
    auto r = classify_cone_section(a, v, rest);
    if (!vertex_hit) {
      EXPECT_EQ(r.kind, ConeCase::ConeOverSection);
      EXPECT_EQ(r.scroll.zero_count(), k);
    } else if (k == 1) {
      EXPECT_EQ(r.kind, ConeCase::Base);
      EXPECT_EQ(a.zero_count(), 1);
    } else {
      EXPECT_EQ(r.kind, ConeCase::SmallerCone);
      EXPECT_EQ(r.scroll.zero_count(), k - 1);
    }
    EXPECT_EQ(r.scroll.dim(), a.dim() - 1);
  }
}

TEST(Graph, Partitions) {
  EXPECT_EQ(partitions(6).size(), 11u);
  EXPECT_EQ(partitions(1), (std::vector<ScrollType>{ScrollType{1}}));
  EXPECT_EQ(partitions(3), (std::vector<ScrollType>{{1, 1, 1}, {1, 2}, ScrollType{3}}));
}

TEST(Graph, CodimTwo) {
  auto g = specialization_graph(2);
  EXPECT_EQ(g.nodes, (std::vector<ScrollType>{{1, 1, 1}, {1, 2}, ScrollType{3}}));
  EXPECT_EQ(edge_set(g), (std::set<Edge>{{"(1^3)", "(1,2)", true}, {"(1,2)", "(3)", true}}));
}

TEST(Graph, CodimFiveAnchors) {
  auto edges = edge_set(specialization_graph(5));
  EXPECT_TRUE(edges.count({"(1^4,2)", "(1^2,2^2)", true}));
  EXPECT_TRUE(edges.count({"(1^4,2)", "(1^3,3)", false}));
  EXPECT_TRUE(edges.count({"(1^2,2^2)", "(2^3)", true}));
}

TEST(Graph, EdgesAgreeWithSectionsAndGenericSection) {
  for (int codim = 1; codim <= 9; ++codim) {
    auto g = specialization_graph(codim);
    EXPECT_EQ(g.nodes.size(), partitions(codim + 1).size());
    std::size_t expected = 0;
    for (const auto& a : g.nodes)
      if (a.dim() >= 2) expected += enumerate_sections(a).size();
    EXPECT_EQ(g.edges.size(), expected);
    for (const auto& e : g.edges) {
      const auto& a = g.nodes[e.from];
      const auto& b = g.nodes[e.to];
      EXPECT_TRUE(oracle::section_valid(oracle::to_seq(a), oracle::to_seq(b)));
      EXPECT_EQ(e.generic, oracle::to_seq(b) == oracle::generic_from_series(oracle::to_seq(a)));
    }
  }
  EXPECT_THROW(specialization_graph(0), Error);
}

TEST(Graph, Dot) {
  auto one = emit_dot(specialization_graph(1));
  EXPECT_NE(one.find("digraph specialization_codim1 {"), std::string::npos);
  EXPECT_NE(one.find("n0 -> n1 [style=dashed"), std::string::npos);
  EXPECT_EQ(one.back(), '\n');

  SpecializationGraph lone{0, {ScrollType{1}}, {}};
  auto iso = emit_dot(lone);
  EXPECT_NE(iso.find("n0 [label=\"(1)\""), std::string::npos);
  EXPECT_EQ(iso.find("->"), std::string::npos);

  auto five = emit_dot(specialization_graph(5));
  std::size_t nodes = 0, solid = 0;
  for (std::size_t pos = 0; (pos = five.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = five.find("style=solid", pos)) != std::string::npos; ++pos) ++solid;
  EXPECT_EQ(nodes, 11u);
  EXPECT_EQ(solid, 8u);
}
