#include <gtest/gtest.h>

#include "fanohyp/singularities.hpp"
#include "support/oracles.hpp"

using namespace fanohyp;

namespace {

QuotientType expect_type(const QuotientOutcome& o) {
  EXPECT_TRUE(std::holds_alternative<QuotientType>(o));
  return std::holds_alternative<QuotientType>(o) ? std::get<QuotientType>(o) : QuotientType{};
}

BasketEntry expect_entry(const auto& o) {
  EXPECT_TRUE(std::holds_alternative<BasketEntry>(o));
  return std::holds_alternative<BasketEntry>(o) ? std::get<BasketEntry>(o) : BasketEntry{};
}

Basket expect_basket(const WeightSystem& ws) {
  auto b = basket(ws);
  EXPECT_TRUE(std::holds_alternative<Basket>(b)) << ws.str();
  return std::holds_alternative<Basket>(b) ? std::get<Basket>(b) : Basket{};
}

} // namespace

TEST(Singularities, NormalizeExamples) {
  EXPECT_EQ(expect_type(normalize_quotient(5, {1, 7, 8})), (QuotientType{5, 2}));
  EXPECT_EQ(expect_type(normalize_quotient(10, {1, 3, 7})), (QuotientType{10, 3}));
  EXPECT_TRUE(std::holds_alternative<NotIsolated>(normalize_quotient(4, {2, 1, 3})));
  EXPECT_TRUE(std::holds_alternative<NotTerminal>(normalize_quotient(5, {1, 1, 1})));
  EXPECT_THROW(normalize_quotient(1, {1, 1, 1}), std::invalid_argument);
}

TEST(Singularities, NormalizeMatchesBruteForce) {
  for (int r = 2; r <= 30; ++r)
    for (int x = 0; x < r; ++x)
      for (int y = x; y < r; ++y)
        for (int z = y; z < r; ++z) {
          auto got = normalize_quotient(r, {x, y, z});
          auto want = oracle::brute_terminal_type(r, {x, y, z});
          bool isolated = std::gcd(x, r) == 1 && std::gcd(y, r) == 1 && std::gcd(z, r) == 1;
          if (want) {
            ASSERT_TRUE(std::holds_alternative<QuotientType>(got));
            EXPECT_EQ(std::get<QuotientType>(got), (QuotientType{want->first, want->second}));
          } else if (!isolated) {
            EXPECT_TRUE(std::holds_alternative<NotIsolated>(got));
          } else {
            EXPECT_TRUE(std::holds_alternative<NotTerminal>(got));
          }
        }
}

TEST(Singularities, NormalizeIdempotentExhaustive) {
  for (int r = 2; r <= 200; ++r)
    for (int a = 1; 2 * a <= r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      auto q = expect_type(normalize_quotient(r, {1, a, r - a}));
      EXPECT_EQ(q, (QuotientType{r, a}));
      EXPECT_TRUE(q.valid());
      EXPECT_EQ(expect_type(normalize_quotient(r, {a, r - a, 1})), q);
    }
}

TEST(Singularities, VertexPoints) {
  WeightSystem x82(1, 5, 12, 18);
  auto p = expect_entry(vertex_point(x82, 2));
  EXPECT_EQ(p.qtype, (QuotientType{5, 2}));
  EXPECT_EQ(p.locus, Locus::vertex(2));
  auto t = expect_entry(vertex_point(WeightSystem(3, 4, 7, 10), 4));
  EXPECT_EQ(t.qtype, (QuotientType{10, 3}));
  EXPECT_TRUE(std::holds_alternative<NotOnX>(vertex_point(WeightSystem(1, 2, 6, 9), 4)));
  EXPECT_THROW(vertex_point(x82, 0), std::out_of_range);
}

TEST(Singularities, EdgePoints) {
  auto six = expect_entry(edge_points(WeightSystem(2, 2, 3, 5), 1, 2));
  EXPECT_EQ(six.count, 6);
  EXPECT_EQ(six.qtype, (QuotientType{2, 1}));
  auto e82 = expect_entry(edge_points(WeightSystem(1, 5, 12, 18), 3, 4));
  EXPECT_EQ(e82.count, 1);
  EXPECT_EQ(e82.qtype, (QuotientType{6, 1}));
  auto e = expect_entry(edge_points(WeightSystem(1, 2, 6, 9), 3, 4));
  EXPECT_EQ(e.count, 1);
  EXPECT_EQ(e.qtype, (QuotientType{3, 1}));
  EXPECT_TRUE(std::holds_alternative<TrivialStabilizer>(edge_points(WeightSystem(2, 3, 4, 5), 1, 2)));
  EXPECT_TRUE(std::holds_alternative<EdgeContained>(edge_points(WeightSystem(1, 1, 4, 6), 3, 4)) == false);
}

TEST(Singularities, Baskets) {
  auto b7 = expect_basket(WeightSystem(1, 2, 2, 3));
  EXPECT_EQ(b7.count_of({2, 1}), 4);
  EXPECT_EQ(b7.count_of({3, 1}), 1);
  EXPECT_EQ(b7.total_points(), 5);

  auto b82 = expect_basket(WeightSystem(1, 5, 12, 18));
  ASSERT_EQ(b82.entries.size(), 2u);
  EXPECT_EQ(b82.entries[0].qtype, (QuotientType{5, 2}));
  EXPECT_EQ(b82.entries[1].qtype, (QuotientType{6, 1}));

  auto b41 = expect_basket(WeightSystem(1, 4, 5, 10));
  EXPECT_EQ(b41.count_of({2, 1}), 1);
  EXPECT_EQ(b41.count_of({5, 1}), 2);
  EXPECT_EQ(b41.total_points(), 3);

  EXPECT_TRUE(expect_basket(WeightSystem(1, 1, 1, 1)).entries.empty());
}

TEST(Singularities, BasketSortedAndDistinctLoci) {
  for (const auto& ws : {WeightSystem(2, 2, 3, 5), WeightSystem(3, 4, 10, 17), WeightSystem(1, 2, 2, 3)}) {
    auto b = expect_basket(ws);
    EXPECT_TRUE(std::is_sorted(b.entries.begin(), b.entries.end()));
    std::set<std::string> loci;
    for (const auto& e : b.entries) {
      EXPECT_TRUE(loci.insert(e.locus.str()).second);
      EXPECT_TRUE(e.qtype.valid());
      EXPECT_GE(e.count, 1);
      if (e.locus.kind == Locus::Kind::Vertex) EXPECT_EQ(e.count, 1);
    }
    EXPECT_EQ(basket(ws), basket(ws));
  }
}

TEST(Singularities, Terminality) {
  EXPECT_TRUE(is_terminal_general(WeightSystem(1, 2, 2, 3)));
  EXPECT_FALSE(is_terminal_general(WeightSystem(2, 2, 4, 5)));
  EXPECT_TRUE(is_terminal_general(WeightSystem(1, 1, 1, 1)));
}

TEST(Singularities, LocusText) {
  EXPECT_EQ(Locus::vertex(3).str(), "vertex:3");
  EXPECT_EQ(Locus::edge(4, 2).str(), "edge:2,4");
  EXPECT_EQ(Locus::parse("edge:2,4"), Locus::edge(2, 4));
  EXPECT_EQ(Locus::parse("vertex:1"), Locus::vertex(1));
  EXPECT_THROW(Locus::parse("edge:4,2"), std::invalid_argument);
  EXPECT_THROW(Locus::parse("face:1"), std::invalid_argument);
}
