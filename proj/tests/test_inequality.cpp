#include <gtest/gtest.h>

#include <chrono>

#include "fanohyp/golden.hpp"
#include "support/oracles.hpp"

using namespace fanohyp;

TEST(Inequality, GoldenVerdicts) {
  for (const auto& g : golden_systems()) {
    auto res = fm_feasibility(g.system);
    if (g.id == "SYS-12" || g.id == "SYS-12b") {
      ASSERT_TRUE(is_feasible(res)) << g.id;
      EXPECT_TRUE(satisfies(g.system, std::get<Feasible>(res).witness));
      continue;
    }
    ASSERT_FALSE(is_feasible(res)) << g.id;
    EXPECT_TRUE(check_certificate(g.system, std::get<Infeasible>(res).certificate)) << g.id;
  }
}

TEST(Inequality, Sys12Witness) {
  auto sys = golden_system("SYS-12");
  EXPECT_TRUE(satisfies(sys, {Rational(0), Rational(1, 6), Rational(19, 18)}));
  EXPECT_TRUE(oracle::vertex_oracle_feasible(sys));
  EXPECT_TRUE(oracle::vertex_oracle_feasible(golden_system("SYS-12b")));
}

TEST(Inequality, DisplayedPartsAlone) {
  for (const auto& g : golden_systems()) {
    LinearSystem shown(g.system.variables());
    for (std::size_t k = 0; k < g.displayed; ++k) shown.add(g.system.constraints()[k]);
    EXPECT_EQ(is_feasible(fm_feasibility(shown)), oracle::vertex_oracle_feasible(shown)) << g.id;
  }
}

TEST(Inequality, SimpleWitness) {
  LinearSystem s({"x"});
  s.greater_equal({{"x", Rational(1)}}, Rational(0));
  s.less_equal({{"x", Rational(1)}}, Rational(1));
  auto res = fm_feasibility(s);
  ASSERT_TRUE(is_feasible(res));
  EXPECT_EQ(std::get<Feasible>(res).witness, std::vector<Rational>{Rational(0)});

  LinearSystem open({"x"});
  open.greater({{"x", Rational(1)}}, Rational(0));
  open.less({{"x", Rational(1)}}, Rational(1, 3));
  auto w = std::get<Feasible>(fm_feasibility(open)).witness;
  EXPECT_TRUE(satisfies(open, w));
}

TEST(Inequality, StrictBoundaryContradiction) {
  LinearSystem s({"x"});
  s.less({{"x", Rational(1)}}, Rational(1));
  s.greater_equal({{"x", Rational(1)}}, Rational(1));
  auto res = fm_feasibility(s);
  ASSERT_FALSE(is_feasible(res));
  EXPECT_TRUE(check_certificate(s, std::get<Infeasible>(res).certificate));
}

TEST(Inequality, CertificateRejections) {
  auto sys = golden_system("SYS-13");
  EXPECT_FALSE(check_certificate(sys, {std::vector<Rational>(3)}));
  EXPECT_FALSE(check_certificate(sys, {{Rational(1), Rational(-1), Rational(0)}}));
  EXPECT_FALSE(check_certificate(sys, {{Rational(1), Rational(0), Rational(0)}}));
  EXPECT_TRUE(check_certificate(sys, {{Rational(1), Rational(1), Rational(0)}}));
  EXPECT_THROW(check_certificate(sys, {{Rational(1)}}), DimensionMismatch);
  EXPECT_THROW(satisfies(sys, {Rational(1), Rational(2)}), DimensionMismatch);
  Constraint bad{{Rational(1), Rational(1)}, Relation::Less, Rational(0)};
  EXPECT_THROW(sys.add(bad), DimensionMismatch);
}

TEST(Inequality, Parser) {
  auto s = parse_system("# header\n"
                        "2*x + 3/5 y <= 1   # trailing\n"
                        "\n"
                        "x > y - 1/2\n"
                        "z = 2\n"
                        "1 + x >= 0\n");
  ASSERT_EQ(s.variables(), (std::vector<std::string>{"x", "y", "z"}));
  ASSERT_EQ(s.constraints().size(), 5u);
  EXPECT_EQ(format_constraint(s, s.constraints()[0]), "2*x + 3/5*y <= 1");
  EXPECT_EQ(format_constraint(s, s.constraints()[1]), "-1*x + 1*y < 1/2");
  EXPECT_EQ(format_constraint(s, s.constraints()[2]), "1*z <= 2");
  EXPECT_EQ(format_constraint(s, s.constraints()[3]), "-1*z <= -2");
  EXPECT_EQ(format_constraint(s, s.constraints()[4]), "-1*x <= 1");
  auto reparsed = parse_system(format_system(s));
  EXPECT_EQ(format_system(reparsed), format_system(s));
}

TEST(Inequality, ParserErrors) {
  EXPECT_THROW(parse_system("x + y\n"), std::invalid_argument);
  EXPECT_THROW(parse_system("0 < x < 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_system("x ++ y < 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_system("2* < 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_system("x y < 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_system("1/0 x < 1\n"), std::domain_error);
}

TEST(Inequality, RandomSystemsAgreeWithVertexOracle) {
  std::mt19937_64 rng(20240611);
  int feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    auto sys = oracle::random_system(rng);
    auto res = fm_feasibility(sys);
    bool want = oracle::vertex_oracle_feasible(sys);
    ASSERT_EQ(is_feasible(res), want) << format_system(sys);
    if (auto* f = std::get_if<Feasible>(&res)) {
      EXPECT_TRUE(satisfies(sys, f->witness));
      ++feasible;
    } else {
      EXPECT_TRUE(check_certificate(sys, std::get<Infeasible>(res).certificate)) << format_system(sys);
    }
  }
  EXPECT_GT(feasible, 100);
  EXPECT_LT(feasible, 900);
}

TEST(Inequality, VerdictIndependentOfEliminationOrder) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    auto sys = oracle::random_system(rng, 4, 6);
    bool base = is_feasible(fm_feasibility(sys));
    std::vector<std::size_t> order(sys.dimension());
    std::iota(order.begin(), order.end(), 0);
    do {
      auto res = fm_feasibility(sys, order);
      ASSERT_EQ(is_feasible(res), base);
      if (auto* f = std::get_if<Feasible>(&res)) EXPECT_TRUE(satisfies(sys, f->witness));
      else EXPECT_TRUE(check_certificate(sys, std::get<Infeasible>(res).certificate));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(Inequality, EmptySystems) {
  EXPECT_TRUE(is_feasible(fm_feasibility(LinearSystem{})));
  LinearSystem s({"x", "y"});
  auto w = std::get<Feasible>(fm_feasibility(s)).witness;
  EXPECT_EQ(w, std::vector<Rational>(2));
}
