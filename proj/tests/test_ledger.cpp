#include <gtest/gtest.h>

#include "fanohyp/export.hpp"
#include "fanohyp/ledger.hpp"

using namespace fanohyp;

namespace {

const Catalog& catalog() {
  static const Catalog c = enumerate_families();
  return c;
}

const VerificationReport& report() {
  static const VerificationReport r = verify_all(catalog());
  return r;
}

const ClaimResult& claim(const std::string& id) {
  for (const auto& c : report().claims)
    if (c.id == id) return c;
  throw UnknownId(id);
}

const PointAnalysis& point_at(int gimel, Locus l) {
  for (const auto& p : family(catalog(), gimel).points)
    if (p.locus == l) return p;
  throw std::out_of_range(l.str());
}

} // namespace

TEST(Ledger, ExactClaims) {
  for (const char* id : {"C-95", "C-G6", "C-NEG", "C-ELL", "C-SPLIT", "C-ANCHOR"})
    EXPECT_EQ(claim(id).status, ClaimStatus::Match) << id;
  EXPECT_EQ(claim("C-Q1").status, ClaimStatus::Match);
  EXPECT_EQ(claim("C-Q1").convention, "after-superrigid");
}

TEST(Ledger, DocumentedAnomalies) {
  const auto& z = claim("C-ZERO");
  EXPECT_EQ(z.status, ClaimStatus::AnomalyMatch);
  EXPECT_EQ(z.missing, (IndexSet{80}));
  EXPECT_EQ(z.extra, (IndexSet{82}));
  const auto& sr = claim("C-SR");
  EXPECT_EQ(sr.status, ClaimStatus::AnomalyMatch);
  EXPECT_EQ(sr.missing, (IndexSet{11, 82}));
  EXPECT_EQ(sr.extra, (IndexSet{10, 80}));
  const auto& q2 = claim("C-Q2");
  EXPECT_EQ(q2.status, ClaimStatus::AnomalyMatch);
  EXPECT_TRUE(q2.missing.empty());
  EXPECT_EQ(q2.extra, (IndexSet{25, 33}));
  const auto& sm = claim("C-SM19");
  EXPECT_EQ(sm.status, ClaimStatus::AnomalyMatch);
  EXPECT_EQ(sm.extra, (IndexSet{28}));
  EXPECT_EQ(report().overall, ClaimStatus::AnomalyMatch);
}

TEST(Ledger, AnomalyFacts) {
  const auto& p80 = point_at(80, Locus::vertex(3));
  EXPECT_EQ(p80.qtype, (QuotientType{10, 3}));
  EXPECT_EQ(p80.ku3, Rational(1, 84));
  EXPECT_TRUE(p80.involutions.empty());
  for (const auto& p : family(catalog(), 82).points) EXPECT_TRUE(p.ku3.is_zero());
  for (const auto& p : family(catalog(), 11).points) EXPECT_TRUE(p.ku3.is_zero());

  const auto& p25 = point_at(25, Locus::vertex(4));
  EXPECT_EQ(p25.qtype, (QuotientType{7, 3}));
  EXPECT_EQ(p25.ku3, Rational(1, 6));
  ASSERT_EQ(p25.involutions.size(), 1u);
  EXPECT_EQ(p25.involutions[0], (Involution{InvolutionKind::Quadratic, 1}));

  const auto& a33 = point_at(33, Locus::vertex(3));
  EXPECT_EQ(a33.qtype, (QuotientType{5, 2}));
  EXPECT_EQ(a33.ku3, Rational(1, 21));
  EXPECT_TRUE(a33.has(InvolutionKind::Quadratic));
  const auto& b33 = point_at(33, Locus::vertex(4));
  EXPECT_EQ(b33.qtype, (QuotientType{7, 2}));
  EXPECT_EQ(b33.ku3, Rational(1, 15));
  EXPECT_TRUE(b33.has(InvolutionKind::Quadratic));

  const auto& f10 = family(catalog(), 10);
  ASSERT_EQ(f10.points.size(), 1u);
  EXPECT_EQ(f10.points[0].qtype, (QuotientType{3, 1}));
  EXPECT_EQ(f10.points[0].ku3, Rational(1, 2));
  EXPECT_TRUE(f10.points[0].involutions.empty());

  EXPECT_EQ(family(catalog(), 28).weights(), (std::array<int, 4>{3, 3, 4, 5}));
}

TEST(Ledger, SoftClaimsAreInformational) {
  const auto& c45 = claim("C-45");
  EXPECT_EQ(c45.status, ClaimStatus::Informational);
  EXPECT_EQ(c45.expected_count, 45);
  EXPECT_EQ(c45.computed.size(), 45u);
  EXPECT_EQ(claim("C-421").status, ClaimStatus::Informational);
}

TEST(Ledger, ConventionsBothEvaluated) {
  auto claims = ledger_claims();
  ClaimContext ctx(catalog());
  auto variants = evaluate_claim_variants(find_claim(claims, "C-Q2"), ctx);
  ASSERT_EQ(variants.size(), 2u);
  EXPECT_EQ(variants[0].convention, "after-superrigid");
  EXPECT_EQ(variants[1].convention, "all-survivors");
  for (const auto& v : variants) EXPECT_NE(v.status, ClaimStatus::Match);
}

TEST(Ledger, TamperedExpectationIsMismatch) {
  auto claims = ledger_claims();
  for (auto& c : claims)
    if (c.id == "C-NEG") c.expected.insert(5);
  auto rep = verify_all(catalog(), claims);
  EXPECT_EQ(rep.overall, ClaimStatus::Mismatch);
  ClaimContext ctx(catalog());
  auto r = evaluate_claim(find_claim(claims, "C-NEG"), ctx);
  EXPECT_EQ(r.status, ClaimStatus::Mismatch);
  EXPECT_EQ(r.missing, (IndexSet{5}));
}

TEST(Ledger, UnknownIds) {
  EXPECT_THROW(evaluate_claim(catalog(), "C-NOPE"), UnknownId);
  EXPECT_THROW(golden_system("SYS-99"), UnknownId);
}

TEST(Ledger, GoldenRecords) {
  for (const auto& f : report().fm) {
    EXPECT_TRUE(f.certificate_ok) << f.id;
    bool twelve = f.id == "SYS-12" || f.id == "SYS-12b";
    EXPECT_EQ(f.discrepancy(), twelve) << f.id;
    EXPECT_EQ(f.witness.empty(), !twelve) << f.id;
  }
}

TEST(Ledger, ReportJsonRoundTrip) {
  auto j = report_to_json(report());
  EXPECT_EQ(report_from_json(j), report());
  EXPECT_EQ(report_from_json(Json::parse(j.dump(2))), report());
}
