#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "fanohyp/blowup.hpp"
#include "fanohyp/catalog.hpp"
#include "fanohyp/golden.hpp"
#include "fanohyp/inequality.hpp"

namespace fanohyp {

using IndexSet = std::set<int>;

enum class ClaimStatus { Match, AnomalyMatch, Mismatch, Informational };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Match: return "Match";
    case ClaimStatus::AnomalyMatch: return "AnomalyMatch";
    case ClaimStatus::Mismatch: return "Mismatch";
    case ClaimStatus::Informational: return "Informational";
  }
  return "?";
}

inline ClaimStatus claim_status_from_string(const std::string& s) {
  for (auto st : {ClaimStatus::Match, ClaimStatus::AnomalyMatch, ClaimStatus::Mismatch, ClaimStatus::Informational})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown claim status " + s);
}

enum class SurvivorConvention { AfterSuperrigid, AllSurvivors };

inline std::string to_string(SurvivorConvention c) {
  return c == SurvivorConvention::AfterSuperrigid ? "after-superrigid" : "all-survivors";
}

/// Computed sets shared by several claims.
struct ClaimContext {
  const Catalog& catalog;
  IndexSet from_six;
  IndexSet nonpositive;
  IndexSet survivors;
  IndexSet superrigid;

  explicit ClaimContext(const Catalog& c) : catalog(c) {
    for (const auto& r : c)
      if (r.gimel >= 6) from_six.insert(r.gimel);
    for (int g : from_six) {
      bool all = std::all_of(rec(g).points.begin(), rec(g).points.end(),
                             [](const PointAnalysis& p) { return p.ku3.sign() <= 0; });
      (all ? nonpositive : survivors).insert(g);
    }
    for (int g : survivors) {
      bool any = std::any_of(rec(g).points.begin(), rec(g).points.end(), [](const PointAnalysis& p) {
        return p.ku3.sign() > 0 && !p.involutions.empty();
      });
      if (!any) superrigid.insert(g);
    }
  }

  const FamilyRecord& rec(int g) const { return family(catalog, g); }

  IndexSet pool(SurvivorConvention c) const {
    if (c == SurvivorConvention::AllSurvivors) return survivors;
    IndexSet out;
    std::set_difference(survivors.begin(), survivors.end(), superrigid.begin(), superrigid.end(),
                        std::inserter(out, out.end()));
    return out;
  }

  IndexSet having_point(const IndexSet& from, const std::function<bool(const PointAnalysis&)>& pred) const {
    IndexSet out;
    for (int g : from)
      if (std::any_of(rec(g).points.begin(), rec(g).points.end(), pred)) out.insert(g);
    return out;
  }
};

struct LedgerClaim {
  std::string id;
  std::string predicate;
  IndexSet expected;
  std::string anchor;
  std::map<int, std::string> known_anomalies;
  bool soft = false;
  std::string note;
  /// Alternative conventions; one computed set per convention name.
  std::function<std::vector<std::pair<std::string, IndexSet>>(const ClaimContext&)> compute;
  std::optional<int> expected_count;
};

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Mismatch;
  IndexSet expected;
  IndexSet computed;
  IndexSet missing;
  IndexSet extra;
  std::string anchor;
  std::string convention;
  std::map<int, std::string> anomalies;
  std::string note;
  std::optional<int> expected_count;
  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct FmRecord {
  std::string id;
  Verdict expected = Verdict::Infeasible;
  Verdict verdict = Verdict::Infeasible;
  bool certificate_ok = false;
  std::vector<std::string> witness;
  bool discrepancy() const { return expected != verdict; }
  friend bool operator==(const FmRecord&, const FmRecord&) = default;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  std::vector<FmRecord> fm;
  ClaimStatus overall = ClaimStatus::Match;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline IndexSet range_set(int lo, int hi) {
  IndexSet s;
  for (int g = lo; g <= hi; ++g) s.insert(g);
  return s;
}

inline IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

/// Weight anchors for family ordinals.
inline const std::map<int, std::array<int, 4>>& ordinal_anchors() {
  static const std::map<int, std::array<int, 4>> anchors{
      {6, {1, 1, 2, 4}},   {7, {1, 2, 2, 3}},   {14, {1, 1, 4, 6}},  {18, {2, 2, 3, 5}},
      {23, {2, 3, 4, 5}},  {36, {1, 4, 6, 7}},  {38, {2, 3, 5, 8}},  {43, {2, 4, 5, 9}},
      {47, {1, 5, 7, 8}},  {58, {3, 4, 7, 10}}, {82, {1, 5, 12, 18}}};
  return anchors;
}

inline const IndexSet& split_families() {
  static const IndexSet s{23, 40, 44, 61, 76};
  return s;
}

inline bool smooth_point_hypothesis(const FamilyRecord& r) {
  const auto& a = r.weights();
  const int d = r.degree();
  const bool divides = d % a[3] == 0;
  const Rational& k = r.kx3;
  return (divides && a[0] != a[1] && Rational(a[1] * a[2]) * k <= Rational(1)) ||
         (divides && a[0] == 1 && a[0] != a[1] && Rational(a[2]) * k <= Rational(1)) ||
         (a[0] != a[1] && Rational(a[0] * a[3]) * k <= Rational(1));
}

inline std::vector<LedgerClaim> ledger_claims() {
  using Ctx = ClaimContext;
  using Sets = std::vector<std::pair<std::string, IndexSet>>;
  auto single = [](IndexSet s) { return Sets{{"", std::move(s)}}; };
  std::vector<LedgerClaim> claims;

  claims.push_back({"C-95", "number of catalog families", range_set(1, kFamilyCount),
                    "catalog size", {}, false, "",
                    [=](const Ctx& c) { return single(range_set(1, static_cast<int>(c.catalog.size()))); }});

  claims.push_back({"C-G6", "kx3 <= 1", range_set(6, 95), "families of anticanonical degree at most one",
                    {}, false, "", [=](const Ctx& c) {
                      IndexSet s;
                      for (const auto& r : c.catalog)
                        if (r.kx3 <= Rational(1)) s.insert(r.gimel);
                      return single(s);
                    }});

  const IndexSet neg{75, 84, 87, 93};
  claims.push_back({"C-NEG", "gimel >= 6 and every point has ku3 < 0", neg,
                    "negative degree after every blow-up", {}, false, "", [=](const Ctx& c) {
                      IndexSet s;
                      for (int g : c.from_six)
                        if (std::all_of(c.rec(g).points.begin(), c.rec(g).points.end(),
                                        [](const PointAnalysis& p) { return p.ku3.sign() < 0; }))
                          s.insert(g);
                      return single(s);
                    }});

  const IndexSet zero_list{11, 14, 19, 22, 28, 34, 37, 39, 49, 52, 53, 57, 59, 64,
                           66, 70, 72, 73, 78, 80, 81, 86, 88, 89, 90, 92, 94, 95};
  claims.push_back(
      {"C-ZERO", "gimel >= 6 and every point has ku3 <= 0", set_union(neg, zero_list),
       "nonpositive degree after every blow-up",
       {{82, "both points 1/5(1,2,3) and 1/6(1,1,5) give ku3 = 1/30 - 1/30 = 0"},
        {80, "the point 1/10(1,3,7) at vertex:3 gives ku3 = 1/60 - 1/210 = 1/84 > 0"}},
       false, "the listed 80 and the computed 82 appear exchanged",
       [=](const Ctx& c) { return single(c.nonpositive); }});

  claims.push_back(
      {"C-SR", "survivor with no involution-bearing point of positive ku3",
       IndexSet{11, 21, 29, 35, 50, 51, 55, 62, 63, 67, 71, 77, 82, 83, 85, 91},
       "families without involutions at centres of positive degree",
       {{11, "all five points 1/2(1,1,1) of (1,2,2,5;10) have ku3 = 0, so 11 is not a survivor"},
        {82, "both points have ku3 = 0, so 82 is not a survivor"},
        {10, "(1,1,3,5;10) has one point 1/3(1,1,2) with ku3 = 1/2 and no involution tag"},
        {80, "(3,4,10,17;34) keeps 1/10(1,3,7) with ku3 = 1/84 and carries no involution tag"}},
       false, "the listed 11 duplicates the nonpositive list where 10 is computed",
       [=](const Ctx& c) { return single(c.superrigid); }});

  claims.push_back({"C-ELL", "survivor with an elliptic point of positive ku3",
                    IndexSet{7, 20, 23, 36, 40, 44, 61, 76}, "elliptic involution families", {}, false, "",
                    [=](const Ctx& c) {
                      return single(c.having_point(c.pool(SurvivorConvention::AfterSuperrigid), [](const PointAnalysis& p) {
                        return p.ku3.sign() > 0 && p.has(InvolutionKind::Elliptic);
                      }));
                    }});

  auto quadratic_claim = [](bool a_is_one) {
    return [=](const Ctx& c) {
      Sets out;
      for (auto conv : {SurvivorConvention::AfterSuperrigid, SurvivorConvention::AllSurvivors})
        out.emplace_back(to_string(conv), c.having_point(c.pool(conv), [=](const PointAnalysis& p) {
          return p.ku3.sign() > 0 && (p.qtype.a == 1) == a_is_one && p.has(InvolutionKind::Quadratic);
        }));
      return out;
    };
  };
  claims.push_back({"C-Q1", "survivor with a quadratic point of positive ku3 and a = 1",
                    IndexSet{6, 7, 8, 9, 12, 13, 16, 15, 17, 20, 25, 26, 30, 36, 31, 41, 47, 54},
                    "quadratic involutions at points 1/r(1,1,r-1)", {}, false,
                    "listed out of order as 16,15,17 and 36,31", quadratic_claim(true)});
  claims.push_back({"C-Q2", "survivor with a quadratic point of positive ku3 and a != 1",
                    IndexSet{13, 18, 23, 24, 27, 32, 38, 40, 42, 43, 44, 45, 46, 48, 56, 58, 60, 61, 65, 68,
                             69, 74, 76, 79},
                    "quadratic involutions at points with a > 1",
                    {{25, "1/7(1,3,4) at vertex:4 carries Quadratic(1) with ku3 = 1/6"},
                     {33, "1/5(1,2,3) at vertex:3 carries Quadratic(4) with ku3 = 1/21, and 1/7(1,2,5) at "
                          "vertex:4 carries Quadratic(2) with ku3 = 1/15"}},
                    false, "", quadratic_claim(false)});

  claims.push_back({"C-45", "some point carries an involution tag", {}, "exactly 45 families with involutions",
                    {}, true, "expected cardinality 45", [=](const Ctx& c) {
                      IndexSet s;
                      for (const auto& r : c.catalog)
                        if (std::any_of(r.points.begin(), r.points.end(),
                                        [](const PointAnalysis& p) { return !p.involutions.empty(); }))
                          s.insert(r.gimel);
                      return single(s);
                    }, 45});

  claims.push_back({"C-SM19", "gimel >= 6 outside the smooth-point multiplicity hypotheses",
                    IndexSet{6, 7, 8, 9, 10, 12, 13, 14, 16, 18, 19, 20, 22, 23, 24, 25, 32, 33, 38},
                    "smooth point exceptions",
                    {{28, "(3,3,4,5;15) has a1 = a2, so none of the three hypotheses applies"}}, false, "",
                    [=](const Ctx& c) {
                      IndexSet s;
                      for (int g : c.from_six)
                        if (!smooth_point_hypothesis(c.rec(g))) s.insert(g);
                      return single(s);
                    }});

  claims.push_back({"C-SPLIT", "kw3 = 0 over the vertex:3 and vertex:4 points", split_families(),
                    "anticanonical degree split between two points", {}, false, "", [=](const Ctx& c) {
                      IndexSet s;
                      for (int g : split_families()) {
                        if (g > static_cast<int>(c.catalog.size())) continue;
                        const auto& r = c.rec(g);
                        const PointAnalysis *p3 = nullptr, *p4 = nullptr;
                        for (const auto& p : r.points) {
                          if (p.locus == Locus::vertex(3)) p3 = &p;
                          if (p.locus == Locus::vertex(4)) p4 = &p;
                        }
                        if (p3 && p4 && kw3(r.kx3, p3->qtype, p4->qtype).is_zero()) s.insert(g);
                      }
                      return single(s);
                    }});

  IndexSet anchor_keys;
  for (const auto& [g, w] : ordinal_anchors()) anchor_keys.insert(g);
  claims.push_back({"C-ANCHOR", "ordinal matches the anchored weights", anchor_keys, "ordinal anchors", {},
                    false, "43 is anchored at (2,4,5,9;20); the weights (2,3,5,9) sum to 19, not 20",
                    [=](const Ctx& c) {
                      IndexSet s;
                      for (const auto& [g, w] : ordinal_anchors())
                        if (g <= static_cast<int>(c.catalog.size()) && c.rec(g).weights() == w) s.insert(g);
                      return single(s);
                    }});

  claims.push_back({"C-421", "survivor with a point whose blow-up has a singular child",
                    IndexSet{8, 12, 13, 16, 20, 24, 25, 26, 31, 33, 36, 38, 46, 47, 48, 54, 56, 58, 65, 74, 79},
                    "singular points on the exceptional divisor", {}, true,
                    "computable superset of a list whose defining property is not arithmetic",
                    [=](const Ctx& c) {
                      return single(c.having_point(c.survivors, [](const PointAnalysis& p) {
                        return !p.children.empty();
                      }));
                    }});
  return claims;
}

inline ClaimResult judge(const LedgerClaim& claim, const std::string& convention, const IndexSet& computed) {
  ClaimResult r;
  r.id = claim.id;
  r.expected = claim.expected;
  r.computed = computed;
  r.missing = set_minus(claim.expected, computed);
  r.extra = set_minus(computed, claim.expected);
  r.anchor = claim.anchor;
  r.convention = convention;
  r.note = claim.note;
  r.expected_count = claim.expected_count;
  if (claim.expected_count) r.extra.clear();
  if (claim.soft) {
    r.status = ClaimStatus::Informational;
    return r;
  }
  if (r.missing.empty() && r.extra.empty()) {
    r.status = ClaimStatus::Match;
    return r;
  }
  bool covered = true;
  for (const auto* diff : {&r.missing, &r.extra})
    for (int g : *diff) {
      auto it = claim.known_anomalies.find(g);
      if (it == claim.known_anomalies.end()) covered = false;
      else r.anomalies.insert(*it);
    }
  r.status = covered ? ClaimStatus::AnomalyMatch : ClaimStatus::Mismatch;
  return r;
}

inline int severity(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Match: return 0;
    case ClaimStatus::AnomalyMatch: return 1;
    case ClaimStatus::Mismatch: return 2;
    case ClaimStatus::Informational: return -1;
  }
  return 2;
}

/// Evaluates a claim; with several conventions the best-scoring one is kept.
inline ClaimResult evaluate_claim(const LedgerClaim& claim, const ClaimContext& ctx) {
  std::optional<ClaimResult> best;
  for (const auto& [conv, set] : claim.compute(ctx)) {
    auto r = judge(claim, conv, set);
    if (!best || severity(r.status) < severity(best->status)) best = std::move(r);
  }
  return *best;
}

/// All convention variants of a claim, in registry order.
inline std::vector<ClaimResult> evaluate_claim_variants(const LedgerClaim& claim, const ClaimContext& ctx) {
  std::vector<ClaimResult> out;
  for (const auto& [conv, set] : claim.compute(ctx)) out.push_back(judge(claim, conv, set));
  return out;
}

inline const LedgerClaim& find_claim(const std::vector<LedgerClaim>& claims, const std::string& id) {
  for (const auto& c : claims)
    if (c.id == id) return c;
  throw UnknownId("unknown ledger claim " + id);
}

inline ClaimResult evaluate_claim(const Catalog& catalog, const std::string& id) {
  static const auto claims = ledger_claims();
  ClaimContext ctx(catalog);
  return evaluate_claim(find_claim(claims, id), ctx);
}

inline FmRecord run_golden(const GoldenSystem& g) {
  FmRecord rec;
  rec.id = g.id;
  rec.expected = g.expected;
  auto res = fm_feasibility(g.system);
  if (auto* inf = std::get_if<Infeasible>(&res)) {
    rec.verdict = Verdict::Infeasible;
    rec.certificate_ok = check_certificate(g.system, inf->certificate);
  } else {
    const auto& w = std::get<Feasible>(res).witness;
    rec.verdict = Verdict::Feasible;
    rec.certificate_ok = satisfies(g.system, w);
    for (const auto& x : w) rec.witness.push_back(x.fraction());
  }
  return rec;
}

inline VerificationReport verify_all(const Catalog& catalog,
                                     const std::vector<LedgerClaim>& claims = ledger_claims()) {
  VerificationReport rep;
  ClaimContext ctx(catalog);
  for (const auto& c : claims) {
    auto r = evaluate_claim(c, ctx);
    if (severity(r.status) > severity(rep.overall)) rep.overall = r.status;
    rep.claims.push_back(std::move(r));
  }
  for (const auto& g : golden_systems()) rep.fm.push_back(run_golden(g));
  return rep;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  using J = nlohmann::ordered_json;
  J claims = J::array();
  for (const auto& c : rep.claims) {
    J anomalies = J::object();
    for (const auto& [g, why] : c.anomalies) anomalies[std::to_string(g)] = why;
    claims.push_back(J{{"id", c.id},
                       {"status", to_string(c.status)},
                       {"computed", c.computed},
                       {"missing", c.missing},
                       {"extra", c.extra},
                       {"anchor", c.anchor},
                       {"expected", c.expected},
                       {"convention", c.convention},
                       {"anomalies", anomalies},
                       {"note", c.note},
                       {"expected_count", c.expected_count ? J(*c.expected_count) : J(nullptr)}});
  }
  J fm = J::array();
  for (const auto& f : rep.fm)
    fm.push_back(J{{"id", f.id},
                   {"expected", to_string(f.expected)},
                   {"verdict", to_string(f.verdict)},
                   {"certificate_ok", f.certificate_ok},
                   {"discrepancy", f.discrepancy()},
                   {"witness", f.witness}});
  return J{{"overall", to_string(rep.overall)}, {"claims", claims}, {"fm", fm}};
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport rep;
  rep.overall = claim_status_from_string(j.at("overall").get<std::string>());
  for (const auto& c : j.at("claims")) {
    ClaimResult r;
    r.id = c.at("id").get<std::string>();
    r.status = claim_status_from_string(c.at("status").get<std::string>());
    r.computed = c.at("computed").get<IndexSet>();
    r.missing = c.at("missing").get<IndexSet>();
    r.extra = c.at("extra").get<IndexSet>();
    r.anchor = c.at("anchor").get<std::string>();
    r.expected = c.at("expected").get<IndexSet>();
    r.convention = c.at("convention").get<std::string>();
    for (const auto& [k, v] : c.at("anomalies").items()) r.anomalies[std::stoi(k)] = v.get<std::string>();
    r.note = c.at("note").get<std::string>();
    if (!c.at("expected_count").is_null()) r.expected_count = c.at("expected_count").get<int>();
    rep.claims.push_back(std::move(r));
  }
  auto verdict = [](const std::string& s) {
    if (s == "FEASIBLE") return Verdict::Feasible;
    if (s == "INFEASIBLE") return Verdict::Infeasible;
    throw std::invalid_argument("unknown verdict " + s);
  };
  for (const auto& f : j.at("fm")) {
    FmRecord r;
    r.id = f.at("id").get<std::string>();
    r.expected = verdict(f.at("expected").get<std::string>());
    r.verdict = verdict(f.at("verdict").get<std::string>());
    r.certificate_ok = f.at("certificate_ok").get<bool>();
    r.witness = f.at("witness").get<std::vector<std::string>>();
    rep.fm.push_back(std::move(r));
  }
  return rep;
}

} // namespace fanohyp
