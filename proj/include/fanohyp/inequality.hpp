#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fanohyp/rational.hpp"

namespace fanohyp {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Relation { Less, LessEqual };

/// sum_k coeffs[k] * x_k  (< or <=)  rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEqual;
  Rational rhs;

  bool strict() const { return rel == Relation::Less; }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

using LinearTerms = std::vector<std::pair<std::string, Rational>>;

class LinearSystem {
public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  std::size_t dimension() const { return vars_.size(); }

  std::size_t variable(const std::string& name) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end()) return static_cast<std::size_t>(it - vars_.begin());
    vars_.push_back(name);
    for (auto& r : rows_) r.coeffs.emplace_back(0);
    return vars_.size() - 1;
  }

  void add(Constraint c) {
    if (c.coeffs.size() != vars_.size())
      throw DimensionMismatch("constraint has " + std::to_string(c.coeffs.size()) +
                              " coefficients for " + std::to_string(vars_.size()) + " variables");
    rows_.push_back(std::move(c));
  }

  /// lhs rel rhs where lhs is a list of (name, coefficient).
  void add(const LinearTerms& lhs, Relation rel, const Rational& rhs) {
    for (const auto& t : lhs) variable(t.first);
    Constraint c{std::vector<Rational>(vars_.size()), rel, rhs};
    for (const auto& [name, coef] : lhs) c.coeffs[variable(name)] += coef;
    rows_.push_back(std::move(c));
  }
  void less(const LinearTerms& lhs, const Rational& rhs) { add(lhs, Relation::Less, rhs); }
  void less_equal(const LinearTerms& lhs, const Rational& rhs) { add(lhs, Relation::LessEqual, rhs); }
  void greater(const LinearTerms& lhs, const Rational& rhs) { add(negated(lhs), Relation::Less, -rhs); }
  void greater_equal(const LinearTerms& lhs, const Rational& rhs) {
    add(negated(lhs), Relation::LessEqual, -rhs);
  }
  void equal(const LinearTerms& lhs, const Rational& rhs) {
    less_equal(lhs, rhs);
    greater_equal(lhs, rhs);
  }

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

private:
  static LinearTerms negated(LinearTerms t) {
    for (auto& p : t) p.second = -p.second;
    return t;
  }

  std::vector<std::string> vars_;
  std::vector<Constraint> rows_;
};

struct InfeasibilityCertificate {
  std::vector<Rational> multipliers;
  friend bool operator==(const InfeasibilityCertificate&, const InfeasibilityCertificate&) = default;
};

struct Feasible {
  std::vector<Rational> witness;
};
struct Infeasible {
  InfeasibilityCertificate certificate;
};
using FeasibilityResult = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const FeasibilityResult& r) { return std::holds_alternative<Feasible>(r); }

inline bool satisfies(const Constraint& c, const std::vector<Rational>& x) {
  Rational lhs;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!c.coeffs[k].is_zero()) lhs += c.coeffs[k] * x[k];
  return c.strict() ? lhs < c.rhs : lhs <= c.rhs;
}

inline bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.dimension()) throw DimensionMismatch("witness size differs from variable count");
  for (const auto& c : sys.constraints())
    if (!satisfies(c, x)) return false;
  return true;
}

inline bool check_certificate(const LinearSystem& sys, const InfeasibilityCertificate& cert) {
  const auto& rows = sys.constraints();
  if (cert.multipliers.size() != rows.size())
    throw DimensionMismatch("certificate has " + std::to_string(cert.multipliers.size()) +
                            " multipliers for " + std::to_string(rows.size()) + " constraints");
  bool any = false, strict = false;
  std::vector<Rational> sum(sys.dimension());
  Rational c;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Rational& m = cert.multipliers[k];
    if (m.sign() < 0) return false;
    if (m.is_zero()) continue;
    any = true;
    strict |= rows[k].strict();
    for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += m * rows[k].coeffs[v];
    c += m * rows[k].rhs;
  }
  if (!any) return false;
  for (const auto& s : sum)
    if (!s.is_zero()) return false;
  return strict ? c.sign() <= 0 : c.sign() < 0;
}

namespace detail {

struct FmRow {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
  std::vector<Rational> mult;

  bool contradictory() const { return strict ? rhs.sign() <= 0 : rhs.sign() < 0; }
  bool trivial() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
  void scale(const Rational& s) {
    for (auto& c : coeffs) c *= s;
    rhs *= s;
    for (auto& m : mult) m *= s;
  }
};

inline void normalize(FmRow& r) {
  for (const auto& c : r.coeffs)
    if (!c.is_zero()) {
      r.scale(Rational(1) / abs(c));
      return;
    }
}

/// Keeps one row per coefficient direction, the tightest one.
inline std::vector<FmRow> deduplicate(std::vector<FmRow> rows) {
  std::map<std::vector<Rational>, std::size_t> seen;
  std::vector<FmRow> out;
  for (auto& r : rows) {
    auto [it, inserted] = seen.try_emplace(r.coeffs, out.size());
    if (inserted) {
      out.push_back(std::move(r));
      continue;
    }
    FmRow& kept = out[it->second];
    if (r.rhs < kept.rhs || (r.rhs == kept.rhs && r.strict && !kept.strict)) kept = std::move(r);
  }
  return out;
}

struct Stage {
  std::size_t var;
  std::vector<FmRow> bounding;
};

inline std::optional<FmRow> first_contradiction(const std::vector<FmRow>& rows) {
  for (const auto& r : rows)
    if (r.trivial() && r.contradictory()) return r;
  return std::nullopt;
}

inline std::size_t choose_variable(const std::vector<FmRow>& rows, const std::vector<bool>& done) {
  std::size_t best = done.size();
  long best_cost = 0;
  for (std::size_t v = 0; v < done.size(); ++v) {
    if (done[v]) continue;
    long pos = 0, neg = 0;
    for (const auto& r : rows) {
      int s = r.coeffs[v].sign();
      pos += s > 0;
      neg += s < 0;
    }
    long cost = pos * neg - pos - neg;
    if (best == done.size() || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

inline Rational pick_value(const std::optional<Rational>& lo, bool lo_strict,
                           const std::optional<Rational>& hi, bool hi_strict) {
  auto fits = [&](const Rational& x) {
    if (lo && (lo_strict ? !(x > *lo) : !(x >= *lo))) return false;
    if (hi && (hi_strict ? !(x < *hi) : !(x <= *hi))) return false;
    return true;
  };
  std::vector<Rational> candidates{Rational(0)};
  if (lo) candidates.push_back(*lo);
  if (hi) candidates.push_back(*hi);
  if (lo && hi) candidates.push_back((*lo + *hi) / Rational(2));
  if (lo) candidates.push_back(*lo + Rational(1));
  if (hi) candidates.push_back(*hi - Rational(1));
  for (const auto& c : candidates)
    if (fits(c)) return c;
  throw std::logic_error("empty interval during back-substitution");
}

} // namespace detail

/**
 * @brief Exact Fourier-Motzkin decision with witness or Farkas certificate.
 *
 * When order is given it lists the variables in elimination order; otherwise
 * each step eliminates the variable producing the fewest combined rows.
 */
inline FeasibilityResult fm_feasibility(const LinearSystem& sys,
                                        std::optional<std::vector<std::size_t>> order = std::nullopt) {
  using detail::FmRow;
  const std::size_t n = sys.dimension(), m = sys.constraints().size();
  if (order) {
    auto sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(n);
    std::iota(iota.begin(), iota.end(), 0);
    if (sorted != iota) throw DimensionMismatch("elimination order is not a permutation of the variables");
  }
  std::vector<FmRow> rows;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& c = sys.constraints()[k];
    FmRow r{c.coeffs, c.rhs, c.strict(), std::vector<Rational>(m)};
    r.mult[k] = Rational(1);
    rows.push_back(std::move(r));
  }
  std::vector<detail::Stage> stages;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    if (auto bad = detail::first_contradiction(rows)) return Infeasible{{bad->mult}};
    const std::size_t v = order ? (*order)[step] : detail::choose_variable(rows, done);
    done[v] = true;
    std::vector<FmRow> pos, neg, next;
    for (auto& r : rows) {
      if (r.trivial()) continue;
      int s = r.coeffs[v].sign();
      if (s == 0) {
        next.push_back(std::move(r));
        continue;
      }
      r.scale(Rational(1) / abs(r.coeffs[v]));
      (s > 0 ? pos : neg).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        FmRow c{std::vector<Rational>(n), p.rhs + q.rhs, p.strict || q.strict, std::vector<Rational>(m)};
        for (std::size_t k = 0; k < n; ++k) c.coeffs[k] = p.coeffs[k] + q.coeffs[k];
        c.coeffs[v] = Rational(0);
        for (std::size_t k = 0; k < m; ++k) c.mult[k] = p.mult[k] + q.mult[k];
        detail::normalize(c);
        next.push_back(std::move(c));
      }
    detail::Stage st{v, std::move(pos)};
    for (auto& q : neg) st.bounding.push_back(std::move(q));
    stages.push_back(std::move(st));
    rows = detail::deduplicate(std::move(next));
  }
  if (auto bad = detail::first_contradiction(rows)) return Infeasible{{bad->mult}};

  std::vector<Rational> x(n);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : it->bounding) {
      Rational rest = r.rhs;
      for (std::size_t k = 0; k < n; ++k)
        if (k != it->var && !r.coeffs[k].is_zero()) rest -= r.coeffs[k] * x[k];
      Rational bound = rest / r.coeffs[it->var];
      if (r.coeffs[it->var].sign() > 0) {
        if (!hi || bound < *hi || (bound == *hi && r.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || r.strict) : r.strict;
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || r.strict) : r.strict;
          lo = bound;
        }
      }
    }
    x[it->var] = detail::pick_value(lo, lo_strict, hi, hi_strict);
  }
  return Feasible{std::move(x)};
}

namespace detail {

struct LinearExpr {
  std::map<std::string, Rational> terms;
  std::vector<std::string> order;
  Rational constant;
};

class ExprParser {
public:
  explicit ExprParser(std::string s) : s_(std::move(s)) {}

  LinearExpr parse() {
    LinearExpr e;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coef(sign);
      bool has_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= number();
        has_number = true;
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        } else if (!is_name_start(peek())) {
          e.constant += coef;
          continue;
        }
      }
      if (!is_name_start(peek())) fail(has_number ? "expected a variable after '*'" : "expected a term");
      std::string name = identifier();
      if (!e.terms.count(name)) e.order.push_back(name);
      e.terms[name] += coef;
      skip();
    }
    if (first) fail("empty expression");
    return e;
  }

private:
  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " in '" + s_ + "'");
  }
  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  Rational number() {
    std::string num = digits();
    if (peek() == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) fail("missing denominator");
      return Rational::parse(num + "/" + den);
    }
    return Rational::parse(num);
  }
  std::string identifier() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

} // namespace detail

/**
 * @brief Parses one constraint per line, e.g. "3/5*m_Z + 1*mu < 7/10".
 *
 * Relations: <, <=, >, >=, =. Variables may appear on both sides. Text after
 * '#' is ignored.
 */
inline LinearSystem parse_system(const std::string& text) {
  LinearSystem sys;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t at = line.find_first_of("<>=");
    if (at == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": missing relation");
    std::string op(1, line[at]);
    if (at + 1 < line.size() && line[at + 1] == '=' && op != "=") op += '=';
    std::string lhs_text = line.substr(0, at), rhs_text = line.substr(at + op.size());
    if (rhs_text.find_first_of("<>=") != std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": chained relations are not supported");
    detail::LinearExpr lhs, rhs;
    try {
      lhs = detail::ExprParser(lhs_text).parse();
      rhs = detail::ExprParser(rhs_text).parse();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    LinearTerms terms;
    for (const auto& name : lhs.order) terms.emplace_back(name, lhs.terms[name]);
    for (const auto& name : rhs.order) terms.emplace_back(name, -rhs.terms[name]);
    Rational bound = rhs.constant - lhs.constant;
    if (op == "<") sys.less(terms, bound);
    else if (op == "<=") sys.less_equal(terms, bound);
    else if (op == ">") sys.greater(terms, bound);
    else if (op == ">=") sys.greater_equal(terms, bound);
    else sys.equal(terms, bound);
  }
  return sys;
}

inline std::string format_constraint(const LinearSystem& sys, const Constraint& c) {
  std::string out;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    if (c.coeffs[k].is_zero()) continue;
    Rational v = c.coeffs[k];
    if (out.empty()) {
      if (v.sign() < 0) out += "-";
    } else {
      out += v.sign() < 0 ? " - " : " + ";
    }
    out += abs(v).str() + "*" + sys.variables()[k];
  }
  if (out.empty()) out = "0";
  return out + (c.strict() ? " < " : " <= ") + c.rhs.str();
}

inline std::string format_system(const LinearSystem& sys) {
  std::string out;
  for (const auto& c : sys.constraints()) out += format_constraint(sys, c) + "\n";
  return out;
}

} // namespace fanohyp
