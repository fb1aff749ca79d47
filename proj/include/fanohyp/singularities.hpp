#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fanohyp/weighted_space.hpp"

namespace fanohyp {

/// Terminal cyclic quotient 1/r(1,a,r-a) with a <= r-a.
struct QuotientType {
  int r = 2;
  int a = 1;

  bool valid() const { return r >= 2 && a >= 1 && a <= r - a && std::gcd(a, r) == 1; }
  std::string str() const {
    return "1/" + std::to_string(r) + "(1," + std::to_string(a) + "," + std::to_string(r - a) + ")";
  }
  friend auto operator<=>(const QuotientType&, const QuotientType&) = default;
};

/// A coordinate vertex P_j or the open edge between P_i and P_j, indices 1..4.
struct Locus {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int i = 1;
  int j = 1;

  static Locus vertex(int j) { return {Kind::Vertex, j, j}; }
  static Locus edge(int i, int j) { return {Kind::Edge, std::min(i, j), std::max(i, j)}; }

  std::string str() const {
    return kind == Kind::Vertex ? "vertex:" + std::to_string(j)
                                : "edge:" + std::to_string(i) + "," + std::to_string(j);
  }
  static Locus parse(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("malformed locus: " + s); };
    auto colon = s.find(':');
    if (colon == std::string::npos) throw bad();
    std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
    auto index = [&](const std::string& t) {
      if (t.size() != 1 || t[0] < '1' || t[0] > '4') throw bad();
      return t[0] - '0';
    };
    if (kind == "vertex") return vertex(index(rest));
    if (kind == "edge") {
      auto comma = rest.find(',');
      if (comma == std::string::npos) throw bad();
      int i = index(rest.substr(0, comma)), j = index(rest.substr(comma + 1));
      if (i >= j) throw bad();
      return edge(i, j);
    }
    throw bad();
  }
  friend auto operator<=>(const Locus&, const Locus&) = default;
};

struct BasketEntry {
  QuotientType qtype;
  int count = 1;
  Locus locus;

  friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
  friend auto operator<=>(const BasketEntry& x, const BasketEntry& y) {
    if (auto c = x.qtype <=> y.qtype; c != 0) return c;
    return x.locus <=> y.locus;
  }
};

struct Basket {
  std::vector<BasketEntry> entries;

  int total_points() const {
    int n = 0;
    for (const auto& e : entries) n += e.count;
    return n;
  }
  /// Number of points of the given type, over all loci.
  int count_of(QuotientType q) const {
    int n = 0;
    for (const auto& e : entries)
      if (e.qtype == q) n += e.count;
    return n;
  }
  friend bool operator==(const Basket&, const Basket&) = default;
};

struct NotIsolated {
  friend bool operator==(NotIsolated, NotIsolated) { return true; }
};
struct NotTerminal {
  std::string reason;
  friend bool operator==(const NotTerminal&, const NotTerminal&) = default;
};
struct NotOnX {};
struct EdgeContained {};
struct TrivialStabilizer {};
struct NoInteriorPoints {};

using QuotientOutcome = std::variant<QuotientType, NotIsolated, NotTerminal>;
using VertexOutcome = std::variant<BasketEntry, NotOnX, NotIsolated, NotTerminal>;
using EdgeOutcome =
    std::variant<BasketEntry, EdgeContained, TrivialStabilizer, NoInteriorPoints, NotIsolated, NotTerminal>;
using BasketOutcome = std::variant<Basket, NotTerminal>;

namespace detail {

inline int mod(long x, int r) {
  long m = x % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

inline int inverse_mod(int x, int r) {
  long t = 0, nt = 1, g = r, ng = mod(x, r);
  while (ng != 0) {
    long q = g / ng;
    t = std::exchange(nt, t - q * nt);
    g = std::exchange(ng, g - q * ng);
  }
  if (g != 1) throw std::domain_error("no inverse");
  return mod(t, r);
}

} // namespace detail

/**
 * @brief Normal form of the quotient of C^3 by mu_r acting with the given
 * weights.
 */
inline QuotientOutcome normalize_quotient(int r, std::array<int, 3> weights) {
  if (r < 2) throw std::invalid_argument("quotient order must be at least 2");
  std::array<int, 3> b{};
  for (int k = 0; k < 3; ++k) {
    b[k] = detail::mod(weights[k], r);
    if (std::gcd(b[k], r) != 1) return NotIsolated{};
  }
  for (int k = 0; k < 3; ++k) {
    int inv = detail::inverse_mod(b[k], r);
    int c1 = detail::mod(long{b[(k + 1) % 3]} * inv, r);
    int c2 = detail::mod(long{b[(k + 2) % 3]} * inv, r);
    if ((c1 + c2) % r == 0) return QuotientType{r, std::min(c1, r - c1)};
  }
  return NotTerminal{"non-terminal action 1/" + std::to_string(r) + "(" +
                     std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                     std::to_string(b[2]) + ")"};
}

/// The point P_j, j in 1..4.
inline VertexOutcome vertex_point(const WeightSystem& ws, int j) {
  if (j < 1 || j > 4) throw std::out_of_range("vertex index " + std::to_string(j));
  const auto w = ws.all_weights();
  const int d = ws.degree();
  const int r = w[j];
  if (d % r == 0) return NotOnX{};
  for (int k = 0; k < 5; ++k) {
    if (k == j || d - w[k] <= 0 || (d - w[k]) % r != 0) continue;
    std::array<int, 3> rest{};
    int n = 0;
    for (int m = 0; m < 5; ++m)
      if (m != j && m != k) rest[n++] = w[m];
    auto q = normalize_quotient(r, rest);
    if (auto* qt = std::get_if<QuotientType>(&q)) return BasketEntry{*qt, 1, Locus::vertex(j)};
    if (std::holds_alternative<NotIsolated>(q)) return NotIsolated{};
    return std::get<NotTerminal>(q);
  }
  throw std::domain_error("general member is not quasismooth at P_" + std::to_string(j) + " of " +
                          ws.str());
}

/// Points with nontrivial stabilizer in the open edge P_i P_j, 1 <= i < j <= 4.
inline EdgeOutcome edge_points(const WeightSystem& ws, int i, int j) {
  if (i < 1 || j > 4 || i >= j) throw std::out_of_range("edge indices");
  const auto w = ws.all_weights();
  const int h = std::gcd(w[i], w[j]);
  if (h == 1) return TrivialStabilizer{};
  auto mons = monomials({w[i], w[j]}, ws.degree());
  if (mons.empty()) return EdgeContained{};
  if (mons.size() == 1) return NoInteriorPoints{};
  std::array<int, 3> rest{};
  int n = 0;
  for (int m = 0; m < 5; ++m)
    if (m != i && m != j) rest[n++] = w[m];
  auto q = normalize_quotient(h, rest);
  if (auto* qt = std::get_if<QuotientType>(&q))
    return BasketEntry{*qt, static_cast<int>(mons.size()) - 1, Locus::edge(i, j)};
  if (std::holds_alternative<NotIsolated>(q)) return NotIsolated{};
  return std::get<NotTerminal>(q);
}

inline BasketOutcome basket(const WeightSystem& ws) {
  const auto& a = ws.weights();
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      for (int z = y + 1; z < 4; ++z)
        if (std::gcd(std::gcd(a[x], a[y]), a[z]) > 1)
          return NotTerminal{"weights " + std::to_string(a[x]) + "," + std::to_string(a[y]) + "," +
                             std::to_string(a[z]) + " share a factor"};
  Basket out;
  for (int j = 1; j <= 4; ++j) {
    auto v = vertex_point(ws, j);
    if (auto* e = std::get_if<BasketEntry>(&v)) {
      out.entries.push_back(*e);
    } else if (std::holds_alternative<NotIsolated>(v)) {
      return NotTerminal{"non-isolated at " + Locus::vertex(j).str()};
    } else if (auto* nt = std::get_if<NotTerminal>(&v)) {
      return NotTerminal{nt->reason + " at " + Locus::vertex(j).str()};
    }
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      auto e = edge_points(ws, i, j);
      const std::string where = Locus::edge(i, j).str();
      if (auto* be = std::get_if<BasketEntry>(&e)) out.entries.push_back(*be);
      else if (std::holds_alternative<EdgeContained>(e)) return NotTerminal{"singular along " + where};
      else if (std::holds_alternative<NotIsolated>(e)) return NotTerminal{"non-isolated along " + where};
      else if (auto* nt = std::get_if<NotTerminal>(&e)) return NotTerminal{nt->reason + " along " + where};
    }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

inline bool is_terminal_general(const WeightSystem& ws) {
  return std::holds_alternative<Basket>(basket(ws));
}

} // namespace fanohyp
