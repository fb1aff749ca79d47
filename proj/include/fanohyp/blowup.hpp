#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanohyp/rational.hpp"
#include "fanohyp/singularities.hpp"
#include "fanohyp/weighted_space.hpp"

namespace fanohyp {

struct KindMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotApplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Sign { Neg, Zero, Pos };

inline std::string to_string(Sign s) {
  switch (s) {
    case Sign::Neg: return "Neg";
    case Sign::Zero: return "Zero";
    case Sign::Pos: return "Pos";
  }
  return "?";
}

enum class InvolutionKind { Quadratic, Elliptic };

inline std::string to_string(InvolutionKind k) {
  return k == InvolutionKind::Quadratic ? "Quadratic" : "Elliptic";
}

struct Involution {
  InvolutionKind kind;
  int j; ///< coordinate index 1..4
  friend auto operator<=>(const Involution&, const Involution&) = default;
};

struct PointAnalysis {
  QuotientType qtype;
  int count = 1;
  Locus locus;
  Rational ku3;
  Sign sign = Sign::Zero;
  std::vector<Involution> involutions;
  std::vector<QuotientType> children;

  bool has(InvolutionKind k) const {
    for (const auto& inv : involutions)
      if (inv.kind == k) return true;
    return false;
  }
  friend bool operator==(const PointAnalysis&, const PointAnalysis&) = default;
};

struct MuBounds {
  std::optional<Rational> upper_quadratic;
  std::optional<Rational> upper_cap;
  std::optional<Rational> lower_elliptic;
  friend bool operator==(const MuBounds&, const MuBounds&) = default;
};

enum class EpsilonVariant { A, B };
enum class CurveVariant { EllipticA, EllipticB, Quadratic };

struct ModelSpace {
  std::array<int, 5> weights;
  int degree;
  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;
};

/// 1/(r a (r-a)), the amount the blow-up removes from the anticanonical degree.
inline Rational blowup_correction(QuotientType q) {
  return Rational(1, std::int64_t{q.r} * q.a * (q.r - q.a));
}

inline Rational ku3(const Rational& kx3, QuotientType q) { return kx3 - blowup_correction(q); }

inline Rational kw3(const Rational& kx3, QuotientType p, QuotientType q) {
  return kx3 - blowup_correction(p) - blowup_correction(q);
}

inline Sign sign_class(const Rational& x) {
  int s = x.sign();
  return s < 0 ? Sign::Neg : s > 0 ? Sign::Pos : Sign::Zero;
}

/// Singular points on the exceptional divisor of the Kawamata blow-up.
inline std::vector<QuotientType> blowup_children(QuotientType q) {
  if (!q.valid()) throw std::invalid_argument("invalid quotient type " + q.str());
  std::vector<QuotientType> out;
  for (int c : {q.a, q.r - q.a}) {
    if (c <= 1) continue;
    int m = q.r % c;
    auto n = normalize_quotient(c, {1, m, c - m});
    out.push_back(std::get<QuotientType>(n));
  }
  return out;
}

/**
 * @brief Involution tags at a point of order r.
 *
 * Quadratic(j) when d = 2r + a_j; Elliptic(j) when d = 3r + a_j and some
 * weight a_l != r satisfies d = r + 2 a_l. Both require r to be a weight.
 */
inline std::vector<Involution> involutions(const WeightSystem& ws, QuotientType q) {
  std::vector<Involution> out;
  const auto& a = ws.weights();
  const int d = ws.degree(), r = q.r;
  bool r_is_weight = false;
  bool square_term = false;
  for (int w : a) {
    r_is_weight |= w == r;
    square_term |= w != r && d == r + 2 * w;
  }
  if (!r_is_weight) return out;
  for (int j = 1; j <= 4; ++j) {
    if (d == 2 * r + a[j - 1]) out.push_back({InvolutionKind::Quadratic, j});
    if (d == 3 * r + a[j - 1] && square_term) out.push_back({InvolutionKind::Elliptic, j});
  }
  return out;
}

inline MuBounds mu_bounds(const WeightSystem& ws, QuotientType q, int j, InvolutionKind kind) {
  if (j < 1 || j > 4) throw std::out_of_range("coordinate index " + std::to_string(j));
  bool tagged = false;
  for (const auto& inv : involutions(ws, q)) tagged |= inv.kind == kind && inv.j == j;
  if (!tagged)
    throw KindMismatch("no " + to_string(kind) + " involution with j=" + std::to_string(j) +
                       " at " + q.str() + " on " + ws.str());
  const int d = ws.degree(), r = q.r, a = q.a, aj = ws.weight(j);
  MuBounds b;
  if (kind == InvolutionKind::Quadratic) {
    const Rational kx3 = degree_and_kx3(ws).kx3;
    b.upper_quadratic = Rational(aj) * kx3 * Rational(std::int64_t{r - a} * a, d - r);
    b.upper_cap = Rational(d - r, std::int64_t{r} * aj);
  } else {
    b.lower_elliptic = Rational(std::int64_t{a} * (r + 1), std::int64_t{r} * r + std::int64_t{a} * r);
  }
  return b;
}

/// Variant A: nu + (r-2a) mu/(r-a) - 2/r.
inline Rational epsilon_coefficient(const Rational& mu, const Rational& nu, QuotientType q) {
  return nu + Rational(q.r - 2 * q.a, q.r - q.a) * mu - Rational(2, q.r);
}

/// Variant B: nu - (rc-ac)(1/r - mu)/rc - 1/rc for a first centre of order r
/// and a child of type (rc, ac).
inline Rational epsilon_coefficient(const Rational& mu, const Rational& nu, int r, QuotientType child) {
  if (r < 2) throw std::invalid_argument("first centre order must be at least 2");
  return nu - Rational(child.r - child.a, child.r) * (Rational(1, r) - mu) - Rational(1, child.r);
}

inline Rational epsilon_coefficient(const Rational& mu, const Rational& nu, QuotientType q,
                                    EpsilonVariant v, int first_order = 0) {
  return v == EpsilonVariant::A ? epsilon_coefficient(mu, nu, q)
                                : epsilon_coefficient(mu, nu, first_order, q);
}

namespace detail {

/// Indices (i, j) with a_i = r and d = 2r + a_j, i != j.
inline std::optional<std::pair<int, int>> quadratic_pair(const WeightSystem& ws, QuotientType q) {
  const int d = ws.degree();
  for (int j = 1; j <= 4; ++j) {
    if (d != 2 * q.r + ws.weight(j)) continue;
    for (int i = 4; i >= 1; --i)
      if (i != j && ws.weight(i) == q.r) return std::pair{i, j};
  }
  return std::nullopt;
}

inline bool has_elliptic(const WeightSystem& ws, QuotientType q) {
  for (const auto& inv : involutions(ws, q))
    if (inv.kind == InvolutionKind::Elliptic) return true;
  return false;
}

} // namespace detail

/// Number of curves contracted by the link attached to the involution.
inline Rational contracted_curves(const WeightSystem& ws, QuotientType q, CurveVariant v) {
  const auto& a = ws.weights();
  const std::int64_t d = ws.degree();
  switch (v) {
    case CurveVariant::EllipticA:
      if (!detail::has_elliptic(ws, q) || a[0] != 1)
        throw NotApplicable("EllipticA count needs an elliptic involution and a1 = 1");
      return Rational(d * (d - a[3]), a[2]);
    case CurveVariant::EllipticB:
      if (!detail::has_elliptic(ws, q))
        throw NotApplicable("EllipticB count needs an elliptic involution");
      return Rational(d * (d - a[3]), std::int64_t{a[0]} * a[1]);
    case CurveVariant::Quadratic: {
      auto ij = detail::quadratic_pair(ws, q);
      if (!ij) throw NotApplicable("no quadratic involution at " + q.str());
      std::int64_t prod = 1;
      for (int k = 1; k <= 4; ++k)
        if (k != ij->first && k != ij->second) prod *= ws.weight(k);
      return Rational(d * (d - q.r), prod);
    }
  }
  throw NotApplicable("unknown curve variant");
}

/// Weighted projective space and degree of the intermediate model of the link.
inline ModelSpace midpoint_model(const WeightSystem& ws, QuotientType q, InvolutionKind kind) {
  const auto& a = ws.weights();
  if (kind == InvolutionKind::Quadratic) {
    auto ij = detail::quadratic_pair(ws, q);
    if (!ij) throw NotApplicable("no quadratic involution at " + q.str());
    auto [i, j] = *ij;
    if (i < 3) throw NotApplicable("quadratic model needs the centre weight among a3, a4");
    int top = ws.weight(i) * ws.weight(j);
    return {{1, a[0], a[1], ws.weight(3 + 4 - i), top}, 2 * top};
  }
  if (!detail::has_elliptic(ws, q)) throw NotApplicable("no elliptic involution at " + q.str());
  if (a[0] == 1) return {{1, 1, a[2], 2 * a[3], 3 * a[3]}, 6 * a[3]};
  return {{1, a[0], a[1], 2 * a[3], 3 * a[3]}, 6 * a[3]};
}

inline PointAnalysis analyse_point(const WeightSystem& ws, const Rational& kx3, const BasketEntry& e) {
  PointAnalysis p;
  p.qtype = e.qtype;
  p.count = e.count;
  p.locus = e.locus;
  p.ku3 = ku3(kx3, e.qtype);
  p.sign = sign_class(p.ku3);
  p.involutions = involutions(ws, e.qtype);
  p.children = blowup_children(e.qtype);
  return p;
}

} // namespace fanohyp
