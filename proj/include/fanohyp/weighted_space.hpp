#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fanohyp/rational.hpp"

namespace fanohyp {

/**
 * @brief Nontrivial weights (a1,a2,a3,a4) of a hypersurface in P(1,a1,..,a4)
 * whose degree is the sum of the weights.
 *
 * Coordinates are indexed 0..4 throughout; index 0 carries the implicit
 * weight 1 and index k >= 1 carries a_k.
 */
class WeightSystem {
public:
  WeightSystem() = default;
  WeightSystem(int a1, int a2, int a3, int a4) : a_{a1, a2, a3, a4} { validate(); }
  explicit WeightSystem(std::array<int, 4> a) : a_(a) { validate(); }

  /// Checks the stated degree against the weight sum.
  static WeightSystem with_degree(std::array<int, 4> a, int d) {
    WeightSystem ws(a);
    if (ws.degree() != d)
      throw std::invalid_argument("degree " + std::to_string(d) + " is not the weight sum");
    return ws;
  }

  const std::array<int, 4>& weights() const { return a_; }
  int degree() const { return a_[0] + a_[1] + a_[2] + a_[3]; }
  /// Weight of coordinate k in 0..4.
  int weight(int k) const {
    if (k < 0 || k > 4) throw std::out_of_range("coordinate index " + std::to_string(k));
    return k == 0 ? 1 : a_[k - 1];
  }
  std::array<int, 5> all_weights() const { return {1, a_[0], a_[1], a_[2], a_[3]}; }

  std::string str() const {
    return "(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," +
           std::to_string(a_[2]) + "," + std::to_string(a_[3]) + ";" +
           std::to_string(degree()) + ")";
  }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem& x, const WeightSystem& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    return x.a_ <=> y.a_;
  }

private:
  void validate() const {
    for (int w : a_)
      if (w < 1) throw std::invalid_argument("weights must be positive");
    if (!std::is_sorted(a_.begin(), a_.end()))
      throw std::invalid_argument("weights must be nondecreasing");
  }

  std::array<int, 4> a_{1, 1, 1, 1};
};

using ExponentVector = std::vector<int>;

struct DegreeData {
  int degree;
  Rational kx3;
};

inline DegreeData degree_and_kx3(const WeightSystem& ws) {
  const auto& a = ws.weights();
  std::int64_t prod = std::int64_t{a[0]} * a[1] * a[2] * a[3];
  return {ws.degree(), Rational(ws.degree(), prod)};
}

namespace detail {

inline void monomials_rec(std::span<const int> w, std::size_t k, int rest,
                          ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (k + 1 == w.size()) {
    if (rest % w[k] == 0) {
      cur[k] = rest / w[k];
      out.push_back(cur);
    }
    return;
  }
  for (int e = rest / w[k]; e >= 0; --e) {
    cur[k] = e;
    monomials_rec(w, k + 1, rest - e * w[k], cur, out);
  }
}

/// Whether rest is a nonnegative combination of the weights in w.
inline bool representable(const int* w, int n, int rest) {
  if (rest == 0) return true;
  if (n == 0 || rest < 0) return false;
  if (n == 1) return rest % w[0] == 0;
  int g = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] == 1) return true;
    g = std::gcd(g, w[i]);
  }
  if (rest % g != 0) return false;
  for (int e = rest / w[0]; e >= 0; --e)
    if (representable(w + 1, n - 1, rest - e * w[0])) return true;
  return false;
}

inline bool representable_subset(const std::array<int, 5>& w, unsigned mask, int rest) {
  int buf[5];
  int n = 0;
  for (int k = 0; k < 5; ++k)
    if (mask & (1u << k)) buf[n++] = w[k];
  std::sort(buf, buf + n, std::greater<>());
  return representable(buf, n, rest);
}

} // namespace detail

/// All exponent vectors over the given weights of weighted degree d, largest
/// leading exponent first.
inline std::vector<ExponentVector> monomials(std::span<const int> weights, int d) {
  if (weights.empty()) throw std::invalid_argument("empty weight subset");
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("weights must be positive");
  std::vector<ExponentVector> out;
  if (d < 0) return out;
  ExponentVector cur(weights.size(), 0);
  detail::monomials_rec(weights, 0, d, cur, out);
  return out;
}

inline std::vector<ExponentVector> monomials(std::initializer_list<int> weights, int d) {
  return monomials(std::span<const int>(weights.begin(), weights.size()), d);
}

inline bool is_well_formed(const WeightSystem& ws) {
  const auto& a = ws.weights();
  return std::gcd(std::gcd(a[0], a[1]), std::gcd(a[2], a[3])) == 1;
}

/**
 * @brief Quasismoothness of the general member of degree d in P(w0,..,w4), by
 * the coordinate-subset criterion.
 *
 * For every nonempty subset I of coordinates, either some monomial of degree d
 * lives purely in I, or there are |I| distinct coordinates e outside I each
 * admitting a degree-d monomial (monomial in I) * x_e.
 */
inline bool is_quasismooth(const std::array<int, 5>& w, int d) {
  for (unsigned mask = 1; mask < 32; ++mask) {
    if (detail::representable_subset(w, mask, d)) continue;
    int size = std::popcount(mask);
    int escapes = 0;
    for (int e = 0; e < 5; ++e) {
      if (mask & (1u << e)) continue;
      if (detail::representable_subset(w, mask, d - w[e])) ++escapes;
    }
    if (escapes < size) return false;
  }
  return true;
}

inline bool is_quasismooth_general(const WeightSystem& ws) {
  return is_quasismooth(ws.all_weights(), ws.degree());
}

} // namespace fanohyp
