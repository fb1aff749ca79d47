#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fanohyp/inequality.hpp"

namespace fanohyp {

struct UnknownId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Verdict { Feasible, Infeasible };

inline std::string to_string(Verdict v) { return v == Verdict::Feasible ? "FEASIBLE" : "INFEASIBLE"; }

/**
 * @brief A closing inequality system with its expected verdict.
 *
 * The first `displayed` constraints are the ones of the argument itself; the
 * remaining ones are contextual bounds (nonnegative multiplicities, lower
 * bounds on mu from the centre order).
 */
struct GoldenSystem {
  std::string id;
  std::string family;
  LinearSystem system;
  std::size_t displayed = 0;
  Verdict expected = Verdict::Infeasible;
};

namespace detail {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline GoldenSystem sys7() {
  GoldenSystem g{"SYS-7", "7", LinearSystem({"m_C", "m_Z", "mu"}), 2, Verdict::Infeasible};
  auto& s = g.system;
  s.less_equal({{"m_C", q(1)}}, q(1, 2));
  s.greater({{"m_C", q(1)}, {"m_Z", q(-1, 2)}}, q(1, 2));
  s.greater_equal({{"m_C", q(1)}}, q(0));
  s.greater_equal({{"m_Z", q(1)}}, q(0));
  s.greater({{"mu", q(1)}}, q(1, 3));
  return g;
}

inline GoldenSystem sys13() {
  GoldenSystem g{"SYS-13", "13", LinearSystem({"mu"}), 2, Verdict::Infeasible};
  auto& s = g.system;
  s.greater({{"mu", q(1)}}, q(7, 10));
  s.less_equal({{"mu", q(1)}}, q(11, 30));
  s.greater({{"mu", q(1)}}, q(1, 5));
  return g;
}

inline GoldenSystem sys23() {
  GoldenSystem g{"SYS-23", "23", LinearSystem({"m", "m_bar", "mu"}), 3, Verdict::Infeasible};
  auto& s = g.system;
  s.less({{"m", q(1)}}, q(7, 15));
  s.greater({{"mu", q(1)}}, q(1, 4));
  // 7/10 - 2 mu - 3/5 m_bar > 5/4 - mu - m
  s.greater({{"mu", q(-1)}, {"m_bar", q(-3, 5)}, {"m", q(1)}}, q(5, 4) - q(7, 10));
  s.greater_equal({{"m", q(1)}}, q(0));
  s.greater_equal({{"m_bar", q(1)}}, q(0));
  return g;
}

inline GoldenSystem sys36() {
  GoldenSystem g{"SYS-36", "36", LinearSystem({"mu", "m_L", "m_C", "m_Z"}), 8, Verdict::Infeasible};
  auto& s = g.system;
  // 13 (mu + m_C)/6 > 8/7 + 5 m_Z/6
  s.greater({{"mu", q(13, 6)}, {"m_C", q(13, 6)}, {"m_Z", q(-5, 6)}}, q(8, 7));
  s.less_equal({{"m_Z", q(7, 6)}}, q(21, 48));
  // 7 m_Z/6 >= 5 mu/6 + m_L + 5 m_C/6 - 2/7
  s.greater_equal({{"m_Z", q(7, 6)}, {"mu", q(-5, 6)}, {"m_L", q(-1)}, {"m_C", q(-5, 6)}}, q(-2, 7));
  s.less_equal({{"m_C", q(1)}, {"m_Z", q(1)}, {"mu", q(1)}}, q(9, 14));
  s.less_equal({{"m_L", q(1)}}, q(3, 4));
  s.greater({{"m_L", q(1)}, {"m_Z", q(-1)}}, q(1, 2));
  s.less_equal({{"mu", q(1)}}, q(18, 77));
  s.greater({{"mu", q(1)}}, q(1, 7));
  s.greater_equal({{"m_L", q(1)}}, q(0));
  s.greater_equal({{"m_C", q(1)}}, q(0));
  s.greater_equal({{"m_Z", q(1)}}, q(0));
  return g;
}

inline GoldenSystem sys12(const std::string& id, Rational mu_floor) {
  GoldenSystem g{id, "12", LinearSystem({"mb_C", "mb_Z", "mu"}), 3, Verdict::Infeasible};
  auto& s = g.system;
  // mb_C > 11/12 - mu + mb_Z/3
  s.greater({{"mb_C", q(1)}, {"mu", q(1)}, {"mb_Z", q(-1, 3)}}, q(11, 12));
  // 4 mb_Z/3 >= mb_C + mu - 5/6
  s.greater_equal({{"mb_Z", q(4, 3)}, {"mb_C", q(-1)}, {"mu", q(-1)}}, q(-5, 6));
  s.less_equal({{"mb_C", q(1)}, {"mu", q(1)}, {"mb_Z", q(1)}}, q(5, 4));
  s.greater_equal({{"mb_C", q(1)}}, q(0));
  s.greater_equal({{"mb_Z", q(1)}}, q(0));
  s.greater_equal({{"mu", q(1)}}, q(0));
  s.greater({{"mu", q(1)}}, mu_floor);
  return g;
}

} // namespace detail

inline std::vector<GoldenSystem> golden_systems() {
  return {detail::sys7(),  detail::sys13(), detail::sys23(), detail::sys36(),
          detail::sys12("SYS-12", Rational(1, 4)), detail::sys12("SYS-12b", Rational(1, 3))};
}

inline std::vector<std::string> golden_ids() {
  std::vector<std::string> ids;
  for (const auto& g : golden_systems()) ids.push_back(g.id);
  return ids;
}

inline GoldenSystem golden_entry(const std::string& id) {
  for (auto& g : golden_systems())
    if (g.id == id) return g;
  throw UnknownId("unknown inequality system " + id);
}

inline LinearSystem golden_system(const std::string& id) { return golden_entry(id).system; }

} // namespace fanohyp
