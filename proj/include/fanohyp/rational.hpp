#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fanohyp {

/**
 * @brief Exact rational number, always kept in lowest terms with a positive
 * denominator.
 */
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "p/q" and "-p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
      if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("malformed rational: " + s);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("zero denominator: " + s);
    return Rational(mpq_class(n, d));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p/q" with q omitted when it is 1.
  std::string str() const { return v_.get_str(); }
  /// Always "p/q", including "p/1".
  std::string fraction() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace fanohyp
