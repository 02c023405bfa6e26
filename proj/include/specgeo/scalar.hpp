#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "specgeo/errors.hpp"

namespace specgeo {

using Rational = mpq_class;

inline double to_double(const Rational& r) { return r.get_d(); }

/// Element of the real field Q(sqrt(m1),...,sqrt(mr)): a finite sum
/// sum_k c_k * sqrt(k) with rational c_k and square-free positive keys k.
/// Key 1 is the rational part.  Radical products are reduced eagerly, so
/// the representation is canonical and equality is coefficient-wise.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) { if (v != 0) terms_[1] = Rational(v); }
  Scalar(const Rational& v) { if (v != 0) terms_[1] = v; }
  Scalar(long num, long den) {
    Rational v(num, den);
    v.canonicalize();
    if (v != 0) terms_[1] = v;
  }

  /// sqrt(m) for a positive integer m, with the square part extracted:
  /// sqrt(12) is stored as 2*sqrt(3).
  static Scalar sqrt_of(long m) {
    if (m <= 0) throw DomainError("sqrt_of: radicand must be positive");
    long outside = 1;
    for (long p = 2; p * p <= m; ++p)
      while (m % (p * p) == 0) { m /= p * p; outside *= p; }
    Scalar s;
    s.terms_[m] = Rational(outside);
    return s;
  }

  static Scalar rational_times_sqrt(const Rational& c, long m) {
    return Scalar(c) * sqrt_of(m);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// The square-free radicands appearing with nonzero coefficient.
  std::set<long> radicands() const {
    std::set<long> r;
    for (auto& [k, c] : terms_) if (k != 1) r.insert(k);
    return r;
  }

  Scalar operator-() const {
    Scalar r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    for (auto& [k, c] : o.terms_) {
      auto it = terms_.find(k);
      if (it == terms_.end()) terms_.emplace(k, c);
      else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (auto& [j, cj] : a.terms_)
      for (auto& [k, ck] : b.terms_) {
        // sqrt(j)*sqrt(k) = g*sqrt(j' k') with g = gcd(j,k); j'k' square-free.
        long g = std::gcd(j, k);
        long key = (j / g) * (k / g);
        Rational c = cj * ck * g;
        auto it = r.terms_.find(key);
        if (it == r.terms_.end()) r.terms_.emplace(key, c);
        else {
          it->second += c;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact multiplicative inverse.  Rationalizes one adjoined prime at a
  /// time: x = a + sqrt(p) b with a, b free of p, so
  /// 1/x = (a - sqrt(p) b) / (a^2 - p b^2) and the denominator involves
  /// strictly fewer primes.
  Scalar inverse() const {
    if (is_zero()) throw DomainError("Scalar: division by zero");
    if (is_rational()) return Scalar(Rational(1) / rational_part());
    if (terms_.size() == 1) {
      auto& [k, c] = *terms_.begin();
      Scalar r;
      r.terms_[k] = Rational(1) / (c * k);
      return r;
    }
    long p = smallest_prime_in_keys();
    Scalar a, b;
    for (auto& [k, c] : terms_) {
      if (k % p == 0) b.terms_[k / p] = c;
      else a.terms_[k] = c;
    }
    Scalar denom = a * a - Scalar(p) * b * b;
    if (denom.is_zero())
      throw DomainError("Scalar::inverse: degenerate radical tower");
    Scalar conj = a - sqrt_of(p) * b;
    return conj * denom.inverse();
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base(*this);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  double to_double() const {
    double v = 0;
    for (auto& [k, c] : terms_) v += c.get_d() * std::sqrt(double(k));
    return v;
  }

  /// Sign of the real number this element represents.  Exact zero is decided
  /// on the representation; otherwise the floating image decides, guarded by
  /// a scale check against the coefficient mass.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(rational_part());
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    double v = to_double(), mass = 0;
    for (auto& [k, c] : terms_) mass += std::abs(c.get_d()) * std::sqrt(double(k));
    if (std::abs(v) > 1e-12 * mass) return v > 0 ? 1 : -1;
    throw DomainError("Scalar::sign: value too close to zero to resolve in double");
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
      Rational a = c;
      if (!first) {
        os << (a < 0 ? "-" : "+");
        if (a < 0) a = -a;
      }
      first = false;
      if (k == 1) os << a.get_str();
      else if (a == 1) os << "sqrt(" << k << ")";
      else if (a == -1) os << "-sqrt(" << k << ")";
      else os << a.get_str() << "*sqrt(" << k << ")";
    }
    return os.str();
  }

  /// Parses "p/q", "p/q*sqrt(m)", "sqrt(m)" and signed sums of such terms.
  static Scalar parse(const std::string& text);

  const std::map<long, Rational>& terms() const { return terms_; }

private:
  static int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

  long smallest_prime_in_keys() const {
    long best = 0;
    for (auto& [k, c] : terms_) {
      if (k == 1) continue;
      long m = k;
      for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) { m = p; break; }
      if (best == 0 || m < best) best = m;
    }
    return best;
  }

  std::map<long, Rational> terms_;
};

inline double to_double(const Scalar& s) { return s.to_double(); }

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline long parse_uint(const std::string& s, size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw SyntaxError("expected integer at position " + std::to_string(i) + " in '" + s + "'");
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    v = v * 10 + (s[i++] - '0');
  return v;
}

/// One multiplicative factor of a numeric coefficient: integer, fraction or
/// sqrt(m).  Returns false when the cursor does not point at a numeric factor.
inline bool parse_numeric_factor(const std::string& s, size_t& i, Scalar& out) {
  skip_ws(s, i);
  if (i >= s.size()) return false;
  if (s.compare(i, 5, "sqrt(") == 0) {
    i += 5;
    long m = parse_uint(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') throw SyntaxError("missing ')' after sqrt");
    ++i;
    out = Scalar::sqrt_of(m);
    return true;
  }
  if (std::isdigit(static_cast<unsigned char>(s[i]))) {
    long num = parse_uint(s, i);
    skip_ws(s, i);
    if (i < s.size() && s[i] == '/') {
      ++i;
      long den = parse_uint(s, i);
      if (den == 0) throw SyntaxError("zero denominator");
      out = Scalar(num, den);
    } else {
      out = Scalar(num);
    }
    return true;
  }
  return false;
}

} // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
  size_t i = 0;
  Scalar total;
  bool any = false;
  while (true) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      detail::skip_ws(text, i);
    }
    Scalar term(1), factor;
    bool got = false;
    while (detail::parse_numeric_factor(text, i, factor)) {
      term *= factor;
      got = true;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      break;
    }
    if (!got) throw SyntaxError("cannot parse scalar '" + text + "'");
    total += (sign < 0 ? -term : term);
    any = true;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] != '+' && text[i] != '-')
      throw SyntaxError("unexpected character '" + std::string(1, text[i]) + "' in scalar");
  }
  if (!any) throw SyntaxError("empty scalar");
  return total;
}

/// Complex number with exact real and imaginary parts; just enough ring
/// arithmetic for exact multilinear evaluation.
struct CScalar {
  Scalar re, im;
  CScalar() = default;
  CScalar(Scalar r) : re(std::move(r)) {}
  CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

  CScalar conj() const { return {re, -im}; }
  friend CScalar operator+(const CScalar& a, const CScalar& b) { return {a.re + b.re, a.im + b.im}; }
  friend CScalar operator-(const CScalar& a, const CScalar& b) { return {a.re - b.re, a.im - b.im}; }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CScalar& operator+=(const CScalar& o) { return *this = *this + o; }
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }
  bool operator==(const CScalar& o) const { return re == o.re && im == o.im; }
};

} // namespace specgeo
