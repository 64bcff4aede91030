#pragma once

// Exact rational arithmetic used throughout the library.  Thin value wrapper
// over GMP's mpq_class that keeps every value canonical (lowest terms,
// positive denominator) and adds the handful of number-theoretic helpers the
// geometry code needs (exact square roots, floors, simplest-rational search).

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vmc {

using Integer = mpz_class;

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "n", "n/d" or a plain decimal such as "-0.25".
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Rational r(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
      return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t places = s.size() - dot - 1;
      if (places == 0) throw std::invalid_argument("Rational::parse: '" + s + "'");
      Integer den = 1;
      for (size_t i = 0; i < places; ++i) den *= 10;
      return Rational(parse_int(digits), den);
    }
    return Rational(parse_int(s));
  }

  // Exact value of a double (every finite double is a dyadic rational).
  static Rational from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_), no_canon{}); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), no_canon{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), no_canon{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), no_canon{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_), no_canon{});
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational::pow: 0 to negative power");
      return (Rational(1) / *this).pow(-e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(r, no_canon{});  // canonical input stays canonical under powers
  }

  // Largest integer <= value.
  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  Integer ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  // Exact square root when the value is a perfect square of a rational.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v_.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(v_.get_den().get_mpz_t()))
      return std::nullopt;
    mpq_class r;
    mpz_sqrt(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(r, no_canon{});
  }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  // Rational with the smallest denominator (then smallest |numerator|) in the
  // closed interval [lo, hi].  Stern-Brocot / continued-fraction descent.
  static Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw std::invalid_argument("simplest_between: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_between(-hi, -lo);
    return simplest_pos(lo, hi);
  }

 private:
  struct no_canon {};
  Rational(const mpq_class& q, no_canon) : v_(q) {}

  static Integer parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty component");
    try {
      // Base 10 always: the default base deduction would read a zero-prefixed
      // component such as the "025" arising from "0.25" as octal.
      return Integer(s, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
    }
  }

  static Rational simplest_pos(const Rational& lo, const Rational& hi) {
    // Precondition: 0 < lo <= hi.
    Integer n = lo.floor();
    Integer np1 = n + 1;
    if (Rational(np1) <= hi) {
      // An integer lies in the interval; the smallest admissible one is
      // ceil(lo) (floor+1 unless lo itself is integral).
      return lo.is_integer() ? lo : Rational(np1);
    }
    if (lo.is_integer()) return lo;
    Rational fl = lo - Rational(n), fh = hi - Rational(n);
    Rational inner = simplest_pos(Rational(1) / fh, Rational(1) / fl);
    return Rational(n) + Rational(1) / inner;
  }

  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long b) { return a * Rational(b); }

}  // namespace vmc
