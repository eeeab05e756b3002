#pragma once
// Exact scalars: arbitrary-precision rationals (GMP-backed) and the ordered
// field Q(sqrt2) in which every table entry of this toolkit lives.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlgames {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical rational: denominator > 0, gcd(|num|, den) = 1. All arithmetic
// is exact; GMP keeps results canonical as long as inputs are, so the only
// places that must canonicalize are the constructors.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return wrap(-v_); }
  Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::domain_error("rational division by zero");
    return wrap(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  int sign() const { return sgn(v_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "num/den", den omitted when 1; matches the scalar-literal grammar.
  std::string to_string() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

 private:
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);  // arithmetic on canonical operands stays canonical
    return r;
  }
  mpq_class v_;
};

// Element a + b*sqrt(2) of Q(sqrt2). Comparison is exact: when the two parts
// pull in opposite directions the sign is decided by comparing a^2 with 2b^2
// (sqrt2 is irrational, so a nonzero element never has a^2 = 2b^2).
struct QuadExt {
  Rational rat;    // a
  Rational root2;  // b

  QuadExt() = default;
  QuadExt(long n) : rat(n) {}                // NOLINT: implicit by design
  QuadExt(Rational a) : rat(std::move(a)) {} // NOLINT: implicit by design
  QuadExt(Rational a, Rational b) : rat(std::move(a)), root2(std::move(b)) {}

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

  bool is_rational() const { return root2 == Rational(0); }

  QuadExt operator-() const { return QuadExt(-rat, -root2); }
  QuadExt operator+(const QuadExt& o) const { return QuadExt(rat + o.rat, root2 + o.root2); }
  QuadExt operator-(const QuadExt& o) const { return QuadExt(rat - o.rat, root2 - o.root2); }
  QuadExt operator*(const QuadExt& o) const {
    return QuadExt(rat * o.rat + Rational(2) * (root2 * o.root2),
                   rat * o.root2 + root2 * o.rat);
  }
  QuadExt operator/(const QuadExt& o) const {
    // 1/(a+b*sqrt2) = (a-b*sqrt2)/(a^2-2b^2); the norm vanishes only at 0.
    Rational norm = o.rat * o.rat - Rational(2) * (o.root2 * o.root2);
    if (norm == Rational(0)) throw std::domain_error("division by zero in Q(sqrt2)");
    QuadExt conj(o.rat, -o.root2);
    QuadExt num = *this * conj;
    return QuadExt(num.rat / norm, num.root2 / norm);
  }
  QuadExt& operator+=(const QuadExt& o) { rat += o.rat; root2 += o.root2; return *this; }
  QuadExt& operator-=(const QuadExt& o) { rat -= o.rat; root2 -= o.root2; return *this; }
  QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
  QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

  int sign() const {
    int sa = rat.sign(), sb = root2.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int cmp2 = (rat * rat > Rational(2) * (root2 * root2)) ? 1 : -1;
    return sa > 0 ? cmp2 : -cmp2;
  }
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const QuadExt& o) const { return rat == o.rat && root2 == o.root2; }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
  bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

  double to_double() const { return rat.to_double() + root2.to_double() * 1.4142135623730951; }
};

// Scalar-literal grammar, the single numeric wire format:
//   scalar   := rational | rational ('+'|'-') rational '*' 'sqrt2' | decimal
//   rational := ['+'|'-'] digits ['/' digits]
//   decimal  := ['+'|'-'] digits '.' digits        (converted exactly)
// The parser additionally accepts a bare "rational*sqrt2" term; the renderer
// always emits the full grammar form (explicit rational part, even when 0).
QuadExt parse_scalar(const std::string& text);
std::string render_scalar(const QuadExt& v);

// Decimal rendering to `digits` places after the point, correctly rounded
// via high-precision floating evaluation. Display-only.
std::string approx_decimal(const QuadExt& v, int digits);

}  // namespace nlgames
