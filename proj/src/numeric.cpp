#include "nlgames/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

namespace nlgames {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    std::string tok = i < s.size() ? s.substr(i, 12) : "<end>";
    throw ParseError("bad scalar '" + s + "': " + what + " at '" + tok + "'");
  }
  std::string digits() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected digits");
    return s.substr(start, i - start);
  }
  void expect_word(const char* w) {
    skip_ws();
    for (const char* p = w; *p; ++p, ++i) {
      if (i >= s.size() || s[i] != *p) fail(std::string("expected '") + w + "'");
    }
  }
};

// rational := [+|-] digits [/ digits], or decimal := [+|-] digits . digits
// (decimals only where `allow_decimal`). Both convert exactly.
Rational parse_rational(Cursor& c, bool allow_decimal) {
  c.skip_ws();
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') {
    if (c.s[c.i] == '-') sign = -1;
    ++c.i;
  }
  std::string intpart = c.digits();
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    std::string den = c.digits();
    mpz_class d(den, 10);
    if (d == 0) c.fail("zero denominator");
    return Rational(mpz_class(intpart, 10) * sign, d);
  }
  if (c.i < c.s.size() && c.s[c.i] == '.') {
    if (!allow_decimal) c.fail("decimal not allowed in sqrt2 coefficient");
    ++c.i;
    std::string frac = c.digits();
    mpz_class num(intpart + frac, 10);
    mpz_class den = 1;
    for (size_t k = 0; k < frac.size(); ++k) den *= 10;
    return Rational(num * sign, den);
  }
  return Rational(mpz_class(intpart, 10) * sign, mpz_class(1));
}

}  // namespace

QuadExt parse_scalar(const std::string& text) {
  Cursor c{text};
  if (c.done()) c.fail("empty input");
  Rational first = parse_rational(c, /*allow_decimal=*/true);
  if (c.done()) return QuadExt(first);
  char op = c.peek();
  if (op == '*') {
    ++c.i;
    c.expect_word("sqrt2");
    if (!c.done()) c.fail("trailing characters");
    return QuadExt(Rational(0), first);
  }
  if (op != '+' && op != '-') c.fail("expected '+', '-' or '*sqrt2'");
  ++c.i;
  Rational coeff = parse_rational(c, /*allow_decimal=*/false);
  if (op == '-') coeff = -coeff;
  c.skip_ws();
  if (c.peek() != '*') c.fail("expected '*sqrt2'");
  ++c.i;
  c.expect_word("sqrt2");
  if (!c.done()) c.fail("trailing characters");
  return QuadExt(first, coeff);
}

std::string render_scalar(const QuadExt& v) {
  if (v.is_rational()) return v.rat.to_string();
  std::string out = v.rat.to_string();
  if (v.root2.sign() < 0) {
    out += "-" + (-v.root2).to_string();
  } else {
    out += "+" + v.root2.to_string();
  }
  out += "*sqrt2";
  return out;
}

std::string approx_decimal(const QuadExt& v, int digits) {
  if (digits < 0) digits = 0;
  mp_bitcnt_t prec = 64 + 4 * static_cast<mp_bitcnt_t>(digits);
  mpf_class f(v.rat.raw(), prec);
  if (v.root2.sign() != 0) {
    mpf_class r2(2, prec);
    r2 = sqrt(r2);
    f += mpf_class(v.root2.raw(), prec) * r2;
  }
  std::vector<char> buf(64 + static_cast<size_t>(digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Ff", digits, f.get_mpf_t());
  std::string out(buf.data());
  // a value rounding to zero should not keep a stray minus sign
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') out.erase(0, 1);
  return out;
}

}  // namespace nlgames
