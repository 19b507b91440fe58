#include "entrocone/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace entrocone {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt pow10(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Nearest integer to num/den (den > 0, num >= 0), ties to even.
BigInt round_half_even(const BigInt& num, const BigInt& den) {
  BigInt q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int c = cmp(BigInt(2 * rem), den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

}  // namespace

Rational::Rational(long long v) : value_(BigInt(std::to_string(v))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  if (negative) p = -p;
  return Rational(p, q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string format_significant(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (r.is_zero()) return "0";
  const Rational a = r.abs();
  BigInt num = a.numerator(), den = a.denominator();

  // e = floor(log10 a): start from the digit-count estimate and correct.
  long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
  auto at_least_pow10 = [&](long ex) {  // a >= 10^ex
    return ex >= 0 ? cmp(num, BigInt(den * pow10(ex))) >= 0 : cmp(BigInt(num * pow10(-ex)), den) >= 0;
  };
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  const long shift = digits - 1 - e;
  BigInt m = shift >= 0 ? round_half_even(num * pow10(shift), den)
                        : round_half_even(num, den * pow10(-shift));
  if (m == pow10(digits)) {
    m /= 10;
    ++e;
  }
  const std::string s = m.get_str();
  std::string out;
  if (e >= digits - 1) {
    out = s + std::string(e - digits + 1, '0');
  } else if (e >= 0) {
    out = s.substr(0, e + 1) + "." + s.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + s;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return r.sign() < 0 ? "-" + out : out;
}

}  // namespace entrocone
