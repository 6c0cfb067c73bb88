#include "qsim/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

using Wide = __int128;

constexpr Wide kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr Wide kInt64Min = std::numeric_limits<std::int64_t>::min();

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide x) {
  if (x > kInt64Max || x < kInt64Min) {
    throw Error(Errc::numeric_overflow, "rational result exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

// Normalizes in 128-bit space and narrows; the two-argument constructor
// re-runs the (now trivial) gcd on the narrowed values.
static Rational make_normalized(Wide num, Wide den) {
  if (den == 0) {
    throw Error(Errc::numeric_overflow, "division by zero");
  }
  if (num == 0) {
    return Rational(0);
  }
  Wide g = wide_gcd(num, den);
  return Rational(narrow(num / g), narrow(den / g));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(Errc::numeric_overflow, "division by zero");
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  num_ = narrow(n / g);
  den_ = narrow(d / g);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  Wide num = static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_;
  Wide den = static_cast<Wide>(den_) * rhs.den_;
  *this = make_normalized(num, den);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  Wide num = static_cast<Wide>(num_) * rhs.den_ - static_cast<Wide>(rhs.num_) * den_;
  Wide den = static_cast<Wide>(den_) * rhs.den_;
  *this = make_normalized(num, den);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  Wide num = static_cast<Wide>(num_) * rhs.num_;
  Wide den = static_cast<Wide>(den_) * rhs.den_;
  *this = make_normalized(num, den);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  Wide num = static_cast<Wide>(num_) * rhs.den_;
  Wide den = static_cast<Wide>(den_) * rhs.num_;
  *this = make_normalized(num, den);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Wide scaled = static_cast<Wide>(num_) * scale;
  Wide whole = scaled / den_;
  Wide rem = wide_abs(scaled % den_);
  // round half away from zero
  if (2 * rem >= den_) {
    whole += (num_ < 0) ? -1 : 1;
  }
  bool negative = whole < 0;
  Wide mag = wide_abs(whole);
  std::string out = negative ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(narrow(mag / scale)));
  if (digits > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(narrow(mag % scale)));
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    std::int64_t value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty()) {
      throw Error(Errc::parse_error, "invalid rational literal");
    }
    return value;
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw Error(Errc::parse_error, "zero denominator");
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace qsim
