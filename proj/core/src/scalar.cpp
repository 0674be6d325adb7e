#include "cliffmm/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffmm {

namespace {

BigInt pow2(std::int64_t k) {
  BigInt r = 1;
  return r << static_cast<unsigned>(k);
}

}  // namespace

void Dyadic::assign(BigInt n, std::int64_t exp2) {
  if (n.is_zero()) {
    num_ = 0;
    exp_ = 0;
    return;
  }
  // Strip the even part of n into the exponent.
  BigInt a = abs(n);
  std::int64_t tz = static_cast<std::int64_t>(lsb(a));
  if (tz > 0) {
    n = (n.sign() < 0) ? BigInt(-(a >> static_cast<unsigned>(tz)))
                       : BigInt(a >> static_cast<unsigned>(tz));
    exp2 += tz;
  }
  num_ = std::move(n);
  exp_ = exp2;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exp_, b.exp_);
  BigInt n = a.num_ * pow2(a.exp_ - e) + b.num_ * pow2(b.exp_ - e);
  return Dyadic(std::move(n), e);
}

Dyadic Dyadic::mul(const Dyadic& a, const Dyadic& b, MulCount* count) {
  if (count != nullptr) ++count->mults;
  if (a.is_zero() || b.is_zero()) return Dyadic();
  Dyadic r;
  r.num_ = a.num_ * b.num_;  // odd * odd stays odd
  r.exp_ = a.exp_ + b.exp_;
  return r;
}

std::string Dyadic::str() const {
  if (is_zero()) return "0";
  if (exp_ >= 0) return BigInt(num_ * pow2(exp_)).str();
  const std::int64_t e = -exp_;
  if (e <= 62) return num_.str() + "/" + std::to_string(std::uint64_t{1} << e);
  return num_.str() + "/2^" + std::to_string(e);
}

namespace {

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer in scalar");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign in scalar");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("bad digit in scalar: '" + std::string(s) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_int(text), 0);

  const std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (den.rfind("2^", 0) == 0) {
    const BigInt e = parse_int(den.substr(2));
    if (e < 0 || e > 1'000'000'000)
      throw std::invalid_argument("unreasonable denominator exponent");
    return Dyadic(parse_int(num), -static_cast<std::int64_t>(e));
  }
  BigInt d = parse_int(den);
  if (d <= 0) throw std::invalid_argument("denominator must be positive");
  const std::int64_t e = static_cast<std::int64_t>(lsb(d));
  if ((d >> static_cast<unsigned>(e)) != 1)
    throw std::invalid_argument("denominator must be a power of two: '" +
                                std::string(den) + "'");
  return Dyadic(parse_int(num), -e);
}

double Dyadic::to_double() const {
  return num_.convert_to<double>() * std::ldexp(1.0, static_cast<int>(exp_));
}

}  // namespace cliffmm
