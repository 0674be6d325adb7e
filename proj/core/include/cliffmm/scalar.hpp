#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cliffmm {

using BigInt = boost::multiprecision::cpp_int;

// Tally of scalar multiplications.  Counting is opt-in: operations that may
// count take a MulCount* and a null pointer disables it.  Additions and sign
// flips are never counted.  A context has a single owner; parallel branches
// use their own context and merge() at the end.
struct MulCount {
  std::uint64_t mults = 0;

  void reset() noexcept { mults = 0; }
  void merge(const MulCount& other) noexcept { mults += other.mults; }
};

// Exact dyadic rational n * 2^e.
//
// Canonical form: n odd or zero; when n = 0 the exponent is 0 as well.  The
// representation is unique, so equality (and in particular the zero test) is
// a plain field comparison.  Addition and multiplication are closed and
// exact; there is no rounding anywhere.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : Dyadic(BigInt(n), 0) {}  // integers embed
  Dyadic(BigInt n, std::int64_t exp2) { assign(std::move(n), exp2); }

  const BigInt& numerator() const noexcept { return num_; }
  std::int64_t exponent() const noexcept { return exp_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return exp_ == 0 && num_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Dyadic operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) { return mul(a, b, nullptr); }

  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
  Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
  Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

  // Exact product; bumps the counter when one is supplied.
  static Dyadic mul(const Dyadic& a, const Dyadic& b, MulCount* count);

  bool operator==(const Dyadic& other) const = default;

  // "6", "-3", "1/2", "-3/8"; exponents below 2^-62 render as "n/2^e".
  std::string str() const;
  // Accepts the str() forms plus non-canonical inputs like "2/4" (normalized
  // on the way in).  Throws std::invalid_argument on anything else.
  static Dyadic parse(std::string_view text);

  double to_double() const;

 private:
  void assign(BigInt n, std::int64_t exp2);

  BigInt num_;             // odd or zero
  std::int64_t exp_ = 0;   // 0 when num_ is zero
};

// Same-shape multiply for the floating point scalar mode used by the bench
// paths.  Correctness tests never touch this overload.
inline double mul(double a, double b, MulCount* count) {
  if (count != nullptr) ++count->mults;
  return a * b;
}

inline Dyadic mul(const Dyadic& a, const Dyadic& b, MulCount* count) {
  return Dyadic::mul(a, b, count);
}

}  // namespace cliffmm
