#pragma once

#include "cliffmm/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliffmm {

// Largest supported number of generator pairs.  Blade masks (2m bits) and
// EFB slot codes (2 bits per slot) both fit a 64-bit word with lots of room.
inline constexpr int kMaxM = 16;

// gamma_{2i-1}^2 = +1, gamma_{2i}^2 = -1, i = 1..m.
Dyadic generator_square(int i, int m);

// Basis blade of Cl(m,m): a product of distinct generators in strictly
// ascending index order.  Encoded as a bitmask, bit t (0-based) standing for
// generator t+1; the empty mask is the algebra unit.
struct GammaMonomial {
  int m = 1;
  std::uint64_t mask = 0;

  static GammaMonomial identity(int m) { return make(m, 0); }
  static GammaMonomial make(int m, std::uint64_t mask);
  static GammaMonomial from_indices(int m, const std::vector<int>& indices);

  std::vector<int> indices() const;
  int grade() const;

  auto operator<=>(const GammaMonomial&) const = default;
};

// Reordering sign times the metric factors for the blade product a * b on raw
// masks; the resulting blade is a ^ b and is never zero.
int monomial_product_sign(std::uint64_t a, std::uint64_t b);

// Canonical product of two blades.  Throws on mismatched m.
std::pair<Dyadic, GammaMonomial> monomial_product(const GammaMonomial& a,
                                                  const GammaMonomial& b);

// Sparse multivector over the gamma basis, mixed grades, no stored zeros.
class GammaMultivector {
 public:
  explicit GammaMultivector(int m);

  int m() const noexcept { return m_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // coefficient += c, dropping the term if it cancels to zero
  void add_term(std::uint64_t mask, const Dyadic& c);
  void add_term(const GammaMonomial& mono, const Dyadic& c);

  Dyadic coefficient(std::uint64_t mask) const;
  const std::map<std::uint64_t, Dyadic>& terms() const noexcept { return terms_; }

  static GammaMultivector zero(int m) { return GammaMultivector(m); }
  static GammaMultivector monomial(int m, std::uint64_t mask, const Dyadic& c = 1);

  GammaMultivector operator-() const;
  friend GammaMultivector operator+(const GammaMultivector& a, const GammaMultivector& b);
  friend GammaMultivector operator-(const GammaMultivector& a, const GammaMultivector& b);
  GammaMultivector scaled(const Dyadic& c) const;

  bool operator==(const GammaMultivector&) const = default;

 private:
  int m_;
  std::map<std::uint64_t, Dyadic> terms_;
};

// Bilinear expansion over all term pairs.  Every blade product is nonzero in
// this basis, so the counter always advances by |a| * |b|.
GammaMultivector mv_product(const GammaMultivector& a, const GammaMultivector& b,
                            MulCount* count = nullptr);

// a*b + b*a
GammaMultivector anticommutator(const GammaMultivector& a, const GammaMultivector& b);

// Text form: terms joined by " + ", each "coef*g1 g3"; the unit blade prints
// as "1" (e.g. "1/2*g1 g2 + -1/4*1").
std::string to_string(const GammaMultivector& a);
// Inverse of to_string.  m = 0 infers the smallest m covering the indices.
GammaMultivector parse_gamma(std::string_view text, int m = 0);

}  // namespace cliffmm
