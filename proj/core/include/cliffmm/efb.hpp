#pragma once

#include "cliffmm/gamma.hpp"
#include "cliffmm/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliffmm {

// Per-slot symbol of an EFB element.  The two-bit encoding is load bearing:
// the low bit distinguishes the trailing null vector (0 -> p, 1 -> q), the
// high bit the parity under the main automorphism (0 -> even, 1 -> odd), and
// the value doubles as the slot's digit in the tensor-order basis listing.
enum class EfbSymbol : std::uint8_t {
  QP = 0,  // q_i p_i
  PQ = 1,  // p_i q_i
  P = 2,   // p_i
  Q = 3,   // q_i
};

// +1 for the bivector-like symbols, -1 for the vectors.
int parity(EfbSymbol s);

const char* symbol_token(EfbSymbol s);  // "qp", "pq", "p", "q"

// The 4x4 single-slot product table; nullopt marks the zero entries.
std::optional<EfbSymbol> slot_product(EfbSymbol a, EfbSymbol b);

// The unique right factor of the requested parity whose slot product with s
// survives (each table row has exactly one nonzero even and one nonzero odd
// column).
EfbSymbol unique_slot_partner(EfbSymbol s, int want_parity);

// Signature of an EFB element: the vector of slot parities.  Stored as the
// set of slots with parity -1.
struct Signature {
  int m = 1;
  std::uint32_t neg_mask = 0;

  int at(int slot) const { return (neg_mask >> slot) & 1 ? -1 : 1; }
  Signature operator*(const Signature& other) const;  // componentwise product
  bool all_plus() const { return neg_mask == 0; }
  std::vector<int> to_vector() const;

  auto operator<=>(const Signature&) const = default;
};

// EFB basis element: one symbol per slot, slot t at code bits [2t, 2t+1].
struct EfbElement {
  int m = 1;
  std::uint64_t code = 0;

  static EfbElement make(int m, std::uint64_t code);
  static EfbElement from_slots(const std::vector<EfbSymbol>& slots);

  EfbSymbol slot(int t) const { return static_cast<EfbSymbol>((code >> (2 * t)) & 3); }
  std::vector<EfbSymbol> slots() const;

  auto operator<=>(const EfbElement&) const = default;
};

Signature signature_of(const EfbElement& e);

// ---- raw-code primitives (shared with the dense bench kernels) ----

// slots with odd parity, one bit per slot
std::uint32_t efb_odd_slots(std::uint64_t code, int m);
// whether the basis product a * b survives (no zero slot product)
bool efb_code_product_nonzero(std::uint64_t a, std::uint64_t b, int m);
// surviving product code; only meaningful when the product is nonzero
std::uint64_t efb_code_product(std::uint64_t a, std::uint64_t b, int m);
// +-1 reordering sign of the surviving product
int efb_code_product_sign(std::uint64_t a, std::uint64_t b, int m);
// code of the unique partner of psi with the given odd-slot set
std::uint64_t efb_code_partner(std::uint64_t psi, std::uint32_t neg_mask, int m);

// Basis product.  nullopt iff some slot product is zero; otherwise the
// reordering sign and the slotwise product element.
std::optional<std::pair<Dyadic, EfbElement>> efb_basis_product(const EfbElement& a,
                                                               const EfbElement& b);

// The unique element of signature r with nonzero product against psi.
EfbElement unique_partner(const EfbElement& psi, const Signature& r);

// Sparse multivector over the EFB, no stored zeros.
class EfbMultivector {
 public:
  explicit EfbMultivector(int m);

  int m() const noexcept { return m_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(std::uint64_t code, const Dyadic& c);
  void add_term(const EfbElement& e, const Dyadic& c);

  Dyadic coefficient(std::uint64_t code) const;
  const std::map<std::uint64_t, Dyadic>& terms() const noexcept { return terms_; }

  static EfbMultivector zero(int m) { return EfbMultivector(m); }
  static EfbMultivector element(int m, std::uint64_t code, const Dyadic& c = 1);

  EfbMultivector operator-() const;
  friend EfbMultivector operator+(const EfbMultivector& a, const EfbMultivector& b);
  friend EfbMultivector operator-(const EfbMultivector& a, const EfbMultivector& b);
  EfbMultivector scaled(const Dyadic& c) const;

  bool operator==(const EfbMultivector&) const = default;

 private:
  int m_;
  std::map<std::uint64_t, Dyadic> terms_;
};

// Clifford product in the EFB.  b's terms are grouped by signature and each
// term of a jumps straight to its unique surviving partner per group, so a
// coefficient multiplication happens only for surviving pairs; dense inputs
// cost exactly 2^{3m} of them.
EfbMultivector mv_product(const EfbMultivector& a, const EfbMultivector& b,
                          MulCount* count = nullptr);

EfbMultivector anticommutator(const EfbMultivector& a, const EfbMultivector& b);

// The algebra unit: the 2^m elements with every slot in {QP, PQ}, coefficient
// one each.
EfbMultivector efb_identity(int m);

// Text form: terms joined by " + ", each "coef*qp p q" with one token per
// slot.
std::string to_string(const EfbMultivector& a);
// Inverse of to_string; m is taken from the slot count (all terms must
// agree).  m = 0 with text "0" needs an explicit m, so it throws.
EfbMultivector parse_efb(std::string_view text, int m = 0);

}  // namespace cliffmm
