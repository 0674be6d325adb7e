#include "cliffmm/efb.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cliffmm {

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxM)
    throw std::out_of_range("m must be in [1, " + std::to_string(kMaxM) + "]");
}

constexpr std::uint64_t kLoBits = 0x5555555555555555ull;  // slot low bits

std::uint64_t slot_mask(int m) { return (std::uint64_t{1} << (2 * m)) - 1; }

}  // namespace

int parity(EfbSymbol s) {
  return (static_cast<std::uint8_t>(s) & 2) ? -1 : 1;
}

const char* symbol_token(EfbSymbol s) {
  switch (s) {
    case EfbSymbol::QP: return "qp";
    case EfbSymbol::PQ: return "pq";
    case EfbSymbol::P: return "p";
    case EfbSymbol::Q: return "q";
  }
  throw std::invalid_argument("bad EfbSymbol");
}

std::optional<EfbSymbol> slot_product(EfbSymbol a, EfbSymbol b) {
  const std::uint64_t pa = static_cast<std::uint64_t>(a);
  const std::uint64_t pb = static_cast<std::uint64_t>(b);
  if (!efb_code_product_nonzero(pa, pb, 1)) return std::nullopt;
  return static_cast<EfbSymbol>(efb_code_product(pa, pb, 1));
}

EfbSymbol unique_slot_partner(EfbSymbol s, int want_parity) {
  const std::uint32_t neg = (want_parity < 0) ? 1u : 0u;
  return static_cast<EfbSymbol>(efb_code_partner(static_cast<std::uint64_t>(s), neg, 1));
}

Signature Signature::operator*(const Signature& other) const {
  if (m != other.m) throw std::invalid_argument("signature product: mismatched m");
  return Signature{m, neg_mask ^ other.neg_mask};
}

std::vector<int> Signature::to_vector() const {
  std::vector<int> v(m);
  for (int t = 0; t < m; ++t) v[t] = at(t);
  return v;
}

EfbElement EfbElement::make(int m, std::uint64_t code) {
  check_m(m);
  if (code >> (2 * m)) throw std::out_of_range("EFB code outside m slots");
  return EfbElement{m, code};
}

EfbElement EfbElement::from_slots(const std::vector<EfbSymbol>& slots) {
  check_m(static_cast<int>(slots.size()));
  std::uint64_t code = 0;
  for (std::size_t t = 0; t < slots.size(); ++t)
    code |= static_cast<std::uint64_t>(slots[t]) << (2 * t);
  return EfbElement{static_cast<int>(slots.size()), code};
}

std::vector<EfbSymbol> EfbElement::slots() const {
  std::vector<EfbSymbol> v(m);
  for (int t = 0; t < m; ++t) v[t] = slot(t);
  return v;
}

Signature signature_of(const EfbElement& e) {
  return Signature{e.m, efb_odd_slots(e.code, e.m)};
}

std::uint32_t efb_odd_slots(std::uint64_t code, int m) {
  std::uint32_t out = 0;
  for (int t = 0; t < m; ++t)
    out |= static_cast<std::uint32_t>((code >> (2 * t + 1)) & 1) << t;
  return out;
}

// A slot product survives iff the right symbol starts with the null vector
// opposite to the one the left symbol ends with, which in the bit encoding
// reads (hi(b) ^ lo(b)) == lo(a) per slot.
bool efb_code_product_nonzero(std::uint64_t a, std::uint64_t b, int m) {
  const std::uint64_t starts = (b ^ (b >> 1)) & kLoBits;
  return ((starts ^ (a & kLoBits)) & slot_mask(m) & kLoBits) == 0;
}

// Surviving slot: parity multiplies (hi = hi_a ^ hi_b) and the result keeps
// the left symbol's leading null vector (lo = hi_b ^ lo_a).
std::uint64_t efb_code_product(std::uint64_t a, std::uint64_t b, int m) {
  const std::uint64_t hi = (a ^ b) & ~kLoBits;
  const std::uint64_t lo = (a ^ (b >> 1)) & kLoBits;
  return (hi | lo) & slot_mask(m);
}

// (-1)^t with t the number of slot pairs i < j where the right factor is odd
// at i and the left factor is odd at j: exactly the transpositions needed to
// interleave the two slot sequences.
int efb_code_product_sign(std::uint64_t a, std::uint64_t b, int m) {
  const std::uint32_t left_odd = efb_odd_slots(a, m);
  const std::uint32_t right_odd = efb_odd_slots(b, m);
  int t = 0;
  for (std::uint32_t j = right_odd; j != 0; j &= j - 1) {
    const int slot = std::countr_zero(j);
    t += std::popcount(left_odd >> (slot + 1));
  }
  return (t & 1) ? -1 : 1;
}

std::uint64_t efb_code_partner(std::uint64_t psi, std::uint32_t neg_mask, int m) {
  std::uint64_t out = 0;
  for (int t = 0; t < m; ++t) {
    const std::uint64_t ends_q = (psi >> (2 * t)) & 1;
    const std::uint64_t odd = (neg_mask >> t) & 1;
    // ends with p: QP (even) or Q (odd); ends with q: PQ (even) or P (odd)
    const std::uint64_t tag = ends_q ? (odd ? 2u : 1u) : (odd ? 3u : 0u);
    out |= tag << (2 * t);
  }
  return out;
}

std::optional<std::pair<Dyadic, EfbElement>> efb_basis_product(const EfbElement& a,
                                                               const EfbElement& b) {
  if (a.m != b.m) throw std::invalid_argument("efb_basis_product: mismatched m");
  if (!efb_code_product_nonzero(a.code, b.code, a.m)) return std::nullopt;
  const int sign = efb_code_product_sign(a.code, b.code, a.m);
  return std::make_pair(Dyadic(sign),
                        EfbElement{a.m, efb_code_product(a.code, b.code, a.m)});
}

EfbElement unique_partner(const EfbElement& psi, const Signature& r) {
  if (psi.m != r.m) throw std::invalid_argument("unique_partner: mismatched m");
  return EfbElement{psi.m, efb_code_partner(psi.code, r.neg_mask, psi.m)};
}

EfbMultivector::EfbMultivector(int m) : m_(m) { check_m(m); }

void EfbMultivector::add_term(std::uint64_t code, const Dyadic& c) {
  if (code >> (2 * m_)) throw std::out_of_range("EFB code outside m slots");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(code, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EfbMultivector::add_term(const EfbElement& e, const Dyadic& c) {
  if (e.m != m_) throw std::invalid_argument("add_term: mismatched m");
  add_term(e.code, c);
}

Dyadic EfbMultivector::coefficient(std::uint64_t code) const {
  auto it = terms_.find(code);
  return it == terms_.end() ? Dyadic() : it->second;
}

EfbMultivector EfbMultivector::element(int m, std::uint64_t code, const Dyadic& c) {
  EfbMultivector r(m);
  r.add_term(code, c);
  return r;
}

EfbMultivector EfbMultivector::operator-() const {
  EfbMultivector r(m_);
  for (const auto& [code, c] : terms_) r.terms_.emplace(code, -c);
  return r;
}

EfbMultivector operator+(const EfbMultivector& a, const EfbMultivector& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("sum: mismatched m");
  EfbMultivector r = a;
  for (const auto& [code, c] : b.terms_) r.add_term(code, c);
  return r;
}

EfbMultivector operator-(const EfbMultivector& a, const EfbMultivector& b) {
  return a + (-b);
}

EfbMultivector EfbMultivector::scaled(const Dyadic& c) const {
  EfbMultivector r(m_);
  if (c.is_zero()) return r;
  for (const auto& [code, v] : terms_) r.terms_.emplace(code, v * c);
  return r;
}

EfbMultivector mv_product(const EfbMultivector& a, const EfbMultivector& b,
                          MulCount* count) {
  if (a.m() != b.m()) throw std::invalid_argument("mv_product: mismatched m");
  const int m = a.m();

  // Group b by signature once; each a-term then visits one candidate per
  // signature instead of every b-term.
  std::unordered_map<std::uint64_t, const Dyadic*> by_code;
  by_code.reserve(b.terms().size());
  std::vector<std::uint32_t> sigs;
  {
    std::vector<bool> seen(std::size_t{1} << m, false);
    for (const auto& [code, c] : b.terms()) {
      by_code.emplace(code, &c);
      const std::uint32_t s = efb_odd_slots(code, m);
      if (!seen[s]) {
        seen[s] = true;
        sigs.push_back(s);
      }
    }
  }

  EfbMultivector r(m);
  for (const auto& [ka, va] : a.terms()) {
    for (const std::uint32_t s : sigs) {
      const std::uint64_t kb = efb_code_partner(ka, s, m);
      const auto it = by_code.find(kb);
      if (it == by_code.end()) continue;
      Dyadic c = mul(va, *it->second, count);
      if (efb_code_product_sign(ka, kb, m) < 0) c = -c;
      r.add_term(efb_code_product(ka, kb, m), c);
    }
  }
  return r;
}

EfbMultivector anticommutator(const EfbMultivector& a, const EfbMultivector& b) {
  return mv_product(a, b) + mv_product(b, a);
}

EfbMultivector efb_identity(int m) {
  check_m(m);
  EfbMultivector r(m);
  // every slot ranges over {QP, PQ}: codes whose high bits are all clear
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    std::uint64_t code = 0;
    for (int t = 0; t < m; ++t) code |= ((x >> t) & 1) << (2 * t);
    r.add_term(code, Dyadic(1));
  }
  return r;
}

std::string to_string(const EfbMultivector& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [code, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    for (int t = 0; t < a.m(); ++t) {
      if (t > 0) os << " ";
      os << symbol_token(static_cast<EfbSymbol>((code >> (2 * t)) & 3));
    }
  }
  return os.str();
}

namespace {

std::optional<EfbSymbol> symbol_from_token(std::string_view tok) {
  if (tok == "qp") return EfbSymbol::QP;
  if (tok == "pq") return EfbSymbol::PQ;
  if (tok == "p") return EfbSymbol::P;
  if (tok == "q") return EfbSymbol::Q;
  return std::nullopt;
}

}  // namespace

EfbMultivector parse_efb(std::string_view text, int m) {
  // minimal split/trim; the gamma parser carries the same logic
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };

  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty multivector expression");
  if (text == "0") {
    if (m == 0) throw std::invalid_argument("zero EFB expression needs explicit m");
    return EfbMultivector(m);
  }

  struct Term {
    Dyadic coef;
    std::uint64_t code;
  };
  std::vector<Term> parsed;
  int seen_m = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string_view term = trim(text.substr(pos, next - pos));
    pos = next + 3;

    const std::size_t star = term.find('*');
    if (star == std::string_view::npos)
      throw std::invalid_argument("term without '*': '" + std::string(term) + "'");
    const Dyadic coef = Dyadic::parse(term.substr(0, star));
    std::string_view body = trim(term.substr(star + 1));

    std::uint64_t code = 0;
    int slots = 0;
    while (!body.empty()) {
      const std::size_t sp = std::min(body.find(' '), body.size());
      const std::string_view tok = body.substr(0, sp);
      const auto sym = symbol_from_token(tok);
      if (!sym)
        throw std::invalid_argument("bad slot token: '" + std::string(tok) + "'");
      if (slots >= kMaxM) throw std::invalid_argument("too many slots");
      code |= static_cast<std::uint64_t>(*sym) << (2 * slots);
      ++slots;
      body = (sp == body.size()) ? std::string_view{} : trim(body.substr(sp + 1));
    }
    if (slots == 0) throw std::invalid_argument("term without slots");
    if (seen_m == 0) seen_m = slots;
    if (slots != seen_m)
      throw std::invalid_argument("terms disagree on slot count");
    parsed.push_back({coef, code});

    if (next == text.size()) break;
  }

  if (m == 0) m = seen_m;
  if (m != seen_m) throw std::invalid_argument("expression slot count differs from m");
  EfbMultivector r(m);
  for (const Term& t : parsed) r.add_term(t.code, t.coef);
  return r;
}

}  // namespace cliffmm
