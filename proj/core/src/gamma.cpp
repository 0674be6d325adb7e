#include "cliffmm/gamma.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffmm {

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxM)
    throw std::out_of_range("m must be in [1, " + std::to_string(kMaxM) + "]");
}

// bit positions of the generators squaring to -1 (even generator indices)
constexpr std::uint64_t kMinusMask = 0xAAAAAAAAAAAAAAAAull;

}  // namespace

Dyadic generator_square(int i, int m) {
  check_m(m);
  if (i < 1 || i > 2 * m) throw std::out_of_range("generator index out of range");
  return (i % 2 == 1) ? Dyadic(1) : Dyadic(-1);
}

GammaMonomial GammaMonomial::make(int m, std::uint64_t mask) {
  check_m(m);
  if (mask >> (2 * m)) throw std::out_of_range("blade mask outside [1, 2m]");
  return GammaMonomial{m, mask};
}

GammaMonomial GammaMonomial::from_indices(int m, const std::vector<int>& indices) {
  check_m(m);
  std::uint64_t mask = 0;
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || i > 2 * m) throw std::out_of_range("generator index out of range");
    if (i <= prev) throw std::invalid_argument("indices must be strictly ascending");
    prev = i;
    mask |= std::uint64_t{1} << (i - 1);
  }
  return GammaMonomial{m, mask};
}

std::vector<int> GammaMonomial::indices() const {
  std::vector<int> out;
  for (std::uint64_t t = mask; t != 0; t &= t - 1)
    out.push_back(std::countr_zero(t) + 1);
  return out;
}

int GammaMonomial::grade() const { return std::popcount(mask); }

int monomial_product_sign(std::uint64_t a, std::uint64_t b) {
  // transpositions: pairs (i in a, j in b) with i > j
  int swaps = 0;
  for (std::uint64_t t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  // squares of repeated generators contribute the metric
  swaps += std::popcount(a & b & kMinusMask);
  return (swaps & 1) ? -1 : 1;
}

std::pair<Dyadic, GammaMonomial> monomial_product(const GammaMonomial& a,
                                                  const GammaMonomial& b) {
  if (a.m != b.m) throw std::invalid_argument("monomial_product: mismatched m");
  const int sign = monomial_product_sign(a.mask, b.mask);
  return {Dyadic(sign), GammaMonomial{a.m, a.mask ^ b.mask}};
}

GammaMultivector::GammaMultivector(int m) : m_(m) { check_m(m); }

void GammaMultivector::add_term(std::uint64_t mask, const Dyadic& c) {
  if (mask >> (2 * m_)) throw std::out_of_range("blade mask outside [1, 2m]");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GammaMultivector::add_term(const GammaMonomial& mono, const Dyadic& c) {
  if (mono.m != m_) throw std::invalid_argument("add_term: mismatched m");
  add_term(mono.mask, c);
}

Dyadic GammaMultivector::coefficient(std::uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Dyadic() : it->second;
}

GammaMultivector GammaMultivector::monomial(int m, std::uint64_t mask, const Dyadic& c) {
  GammaMultivector r(m);
  r.add_term(mask, c);
  return r;
}

GammaMultivector GammaMultivector::operator-() const {
  GammaMultivector r(m_);
  for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
  return r;
}

GammaMultivector operator+(const GammaMultivector& a, const GammaMultivector& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("sum: mismatched m");
  GammaMultivector r = a;
  for (const auto& [mask, c] : b.terms_) r.add_term(mask, c);
  return r;
}

GammaMultivector operator-(const GammaMultivector& a, const GammaMultivector& b) {
  return a + (-b);
}

GammaMultivector GammaMultivector::scaled(const Dyadic& c) const {
  GammaMultivector r(m_);
  if (c.is_zero()) return r;
  for (const auto& [mask, v] : terms_) r.terms_.emplace(mask, v * c);
  return r;
}

GammaMultivector mv_product(const GammaMultivector& a, const GammaMultivector& b,
                            MulCount* count) {
  if (a.m() != b.m()) throw std::invalid_argument("mv_product: mismatched m");
  GammaMultivector r(a.m());
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      Dyadic c = mul(va, vb, count);
      if (monomial_product_sign(ka, kb) < 0) c = -c;
      r.add_term(ka ^ kb, c);
    }
  }
  return r;
}

GammaMultivector anticommutator(const GammaMultivector& a, const GammaMultivector& b) {
  return mv_product(a, b) + mv_product(b, a);
}

std::string to_string(const GammaMultivector& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    if (mask == 0) {
      os << "1";
    } else {
      bool space = false;
      for (std::uint64_t t = mask; t != 0; t &= t - 1) {
        if (space) os << " ";
        space = true;
        os << "g" << std::countr_zero(t) + 1;
      }
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      return out;
    }
    out.emplace_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

GammaMultivector parse_gamma(std::string_view text, int m) {
  struct Term {
    Dyadic coef;
    std::uint64_t mask;
  };
  std::vector<Term> parsed;
  int max_index = 0;

  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty multivector expression");
  if (text != "0") {
    for (const std::string& raw : split(text, " + ")) {
      const std::string_view term = trim(raw);
      const std::size_t star = term.find('*');
      if (star == std::string_view::npos)
        throw std::invalid_argument("term without '*': '" + std::string(term) + "'");
      const Dyadic coef = Dyadic::parse(term.substr(0, star));
      const std::string_view body = trim(term.substr(star + 1));
      std::uint64_t mask = 0;
      if (body != "1") {
        int prev = 0;
        for (const std::string& tokRaw : split(body, " ")) {
          const std::string_view tok = trim(tokRaw);
          if (tok.size() < 2 || tok[0] != 'g')
            throw std::invalid_argument("bad blade token: '" + std::string(tok) + "'");
          int idx = 0;
          for (char ch : tok.substr(1)) {
            if (ch < '0' || ch > '9')
              throw std::invalid_argument("bad blade token: '" + std::string(tok) + "'");
            idx = idx * 10 + (ch - '0');
          }
          if (idx < 1 || idx > 2 * kMaxM)
            throw std::invalid_argument("generator index out of range: " + std::string(tok));
          if (idx <= prev)
            throw std::invalid_argument("blade indices must be strictly ascending");
          prev = idx;
          mask |= std::uint64_t{1} << (idx - 1);
          max_index = std::max(max_index, idx);
        }
      }
      parsed.push_back({coef, mask});
    }
  }

  if (m == 0) m = std::max(1, (max_index + 1) / 2);
  GammaMultivector r(m);
  for (const Term& t : parsed) r.add_term(t.mask, t.coef);
  return r;
}

}  // namespace cliffmm
