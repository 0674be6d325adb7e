#include "cliffmm/spinor.hpp"

namespace cliffmm {

int weyl_sign(const EfbElement& psi) {
  int eps = 1;
  for (int t = 0; t < psi.m; ++t) {
    const EfbSymbol s = psi.slot(t);
    if (s == EfbSymbol::PQ || s == EfbSymbol::P) eps = -eps;
  }
  return eps;
}

TnpBasis tnp_of(const EfbElement& psi) {
  std::uint32_t p_mask = 0;
  for (int t = 0; t < psi.m; ++t) {
    const EfbSymbol s = psi.slot(t);
    if (s == EfbSymbol::PQ || s == EfbSymbol::P) p_mask |= 1u << t;
  }
  return TnpBasis{psi.m, p_mask};
}

std::vector<EfbElement> tnp_class(const EfbElement& psi) {
  // per slot the companion with equal leading null vector: q(11) <-> qp(00),
  // p(10) <-> pq(01), i.e. flip both code bits
  std::vector<EfbElement> out;
  const std::size_t n = std::size_t{1} << psi.m;
  out.reserve(n);
  for (std::uint64_t toggles = 0; toggles < n; ++toggles) {
    std::uint64_t code = psi.code;
    for (int t = 0; t < psi.m; ++t)
      if ((toggles >> t) & 1) code ^= std::uint64_t{3} << (2 * t);
    out.push_back(EfbElement{psi.m, code});
  }
  return out;
}

std::optional<EfbElement> is_simple_spinor_form(const EfbMultivector& a) {
  if (a.term_count() != 1) return std::nullopt;
  return EfbElement{a.m(), a.terms().begin()->first};
}

EfbMultivector null_vector(WittKind kind, int i, int m) {
  return gamma_to_efb(witt_vector(kind, i, m));
}

GammaMultivector gamma_volume(int m) {
  const std::uint64_t full = (std::uint64_t{1} << (2 * m)) - 1;
  return GammaMultivector::monomial(m, full);
}

}  // namespace cliffmm
