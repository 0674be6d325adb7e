#include "cliffmm/transform.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffmm {

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxM)
    throw std::out_of_range("m must be in [1, " + std::to_string(kMaxM) + "]");
}

void check_matrix_m(int m, int limit) {
  check_m(m);
  if (m > limit)
    throw std::out_of_range("dense matrices limited to m <= " + std::to_string(limit));
}

// Dense 2^{2m}-square matrices stop at 1024 x 1024; the index-map form of
// P_m goes a bit further.
constexpr int kDenseMatrixMaxM = 5;
constexpr int kPermVectorMaxM = 8;

}  // namespace

GammaMultivector witt_vector(WittKind kind, int i, int m) {
  check_m(m);
  if (i < 1 || i > m) throw std::out_of_range("witt_vector: index out of range");
  GammaMultivector r(m);
  const Dyadic half(1, -1);
  r.add_term(std::uint64_t{1} << (2 * i - 2), half);  // g_{2i-1}
  r.add_term(std::uint64_t{1} << (2 * i - 1), kind == WittKind::P ? half : -half);
  return r;
}

EfbMultivector gamma_monomial_to_efb(const GammaMonomial& x) {
  const int m = x.m;
  // Two candidate symbols and signs per slot, picked by pair occupancy.
  struct Choice {
    EfbSymbol sym[2];
    int sign[2];
  };
  std::vector<Choice> factor(m);
  for (int t = 0; t < m; ++t) {
    const bool lo = (x.mask >> (2 * t)) & 1;      // g_{2t+1}
    const bool hi = (x.mask >> (2 * t + 1)) & 1;  // g_{2t+2}
    if (!lo && !hi) factor[t] = {{EfbSymbol::QP, EfbSymbol::PQ}, {1, 1}};
    else if (lo && !hi) factor[t] = {{EfbSymbol::P, EfbSymbol::Q}, {1, 1}};
    else if (!lo && hi) factor[t] = {{EfbSymbol::P, EfbSymbol::Q}, {1, -1}};
    else factor[t] = {{EfbSymbol::QP, EfbSymbol::PQ}, {1, -1}};
  }

  EfbMultivector r(m);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::uint64_t code = 0;
    int sign = 1;
    for (int t = 0; t < m; ++t) {
      const int which = (pick >> t) & 1;
      code |= static_cast<std::uint64_t>(factor[t].sym[which]) << (2 * t);
      sign *= factor[t].sign[which];
    }
    r.add_term(code, Dyadic(sign));
  }
  return r;
}

EfbMultivector gamma_to_efb(const GammaMultivector& a) {
  EfbMultivector r(a.m());
  for (const auto& [mask, c] : a.terms()) {
    const EfbMultivector expansion = gamma_monomial_to_efb(GammaMonomial{a.m(), mask});
    for (const auto& [code, e] : expansion.terms()) r.add_term(code, e * c);
  }
  return r;
}

GammaMultivector efb_to_gamma(const EfbMultivector& a) {
  const int m = a.m();
  GammaMultivector r(m);
  for (const auto& [code, c] : a.terms()) {
    // per slot: two blades with coefficients +-1/2
    struct Choice {
      std::uint64_t mask[2];
      int sign[2];
    };
    std::vector<Choice> factor(m);
    for (int t = 0; t < m; ++t) {
      const std::uint64_t lo_bit = std::uint64_t{1} << (2 * t);
      const std::uint64_t hi_bit = std::uint64_t{1} << (2 * t + 1);
      switch (static_cast<EfbSymbol>((code >> (2 * t)) & 3)) {
        case EfbSymbol::QP: factor[t] = {{0, lo_bit | hi_bit}, {1, 1}}; break;
        case EfbSymbol::PQ: factor[t] = {{0, lo_bit | hi_bit}, {1, -1}}; break;
        case EfbSymbol::P: factor[t] = {{lo_bit, hi_bit}, {1, 1}}; break;
        case EfbSymbol::Q: factor[t] = {{lo_bit, hi_bit}, {1, -1}}; break;
      }
    }
    const Dyadic scale(BigInt(1), -static_cast<std::int64_t>(m));  // 1/2^m
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
      std::uint64_t mask = 0;
      int sign = 1;
      for (int t = 0; t < m; ++t) {
        const int which = (pick >> t) & 1;
        mask |= factor[t].mask[which];
        sign *= factor[t].sign[which];
      }
      Dyadic coef = c * scale;
      if (sign < 0) coef = -coef;
      r.add_term(mask, coef);
    }
  }
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix r(n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("matrix product: size mismatch");
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

bool IntMatrix::is_permutation() const {
  std::vector<int> col_ones(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int row_ones = 0;
    for (int j = 0; j < n_; ++j) {
      const int v = at(i, j);
      if (v == 1) {
        ++row_ones;
        ++col_ones[j];
      } else if (v != 0) {
        return false;
      }
    }
    if (row_ones != 1) return false;
  }
  for (int c : col_ones)
    if (c != 1) return false;
  return true;
}

std::string IntMatrix::dump() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j > 0) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix hadamard(int m) {
  check_matrix_m(m, 2 * kDenseMatrixMaxM);  // 2^m side
  const int n = 1 << m;
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.at(i, j) = (std::popcount(static_cast<unsigned>(i & j)) & 1) ? -1 : 1;
  return r;
}

IntMatrix full_hadamard(int m) {
  check_matrix_m(m, kDenseMatrixMaxM);
  const IntMatrix hm = hadamard(m);
  const int block = 1 << m;
  const int n = block << m;  // 2^{2m}
  IntMatrix r(n);
  for (int blk = 0; blk < block; ++blk)
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j)
        r.at(blk * block + i, blk * block + j) = hm.at(i, j);
  return r;
}

std::vector<std::uint32_t> perm_vector(int m) {
  check_matrix_m(m, kPermVectorMaxM);
  // pi_1 = id on 4 indices
  std::vector<std::uint32_t> pi = {0, 1, 2, 3};
  static constexpr std::uint32_t kSwap23[4] = {0, 2, 1, 3};
  for (int level = 2; level <= m; ++level) {
    const std::size_t inner = std::size_t{1} << (2 * (level - 1));  // 4^{level-1}
    // Y = P_{level-1} * (tensor^{level-1} P_23); composition of index maps
    // runs right factor after left: pi_Y = pi_tensor o pi_{P_{level-1}}.
    std::vector<std::uint32_t> y(inner);
    for (std::size_t i = 0; i < inner; ++i) {
      std::uint32_t x = pi[i];
      // apply P_23 to every base-4 digit
      std::uint32_t out = 0;
      for (int d = 0; d < level - 1; ++d)
        out |= kSwap23[(x >> (2 * d)) & 3] << (2 * d);
      y[i] = out;
    }
    // P_level = I_2 tensor Y tensor I_2 on indices (a, y, c)
    std::vector<std::uint32_t> next(inner * 4);
    for (std::uint32_t a = 0; a < 2; ++a)
      for (std::size_t mid = 0; mid < inner; ++mid)
        for (std::uint32_t c = 0; c < 2; ++c)
          next[(a * inner + mid) * 2 + c] =
              (a * inner + y[mid]) * 2 + c;
    pi = std::move(next);
  }
  return pi;
}

IntMatrix perm(int m) {
  check_matrix_m(m, kDenseMatrixMaxM);
  const std::vector<std::uint32_t> pi = perm_vector(m);
  IntMatrix r(static_cast<int>(pi.size()));
  for (std::size_t i = 0; i < pi.size(); ++i) r.at(static_cast<int>(i), static_cast<int>(pi[i])) = 1;
  return r;
}

IntMatrix perm23() {
  IntMatrix r(4);
  r.at(0, 0) = r.at(1, 2) = r.at(2, 1) = r.at(3, 3) = 1;
  return r;
}

namespace {

// base-4 digits of the tensor index, pair 1 most significant
int tensor_digit(std::uint64_t x, int pair, int m) {
  return static_cast<int>((x >> (2 * (m - 1 - pair))) & 3);
}

}  // namespace

std::vector<GammaMonomial> tensor_gamma_order(int m) {
  check_matrix_m(m, kPermVectorMaxM);
  const std::size_t n = std::size_t{1} << (2 * m);
  std::vector<GammaMonomial> out;
  out.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t mask = 0;
    for (int t = 0; t < m; ++t) {
      // Cl(1,1) factor order (1, g g, g_odd, g_even)
      switch (tensor_digit(x, t, m)) {
        case 0: break;
        case 1: mask |= std::uint64_t{3} << (2 * t); break;
        case 2: mask |= std::uint64_t{1} << (2 * t); break;
        case 3: mask |= std::uint64_t{2} << (2 * t); break;
      }
    }
    out.push_back(GammaMonomial{m, mask});
  }
  return out;
}

std::vector<EfbElement> tensor_efb_order(int m) {
  check_matrix_m(m, kPermVectorMaxM);
  const std::size_t n = std::size_t{1} << (2 * m);
  std::vector<EfbElement> out;
  out.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t code = 0;
    // the Cl(1,1) psi order (qp, pq, p, q) is the symbol encoding itself
    for (int t = 0; t < m; ++t)
      code |= static_cast<std::uint64_t>(tensor_digit(x, t, m)) << (2 * t);
    out.push_back(EfbElement{m, code});
  }
  return out;
}

std::vector<GammaMonomial> permuted_gamma_order(int m) {
  const std::vector<std::uint32_t> pi = perm_vector(m);
  const std::vector<GammaMonomial> tensor = tensor_gamma_order(m);
  std::vector<GammaMonomial> out;
  out.reserve(pi.size());
  for (const std::uint32_t p : pi) out.push_back(tensor[p]);
  return out;
}

std::vector<EfbElement> permuted_efb_order(int m) {
  const std::vector<std::uint32_t> pi = perm_vector(m);
  const std::vector<EfbElement> tensor = tensor_efb_order(m);
  std::vector<EfbElement> out;
  out.reserve(pi.size());
  for (const std::uint32_t p : pi) out.push_back(tensor[p]);
  return out;
}

}  // namespace cliffmm
