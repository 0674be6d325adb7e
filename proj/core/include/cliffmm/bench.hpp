#pragma once

#include "cliffmm/efb.hpp"
#include "cliffmm/gamma.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cliffmm {

// Multiplication counts for one size m, plus the bound the algebra dimension
// imposes.  Wall clock numbers are informational only and never asserted.
struct BenchReport {
  int m = 1;
  std::optional<std::uint64_t> dense_gamma_mults;  // 2^{4m}; absent past its limit
  std::uint64_t dense_efb_mults = 0;               // 2^{3m}
  std::optional<std::uint64_t> table_nonzero;      // 2^{3m}; absent past its limit
  std::uint64_t lower_bound = 0;                   // 2 * 2^{2m} - 1
  std::uint64_t upper_bound_label = 0;             // 2^{3m}
  std::optional<double> gamma_seconds;             // float-mode dense product
  std::optional<double> efb_seconds;
};

inline constexpr int kTableCountMaxM = 5;   // 2^{4m} table entries to scan
inline constexpr int kDenseGammaMaxM = 5;   // 2^{4m} coefficient products
inline constexpr int kDenseEfbMaxM = 7;     // 2^{3m} coefficient products

// Scans all EFB basis pairs and counts the surviving products; equals 2^{3m}.
std::uint64_t count_table_nonzeros(int m);

// Multiplies one fully dense random pair in each basis under a counting
// context and times the float-scalar mode on the same coefficients.
BenchReport dense_product_counts(int m, std::uint64_t seed = 0);

std::string render_text(const BenchReport& r);
std::string render_key_values(const BenchReport& r);

// ---- dense kernels ----
//
// Coefficients live in flat arrays of size 2^{2m}: gamma indexed by blade
// mask, EFB by element code.  S is the scalar mode: Dyadic for exact runs,
// double for timing.

template <class S>
std::vector<S> dense_gamma_product(std::span<const S> a, std::span<const S> b, int m,
                                   MulCount* count = nullptr) {
  const std::size_t n = std::size_t{1} << (2 * m);
  std::vector<S> out(n, S(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const S p = mul(a[i], b[j], count);
      if (monomial_product_sign(i, j) < 0)
        out[i ^ j] = out[i ^ j] - p;
      else
        out[i ^ j] = out[i ^ j] + p;
    }
  }
  return out;
}

template <class S>
std::vector<S> dense_efb_product(std::span<const S> a, std::span<const S> b, int m,
                                 MulCount* count = nullptr) {
  const std::size_t n = std::size_t{1} << (2 * m);
  const std::uint32_t sig_count = std::uint32_t{1} << m;
  std::vector<S> out(n, S(0));
  for (std::size_t i = 0; i < n; ++i) {
    // per signature exactly one partner survives
    for (std::uint32_t s = 0; s < sig_count; ++s) {
      const std::uint64_t j = efb_code_partner(i, s, m);
      const S p = mul(a[i], b[j], count);
      const std::uint64_t k = efb_code_product(i, j, m);
      if (efb_code_product_sign(i, j, m) < 0)
        out[k] = out[k] - p;
      else
        out[k] = out[k] + p;
    }
  }
  return out;
}

// Deterministic dense coefficient array: every entry nonzero, dyadic, exactly
// representable in a double.
std::vector<Dyadic> random_dense_coefficients(int m, std::uint64_t seed);

}  // namespace cliffmm
