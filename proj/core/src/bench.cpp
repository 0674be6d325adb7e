#include "cliffmm/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cliffmm {

namespace {

std::uint64_t pow2u(int e) { return std::uint64_t{1} << e; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::uint64_t count_table_nonzeros(int m) {
  if (m < 1 || m > kTableCountMaxM)
    throw std::out_of_range("count_table_nonzeros: m must be in [1, " +
                            std::to_string(kTableCountMaxM) + "]");
  const std::uint64_t n = pow2u(2 * m);
  std::uint64_t nonzero = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      if (efb_code_product_nonzero(i, j, m)) ++nonzero;
  return nonzero;
}

std::vector<Dyadic> random_dense_coefficients(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-512, 512);
  std::uniform_int_distribution<int> exp(-4, 3);
  const std::size_t n = std::size_t{1} << (2 * m);
  std::vector<Dyadic> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = num(rng);
    if (v % 2 == 0) ++v;  // keep it odd, hence nonzero
    out.emplace_back(BigInt(v), exp(rng));
  }
  return out;
}

BenchReport dense_product_counts(int m, std::uint64_t seed) {
  if (m < 1 || m > kDenseEfbMaxM)
    throw std::out_of_range("dense_product_counts: m must be in [1, " +
                            std::to_string(kDenseEfbMaxM) + "]");

  BenchReport r;
  r.m = m;
  r.lower_bound = 2 * pow2u(2 * m) - 1;
  r.upper_bound_label = pow2u(3 * m);

  const std::vector<Dyadic> a = random_dense_coefficients(m, seed);
  const std::vector<Dyadic> b = random_dense_coefficients(m, seed + 1);
  std::vector<double> af, bf;
  af.reserve(a.size());
  bf.reserve(b.size());
  for (const Dyadic& d : a) af.push_back(d.to_double());
  for (const Dyadic& d : b) bf.push_back(d.to_double());

  {
    MulCount count;
    dense_efb_product<Dyadic>(a, b, m, &count);
    r.dense_efb_mults = count.mults;
    const auto t0 = std::chrono::steady_clock::now();
    dense_efb_product<double>(af, bf, m);
    r.efb_seconds = seconds_since(t0);
  }
  if (m <= kDenseGammaMaxM) {
    MulCount count;
    dense_gamma_product<Dyadic>(a, b, m, &count);
    r.dense_gamma_mults = count.mults;
    const auto t0 = std::chrono::steady_clock::now();
    dense_gamma_product<double>(af, bf, m);
    r.gamma_seconds = seconds_since(t0);
  }
  if (m <= kTableCountMaxM) r.table_nonzero = count_table_nonzeros(m);
  return r;
}

namespace {

std::string opt_str(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

std::string render_text(const BenchReport& r) {
  std::ostringstream os;
  os << "m                   " << r.m << "\n";
  os << "table_nonzero       " << opt_str(r.table_nonzero) << "\n";
  os << "dense_efb_mults     " << r.dense_efb_mults << "\n";
  os << "dense_gamma_mults   " << opt_str(r.dense_gamma_mults) << "\n";
  os << "lower_bound         " << r.lower_bound << "\n";
  os << "upper_bound         " << r.upper_bound_label << "\n";
  if (r.efb_seconds) os << "efb_seconds         " << *r.efb_seconds << "\n";
  if (r.gamma_seconds) os << "gamma_seconds       " << *r.gamma_seconds << "\n";
  return os.str();
}

std::string render_key_values(const BenchReport& r) {
  std::ostringstream os;
  os << "m=" << r.m << "\n";
  if (r.table_nonzero) os << "table_nonzero=" << *r.table_nonzero << "\n";
  os << "dense_efb_mults=" << r.dense_efb_mults << "\n";
  if (r.dense_gamma_mults) os << "dense_gamma_mults=" << *r.dense_gamma_mults << "\n";
  os << "lower_bound=" << r.lower_bound << "\n";
  os << "upper_bound=" << r.upper_bound_label << "\n";
  if (r.efb_seconds) os << "efb_seconds=" << *r.efb_seconds << "\n";
  if (r.gamma_seconds) os << "gamma_seconds=" << *r.gamma_seconds << "\n";
  return os.str();
}

}  // namespace cliffmm
