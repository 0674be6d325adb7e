#pragma once

#include "cliffmm/efb.hpp"
#include "cliffmm/gamma.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cliffmm {

enum class WittKind { P, Q };

// p_i = (g_{2i-1} + g_{2i})/2,  q_i = (g_{2i-1} - g_{2i})/2, 1 <= i <= m.
GammaMultivector witt_vector(WittKind kind, int i, int m);

// Substitution expansion of one blade: per generator pair the occupied part
// turns into (p+q), (p-q) or (qp-pq) and absent pairs into (qp+pq); the 2^m
// resulting EFB terms share one signature and carry coefficients +-1.
EfbMultivector gamma_monomial_to_efb(const GammaMonomial& x);

// Linear extensions, exact inverses of each other.
EfbMultivector gamma_to_efb(const GammaMultivector& a);
GammaMultivector efb_to_gamma(const EfbMultivector& a);

// Square matrix of small integers; all change-of-basis matrices here have
// entries in {-1, 0, 1}.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  int at(int r, int c) const { return v_[static_cast<std::size_t>(r) * n_ + c]; }
  int& at(int r, int c) { return v_[static_cast<std::size_t>(r) * n_ + c]; }

  static IntMatrix identity(int n);
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool is_permutation() const;  // exactly one 1 per row and per column

  bool operator==(const IntMatrix&) const = default;

  // rows of space separated integers
  std::string dump() const;

 private:
  int n_;
  std::vector<int> v_;
};

// Hadamard block H_m = H_1 tensor ... tensor H_1, size 2^m, entries +-1,
// symmetric, H_m H_m = 2^m I.
IntMatrix hadamard(int m);

// Full transform block H = I_{2^m} tensor H_m, size 2^{2m}.
IntMatrix full_hadamard(int m);

// Basis permutation P_m, size 2^{2m}, from the recursion
// P_m = I_2 tensor [P_{m-1} (tensor^{m-1} P_23)] tensor I_2 with P_1 = I_4.
IntMatrix perm(int m);

// P_m as an index map: (P v)[i] = v[pi[i]].
std::vector<std::uint32_t> perm_vector(int m);

// The 4x4 block P_23: swap of the two middle entries.
IntMatrix perm23();

// Tensor-order basis listings (slot 1 is the leftmost tensor factor) ...
std::vector<GammaMonomial> tensor_gamma_order(int m);
std::vector<EfbElement> tensor_efb_order(int m);
// ... and the same lists reordered by P_m.  In these orderings the basis
// relation psi = (1/2^m) H gamma holds row by row.
std::vector<GammaMonomial> permuted_gamma_order(int m);
std::vector<EfbElement> permuted_efb_order(int m);

}  // namespace cliffmm
