#pragma once

#include "cliffmm/efb.hpp"

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace cliffmm {

// Simple undirected graph on m vertices (1-based), adjacency kept as one
// bitmask row per vertex.  Symmetric, zero diagonal.
class Graph {
 public:
  explicit Graph(int m);

  int m() const noexcept { return m_; }
  bool edge(int u, int v) const;
  void add_edge(int u, int v);
  int edge_count() const;

  std::uint32_t row(int u) const;  // neighbours of u as a bitmask (0-based bits)
  Graph complement() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int m_;
  std::vector<std::uint32_t> adj_;
};

// A' from the adjacency matrix: upper triangle kept, lower triangle forced to
// one, diagonal zero.
struct ModifiedAdjacency {
  int m = 1;
  std::vector<std::uint32_t> rows;

  static ModifiedAdjacency from(const Graph& g);
  bool at(int i, int j) const {  // 1-based
    return (rows[i - 1] >> (j - 1)) & 1;
  }
};

// z_i = q_i + (1/2) sum_j a_{ij} p_j, in the EFB.  The half on the neighbour
// part makes {z_i, z_j} = a_{ij} * identity hold exactly for a symmetric
// adjacency; the vanishing pattern, which is all the null-plane geometry
// needs, is the same either way.
EfbMultivector z_vector(int i, const Graph& g);

// o_i = e_1 ... e_{i-1} q_i e_{i+1}^{a'_{i,i+1}} ... e_m^{a'_{im}} with
// e_j = p_j q_j and absent factors expanded as (q_j p_j + p_j q_j); a sum of
// 2^l EFB terms, all coefficients one.
EfbMultivector o_multivector(int i, const ModifiedAdjacency& aprime);

// Classification of the product pair (o_i o_j, o_j o_i) for every ordered
// vertex pair, checked against the zero pattern the A' entries predict.
struct PairCase {
  int i = 0, j = 0;           // 1-based, i < j
  bool aij = false;           // a'_{ij}
  bool aji = false;           // a'_{ji} (always 1 for i < j under A')
  bool ij_zero = false;       // computed o_i o_j == 0
  bool ji_zero = false;       // computed o_j o_i == 0
  bool matches_prediction = false;   // zero iff the corresponding a' entry is 1
  bool anticommutator_matches = false;  // {o_i,o_j} equals the surviving product
};
std::vector<PairCase> pair_products_table(const Graph& g);

// O = sum_i o_i.
EfbMultivector big_o(const Graph& g);

// True iff O^k != 0 (exact arithmetic), i.e. iff g has an independent set of
// order k.
bool independence_test(const Graph& g, int k);

// Largest k with O^k != 0.
int independence_number(const Graph& g);

// q-slot index sets of the terms of O^k: exactly the independent k-sets.
std::set<std::vector<int>> extract_independent_sets(const Graph& g, int k);

// Ordered product of the o's of an independent set S (ascending); true iff it
// is a single EFB term.  Throws if the product vanishes (S not independent).
bool maximal_term_is_simple(const Graph& g, const std::vector<int>& S);

// ---- combinatorial oracle (subset enumeration) ----

inline constexpr int kDefaultOracleLimit = 16;

int brute_force_mis(const Graph& g, int limit = kDefaultOracleLimit);
std::vector<std::vector<int>> enumerate_maximal_sets(const Graph& g,
                                                     int limit = kDefaultOracleLimit);
// all independent sets of maximum size
std::vector<std::vector<int>> maximum_independent_sets(const Graph& g,
                                                       int limit = kDefaultOracleLimit);

// Sum over maximal independent sets of the (single term) o-product, each
// taken with coefficient +1.  Desk scale only: needs the oracle's list.
EfbMultivector graph_spinor(const Graph& g, int limit = kDefaultOracleLimit);

// ---- file ingestion, 1-based vertices ----

// DIMACS ASCII: "c" comments, "p edge <n> <edges>", "e <u> <v>".
Graph read_dimacs(std::istream& in);
// One "u v" pair per line; '#' comments and blank lines skipped.  m = 0 takes
// the largest vertex mentioned.
Graph read_edge_list(std::istream& in, int m = 0);
Graph read_graph_file(const std::string& path, const std::string& format, int m = 0);

}  // namespace cliffmm
