#include "cliffmm/graph.hpp"

#include "cliffmm/spinor.hpp"
#include "cliffmm/transform.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace cliffmm {

Graph::Graph(int m) : m_(m), adj_(static_cast<std::size_t>(m), 0) {
  if (m < 1 || m > kMaxM)
    throw std::out_of_range("graph size must be in [1, " + std::to_string(kMaxM) + "]");
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > m_) throw std::out_of_range("vertex out of range");
}

bool Graph::edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u - 1] >> (v - 1)) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loops not allowed");
  adj_[u - 1] |= std::uint32_t{1} << (v - 1);
  adj_[v - 1] |= std::uint32_t{1} << (u - 1);
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint32_t r : adj_) twice += std::popcount(r);
  return twice / 2;
}

std::uint32_t Graph::row(int u) const {
  check_vertex(u);
  return adj_[u - 1];
}

Graph Graph::complement() const {
  Graph r(m_);
  const std::uint32_t all = (m_ == 32) ? ~0u : ((std::uint32_t{1} << m_) - 1);
  for (int u = 1; u <= m_; ++u)
    r.adj_[u - 1] = (~adj_[u - 1] & all) & ~(std::uint32_t{1} << (u - 1));
  return r;
}

ModifiedAdjacency ModifiedAdjacency::from(const Graph& g) {
  ModifiedAdjacency r;
  r.m = g.m();
  r.rows.resize(g.m());
  for (int i = 1; i <= g.m(); ++i) {
    const std::uint32_t below = (std::uint32_t{1} << (i - 1)) - 1;  // j < i
    const std::uint32_t above = ~((std::uint32_t{1} << i) - 1);     // j > i
    r.rows[i - 1] = below | (g.row(i) & above);
  }
  return r;
}

EfbMultivector z_vector(int i, const Graph& g) {
  const int m = g.m();
  // The neighbour part carries 1/2: with a symmetric adjacency both a_{ij}
  // and a_{ji} contribute to {z_i, z_j}, and the halves make the
  // anticommutator come out as a_{ij} * 1 exactly.
  const Dyadic half(1, -1);
  GammaMultivector v = witt_vector(WittKind::Q, i, m);
  for (int j = 1; j <= m; ++j)
    if (g.edge(i, j)) v = v + witt_vector(WittKind::P, j, m).scaled(half);
  return gamma_to_efb(v);
}

EfbMultivector o_multivector(int i, const ModifiedAdjacency& aprime) {
  const int m = aprime.m;
  if (i < 1 || i > m) throw std::out_of_range("vertex out of range");

  std::uint64_t base = 0;
  std::vector<int> free_slots;
  for (int j = 1; j <= m; ++j) {
    const int t = j - 1;
    if (j == i) {
      base |= std::uint64_t{3} << (2 * t);  // Q
    } else if (aprime.at(i, j)) {
      base |= std::uint64_t{1} << (2 * t);  // PQ (the e_j factor)
    } else {
      free_slots.push_back(t);  // identity slot, expands over {QP, PQ}
    }
  }

  EfbMultivector r(m);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free_slots.size()); ++pick) {
    std::uint64_t code = base;
    for (std::size_t s = 0; s < free_slots.size(); ++s)
      if ((pick >> s) & 1) code |= std::uint64_t{1} << (2 * free_slots[s]);  // PQ over QP
    r.add_term(code, Dyadic(1));
  }
  return r;
}

std::vector<PairCase> pair_products_table(const Graph& g) {
  const ModifiedAdjacency ap = ModifiedAdjacency::from(g);
  std::vector<EfbMultivector> o;
  o.reserve(g.m());
  for (int i = 1; i <= g.m(); ++i) o.push_back(o_multivector(i, ap));

  std::vector<PairCase> out;
  for (int i = 1; i <= g.m(); ++i) {
    for (int j = i + 1; j <= g.m(); ++j) {
      PairCase c;
      c.i = i;
      c.j = j;
      c.aij = ap.at(i, j);
      c.aji = ap.at(j, i);
      const EfbMultivector ij = mv_product(o[i - 1], o[j - 1]);
      const EfbMultivector ji = mv_product(o[j - 1], o[i - 1]);
      c.ij_zero = ij.is_zero();
      c.ji_zero = ji.is_zero();
      c.matches_prediction = (c.ij_zero == c.aij) && (c.ji_zero == c.aji);
      // Table row: the anticommutator equals whichever product survives
      // (zero when both vanish or both survive).
      EfbMultivector expected(g.m());
      if (!c.aij && c.aji) expected = ij;
      else if (c.aij && !c.aji) expected = ji;
      c.anticommutator_matches = (ij + ji == expected);
      out.push_back(c);
    }
  }
  return out;
}

EfbMultivector big_o(const Graph& g) {
  const ModifiedAdjacency ap = ModifiedAdjacency::from(g);
  EfbMultivector r(g.m());
  for (int i = 1; i <= g.m(); ++i) r = r + o_multivector(i, ap);
  return r;
}

namespace {

void check_k(const Graph& g, int k) {
  if (k < 1 || k > g.m()) throw std::out_of_range("k out of range");
}

EfbMultivector o_power(const Graph& g, int k) {
  const EfbMultivector o = big_o(g);
  EfbMultivector acc = o;
  for (int i = 2; i <= k && !acc.is_zero(); ++i) acc = mv_product(acc, o);
  return acc;
}

std::vector<int> q_slots_of(std::uint64_t code, int m) {
  std::vector<int> out;
  for (int t = 0; t < m; ++t)
    if (((code >> (2 * t)) & 3) == 3) out.push_back(t + 1);
  return out;
}

void check_oracle(const Graph& g, int limit) {
  if (g.m() > limit)
    throw std::out_of_range("graph exceeds the oracle limit of " + std::to_string(limit) +
                            " vertices");
}

std::vector<int> mask_to_set(std::uint32_t s) {
  std::vector<int> out;
  for (std::uint32_t t = s; t != 0; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

}  // namespace

bool independence_test(const Graph& g, int k) {
  check_k(g, k);
  return !o_power(g, k).is_zero();
}

int independence_number(const Graph& g) {
  EfbMultivector acc = big_o(g);
  int alpha = 0;
  const EfbMultivector o = acc;
  while (!acc.is_zero() && alpha < g.m()) {
    ++alpha;
    if (alpha < g.m()) acc = mv_product(acc, o);
  }
  return alpha;
}

std::set<std::vector<int>> extract_independent_sets(const Graph& g, int k) {
  check_k(g, k);
  const EfbMultivector power = o_power(g, k);
  std::set<std::vector<int>> out;
  for (const auto& [code, c] : power.terms()) out.insert(q_slots_of(code, g.m()));
  return out;
}

bool maximal_term_is_simple(const Graph& g, const std::vector<int>& S) {
  if (S.empty()) throw std::invalid_argument("empty vertex set");
  const ModifiedAdjacency ap = ModifiedAdjacency::from(g);
  int prev = 0;
  EfbMultivector acc(g.m());
  bool first = true;
  for (int v : S) {
    if (v <= prev) throw std::invalid_argument("set must be listed ascending");
    prev = v;
    const EfbMultivector o = o_multivector(v, ap);
    acc = first ? o : mv_product(acc, o);
    first = false;
  }
  if (acc.is_zero()) throw std::invalid_argument("set is not independent: o-product is zero");
  return is_simple_spinor_form(acc).has_value();
}

int brute_force_mis(const Graph& g, int limit) {
  check_oracle(g, limit);
  const int m = g.m();
  int best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
    bool independent = true;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      const int v = std::countr_zero(t) + 1;
      if (g.row(v) & s) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

std::vector<std::vector<int>> enumerate_maximal_sets(const Graph& g, int limit) {
  check_oracle(g, limit);
  const int m = g.m();
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
    bool independent = true;
    std::uint32_t neighbourhood = 0;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      const int v = std::countr_zero(t) + 1;
      if (g.row(v) & s) {
        independent = false;
        break;
      }
      neighbourhood |= g.row(v);
    }
    if (!independent) continue;
    // maximal: every outside vertex sees the set
    const std::uint32_t all = (std::uint32_t{1} << m) - 1;
    if ((s | neighbourhood) == all) out.push_back(mask_to_set(s));
  }
  return out;
}

std::vector<std::vector<int>> maximum_independent_sets(const Graph& g, int limit) {
  const int alpha = brute_force_mis(g, limit);
  std::vector<std::vector<int>> out;
  if (alpha == 0) return out;
  const int m = g.m();
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
    if (std::popcount(s) != alpha) continue;
    bool independent = true;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      const int v = std::countr_zero(t) + 1;
      if (g.row(v) & s) {
        independent = false;
        break;
      }
    }
    if (independent) out.push_back(mask_to_set(s));
  }
  return out;
}

EfbMultivector graph_spinor(const Graph& g, int limit) {
  const ModifiedAdjacency ap = ModifiedAdjacency::from(g);
  EfbMultivector r(g.m());
  for (const std::vector<int>& S : enumerate_maximal_sets(g, limit)) {
    EfbMultivector acc(g.m());
    bool first = true;
    for (int v : S) {
      const EfbMultivector o = o_multivector(v, ap);
      acc = first ? o : mv_product(acc, o);
      first = false;
    }
    const auto term = is_simple_spinor_form(acc);
    if (!term)
      throw std::logic_error("maximal set o-product is not a single EFB term");
    r.add_term(term->code, Dyadic(1));  // +1 per set by convention
  }
  return r;
}

namespace {

struct EdgeList {
  int max_vertex = 0;
  std::vector<std::pair<int, int>> edges;
};

int parse_vertex(const std::string& tok, int line_no) {
  int v = 0;
  if (tok.empty()) throw std::invalid_argument("empty vertex token");
  for (char ch : tok) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("bad vertex '" + tok + "' on line " +
                                  std::to_string(line_no));
    v = v * 10 + (ch - '0');
    if (v > 1'000'000) throw std::invalid_argument("vertex index too large");
  }
  if (v < 1)
    throw std::invalid_argument("vertices are 1-based; got '" + tok + "' on line " +
                                std::to_string(line_no));
  return v;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = 0;
  EdgeList acc;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank
    if (kind == "c") continue;
    if (kind == "p") {
      std::string fmt;
      long long edges = 0;
      if (!(ls >> fmt >> n >> edges) || (fmt != "edge" && fmt != "col"))
        throw std::invalid_argument("malformed DIMACS header on line " +
                                    std::to_string(line_no));
      saw_header = true;
      continue;
    }
    if (kind == "e") {
      std::string u, v;
      if (!(ls >> u >> v))
        throw std::invalid_argument("malformed edge line " + std::to_string(line_no));
      const int a = parse_vertex(u, line_no);
      const int b = parse_vertex(v, line_no);
      acc.edges.emplace_back(a, b);
      acc.max_vertex = std::max({acc.max_vertex, a, b});
      continue;
    }
    throw std::invalid_argument("unrecognised DIMACS line " + std::to_string(line_no) +
                                ": '" + line + "'");
  }
  if (!saw_header) throw std::invalid_argument("missing DIMACS 'p edge' header");
  if (n < acc.max_vertex)
    throw std::invalid_argument("edge mentions vertex beyond the header count");
  Graph g(std::max(n, 1));
  for (auto [u, v] : acc.edges) g.add_edge(u, v);
  return g;
}

Graph read_edge_list(std::istream& in, int m) {
  std::string line;
  EdgeList acc;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  " needs two vertices");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("trailing tokens on line " + std::to_string(line_no));
    const int a = parse_vertex(u, line_no);
    const int b = parse_vertex(v, line_no);
    acc.edges.emplace_back(a, b);
    acc.max_vertex = std::max({acc.max_vertex, a, b});
  }
  if (m == 0) m = std::max(acc.max_vertex, 1);
  if (acc.max_vertex > m)
    throw std::invalid_argument("edge mentions vertex beyond m");
  Graph g(m);
  for (auto [u, v] : acc.edges) g.add_edge(u, v);
  return g;
}

Graph read_graph_file(const std::string& path, const std::string& format, int m) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  if (format == "dimacs") return read_dimacs(in);
  if (format == "edgelist") return read_edge_list(in, m);
  throw std::invalid_argument("unknown graph format: " + format);
}

}  // namespace cliffmm
