// cliffmm command line front end: exact Clifford algebra Cl(m,m) with the
// extended Fock basis, plus the algebraic maximum-independent-set test.

#include "cliffmm/bench.hpp"
#include "cliffmm/efb.hpp"
#include "cliffmm/gamma.hpp"
#include "cliffmm/graph.hpp"
#include "cliffmm/spinor.hpp"
#include "cliffmm/transform.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>

namespace {

using namespace cliffmm;

// Tokens decide the basis: slot tokens (qp/pq/p/q) versus blade tokens (gN).
bool looks_like_efb(const std::string& expr) {
  const std::size_t star = expr.find('*');
  const std::string body = (star == std::string::npos) ? expr : expr.substr(star + 1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == 'g') return false;
    if (body[i] == 'q' || body[i] == 'p') return true;
  }
  return false;
}

int run_mul(const std::string& lhs, const std::string& rhs, int m, bool count_mults) {
  MulCount count;
  if (looks_like_efb(lhs) != looks_like_efb(rhs))
    throw std::invalid_argument("operands use different bases");
  if (looks_like_efb(lhs)) {
    const EfbMultivector a = parse_efb(lhs, m);
    const EfbMultivector b = parse_efb(rhs, m);
    if (a.m() != b.m()) throw std::invalid_argument("m mismatch between operands");
    std::cout << to_string(mv_product(a, b, &count)) << "\n";
  } else {
    const GammaMultivector a = parse_gamma(lhs, m);
    const GammaMultivector b = parse_gamma(rhs, m);
    if (a.m() != b.m()) throw std::invalid_argument("m mismatch between operands");
    std::cout << to_string(mv_product(a, b, &count)) << "\n";
  }
  if (count_mults) std::cout << "mults = " << count.mults << "\n";
  return 0;
}

int run_convert(const std::string& expr, int m) {
  if (looks_like_efb(expr)) {
    std::cout << to_string(efb_to_gamma(parse_efb(expr, m))) << "\n";
  } else {
    std::cout << to_string(gamma_to_efb(parse_gamma(expr, m))) << "\n";
  }
  return 0;
}

void print_sets(const std::set<std::vector<int>>& sets) {
  for (const std::vector<int>& s : sets) {
    std::cout << "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << s[i];
    }
    std::cout << "}\n";
  }
}

int run_mis(const std::string& path, const std::string& format, int m, bool complement,
            int max_k, bool clique_names) {
  Graph g = read_graph_file(path, format, m);
  if (complement || clique_names) g = g.complement();

  const int cap = (max_k > 0) ? std::min(max_k, g.m()) : g.m();
  int alpha = 0;
  bool capped = false;
  {
    EfbMultivector acc = big_o(g);
    const EfbMultivector o = acc;
    while (!acc.is_zero() && alpha < cap) {
      ++alpha;
      if (alpha < cap) acc = mv_product(acc, o);
    }
    capped = !acc.is_zero() && cap < g.m();  // search stopped by --max-k
  }
  const char* name = clique_names ? "omega" : "alpha";
  if (capped)
    std::cout << name << " >= " << alpha << " (search capped at k = " << cap << ")\n";
  else
    std::cout << name << " = " << alpha << "\n";
  if (alpha > 0) print_sets(extract_independent_sets(g, alpha));
  return 0;
}

int run_tables(bool slot_table, int hadamard_m, int perm_m) {
  if (slot_table) {
    constexpr EfbSymbol all[] = {EfbSymbol::QP, EfbSymbol::PQ, EfbSymbol::P, EfbSymbol::Q};
    std::cout << "      ";
    for (EfbSymbol b : all) std::cout << "\t" << symbol_token(b);
    std::cout << "\n";
    for (EfbSymbol a : all) {
      std::cout << symbol_token(a);
      for (EfbSymbol b : all) {
        const auto r = slot_product(a, b);
        std::cout << "\t" << (r ? symbol_token(*r) : "0");
      }
      std::cout << "\n";
    }
  }
  if (hadamard_m > 0) std::cout << hadamard(hadamard_m).dump();
  if (perm_m > 0) std::cout << perm(perm_m).dump();
  return 0;
}

int run_bench(int m, std::uint64_t seed) {
  const BenchReport r = dense_product_counts(m, seed);
  std::cout << render_text(r) << "\n" << render_key_values(r);
  return 0;
}

// Cross-basis sweep: products computed in the EFB agree with the gamma path
// exactly.  Exhaustive over basis pairs when feasible, then random sparse
// multivector pairs.
int run_verify(int m, std::uint64_t seed, int samples) {
  std::uint64_t checked = 0;

  if (m <= 3) {
    const std::uint64_t n = std::uint64_t{1} << (2 * m);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        const EfbMultivector a = EfbMultivector::element(m, i);
        const EfbMultivector b = EfbMultivector::element(m, j);
        const GammaMultivector via_gamma = mv_product(efb_to_gamma(a), efb_to_gamma(b));
        if (efb_to_gamma(mv_product(a, b)) != via_gamma) {
          std::cerr << "mismatch on basis pair " << i << ", " << j << "\n";
          return 1;
        }
        ++checked;
      }
    }
    std::cout << "basis pairs checked: " << checked << "\n";
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-8, 8);
  std::uniform_int_distribution<std::uint64_t> code(0, (std::uint64_t{1} << (2 * m)) - 1);
  auto random_sparse = [&] {
    EfbMultivector a(m);
    const int terms = 1 + static_cast<int>(rng() % (std::uint64_t{1} << m));
    for (int t = 0; t < terms; ++t) a.add_term(code(rng), Dyadic(coef(rng)));
    return a;
  };
  for (int s = 0; s < samples; ++s) {
    const EfbMultivector a = random_sparse();
    const EfbMultivector b = random_sparse();
    const GammaMultivector via_gamma = mv_product(efb_to_gamma(a), efb_to_gamma(b));
    if (efb_to_gamma(mv_product(a, b)) != via_gamma) {
      std::cerr << "mismatch on random sparse pair, sample " << s << "\n";
      return 1;
    }
    // round trip on the way
    if (gamma_to_efb(efb_to_gamma(a)) != a) {
      std::cerr << "round trip failure, sample " << s << "\n";
      return 1;
    }
  }
  std::cout << "random sparse pairs checked: " << samples << "\n";
  std::cout << "verify ok (m = " << m << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clifford algebra Cl(m,m): extended Fock basis products, basis "
               "conversion, and the algebraic independent-set test"};
  app.require_subcommand(1);

  int m = 0;
  std::string format = "dimacs";
  bool complement = false;
  std::uint64_t seed = 0;
  int max_k = 0;
  bool count_mults = false;

  // mul
  auto* mul_cmd = app.add_subcommand("mul", "multiply two multivector expressions");
  std::string lhs, rhs;
  mul_cmd->add_option("lhs", lhs, "left expression")->required();
  mul_cmd->add_option("rhs", rhs, "right expression")->required();
  mul_cmd->add_option("--m", m, "number of generator pairs (default: inferred)");
  mul_cmd->add_flag("--count-mults", count_mults, "print the multiplication count");

  // convert
  auto* conv_cmd = app.add_subcommand("convert", "convert between the bases");
  std::string conv_expr;
  conv_cmd->add_option("expr", conv_expr, "expression to convert")->required();
  conv_cmd->add_option("--m", m, "number of generator pairs (default: inferred)");

  // mis
  auto* mis_cmd = app.add_subcommand("mis", "independence number and maximum sets");
  std::string graph_path;
  mis_cmd->add_option("graph", graph_path, "graph file")->required();
  mis_cmd->add_option("--format", format, "dimacs or edgelist")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  mis_cmd->add_option("--m", m, "vertex count override for edge lists");
  mis_cmd->add_flag("--complement", complement, "work on the complement graph");
  mis_cmd->add_option("--max-k", max_k, "cap the power search");

  // clique
  auto* clique_cmd = app.add_subcommand("clique", "clique number via the complement");
  std::string clique_path;
  clique_cmd->add_option("graph", clique_path, "graph file")->required();
  clique_cmd->add_option("--format", format, "dimacs or edgelist")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  clique_cmd->add_option("--m", m, "vertex count override for edge lists");
  clique_cmd->add_option("--max-k", max_k, "cap the power search");

  // tables
  auto* tables_cmd = app.add_subcommand("tables", "dump the slot table or a matrix");
  bool slot_table = false;
  int hadamard_m = 0, perm_m = 0;
  tables_cmd->add_flag("--slot-table", slot_table, "the 4x4 single-slot product table");
  tables_cmd->add_option("--hadamard", hadamard_m, "dump H_m for this m");
  tables_cmd->add_option("--perm", perm_m, "dump P_m for this m");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "multiplication count report");
  int bench_m = 2;
  bench_cmd->add_option("--m", bench_m, "number of generator pairs");
  bench_cmd->add_option("--seed", seed, "random seed");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "cross-basis product sweep");
  int verify_m = 3;
  int samples = 100;
  verify_cmd->add_option("--m", verify_m, "number of generator pairs");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--samples", samples, "random sparse pairs to check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mul_cmd->parsed()) return run_mul(lhs, rhs, m, count_mults);
    if (conv_cmd->parsed()) return run_convert(conv_expr, m);
    if (mis_cmd->parsed()) return run_mis(graph_path, format, m, complement, max_k, false);
    if (clique_cmd->parsed()) return run_mis(clique_path, format, m, false, max_k, true);
    if (tables_cmd->parsed()) return run_tables(slot_table, hadamard_m, perm_m);
    if (bench_cmd->parsed()) return run_bench(bench_m, seed);
    if (verify_cmd->parsed()) return run_verify(verify_m, seed, samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
