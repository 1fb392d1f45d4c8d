// Acceptance gate: one criterion per invocation, one [PASS]/[FAIL] line
// each. Exit 0 when the criterion holds exactly, 1 otherwise.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catk/dsl.hpp"
#include "catk/finset.hpp"
#include "catk/functor.hpp"
#include "catk/kernel.hpp"
#include "catk/monoidal.hpp"
#include "catk/quiver.hpp"
#include "catk/smc.hpp"
#include "catk/universal.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catk;

namespace {

struct Gate {
  int criterion;
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }

  int finish(const std::string& title) {
    if (ok) {
      std::cout << "[PASS] criterion " << criterion << ": " << title << "\n";
      return 0;
    }
    std::cout << "[FAIL] criterion " << criterion << ": " << title << "\n";
    for (const std::string& f : failures) std::cout << "       " << f << "\n";
    return 1;
  }
};

// ---- 1: law checker soundness and completeness -----------------------------

int criterion1() {
  Gate g{1};
  struct Named {
    std::string name;
    FinCategory cat;
  };
  std::vector<Named> fixtures_list;
  fixtures_list.push_back({"trivial", fixtures::trivial()});
  fixtures_list.push_back({"walking_arrow", fixtures::walking_arrow()});
  fixtures_list.push_back({"z2", fixtures::z2()});
  fixtures_list.push_back({"s3", fixtures::s3()});
  fixtures_list.push_back({"div12", fixtures::divisor_poset(12)});
  fixtures_list.push_back({"div30", fixtures::divisor_poset(30)});
  fixtures_list.push_back({"arrow_square", fixtures::arrow_square()});

  for (const Named& fx : fixtures_list)
    g.require(check_category_laws(fx.cat).ok(),
              fx.name + " should satisfy the laws");

  // completeness: mutate each composition entry of every fixture with at
  // least two parallel morphisms and demand a violation
  for (const Named& fx : fixtures_list) {
    bool has_parallel = false;
    for (const ObjId& a : fx.cat.objects())
      for (const ObjId& b : fx.cat.objects())
        if (fx.cat.hom(a, b).size() >= 2) has_parallel = true;
    if (!has_parallel) continue;
    for (const auto& [pair, h] : fx.cat.comp_table()) {
      const MorDecl& f = fx.cat.mor(pair.first);
      const MorDecl& gm = fx.cat.mor(pair.second);
      for (const std::string& other : fx.cat.hom(f.src, gm.tgt)) {
        if (other == h) continue;
        FinCategory mutant =
            fx.cat.with_comp_entry(pair.first, pair.second, other);
        g.require(!check_category_laws(mutant).ok(),
                  fx.name + ": mutation " + pair.first + ";" + pair.second +
                      " = " + other + " went undetected");
      }
    }
  }
  return g.finish("law-checker soundness/completeness");
}

// ---- 2: free category vs adjacency-matrix oracle ---------------------------

int criterion2() {
  Gate g{2};
  std::mt19937 rng(20260825);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t n_nodes = 2 + rng() % 3;  // 2..4
    std::vector<ObjId> nodes;
    for (std::size_t i = 0; i < n_nodes; ++i)
      nodes.push_back("n" + std::to_string(i));
    std::size_t n_edges = 1 + rng() % 6;  // 1..6
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n_edges; ++i)
      edges.push_back({"e" + std::to_string(i),
                       nodes[rng() % n_nodes],
                       nodes[rng() % n_nodes]});
    Quiver q = build_quiver(nodes, edges);
    std::size_t max_len = 1 + rng() % 6;  // 1..6
    for (const ObjId& a : nodes)
      for (const ObjId& b : nodes) {
        auto got = hom_paths(q, a, b, max_len).size();
        auto want = oracles::path_count_matrix(q, a, b, max_len);
        g.require(got == want,
                  "trial " + std::to_string(trial) + " hom(" + a + "," + b +
                      ") = " + std::to_string(got) + ", oracle says " +
                      std::to_string(want));
      }
  }
  return g.finish("free-category oracle equivalence");
}

// ---- 3: functor enumeration oracle -----------------------------------------

int criterion3() {
  Gate g{3};
  std::vector<std::pair<std::string, FinCategory>> cats;
  cats.emplace_back("trivial", fixtures::trivial());
  cats.emplace_back("walking_arrow", fixtures::walking_arrow());
  cats.emplace_back("z2", fixtures::z2());
  cats.emplace_back("s3", fixtures::s3());
  cats.emplace_back("discrete2", fixtures::discrete2());
  cats.emplace_back("parallel_pair", fixtures::parallel_pair());
  for (const auto& [cn, C] : cats)
    for (const auto& [dn, D] : cats) {
      if (C.objects().size() > 3 || D.objects().size() > 3) continue;
      auto got = enumerate_functors(C, D).size();
      auto want = oracles::brute_force_functor_count(C, D);
      g.require(got == want, cn + " -> " + dn + ": " + std::to_string(got) +
                                 " vs oracle " + std::to_string(want));
    }
  FinCategory arrow = fixtures::walking_arrow();
  g.require(enumerate_functors(arrow, arrow).size() == 3,
            "walking-arrow endofunctor count should be 3");
  return g.finish("functor enumeration oracle");
}

// ---- 4: Cat laws -----------------------------------------------------------

int criterion4() {
  Gate g{4};
  FinCategory t = fixtures::trivial();
  FinCategory arrow = fixtures::walking_arrow();
  FinCategory z2 = fixtures::z2();
  std::vector<const FinCategory*> cats{&t, &arrow, &z2};
  CatCategory C = cat_category(cats);
  g.require(check_category_laws(C.cat).ok(), "Cat should satisfy the laws");
  for (std::size_t i = 0; i < cats.size(); ++i)
    for (std::size_t j = 0; j < cats.size(); ++j) {
      auto got = C.cat.hom(C.object_names[i], C.object_names[j]).size();
      auto want = enumerate_functors(*cats[i], *cats[j]).size();
      g.require(got == want,
                "hom(C" + std::to_string(i) + ",C" + std::to_string(j) +
                    ") = " + std::to_string(got) + ", enumeration says " +
                    std::to_string(want));
    }
  return g.finish("Cat at desk scale");
}

// ---- 5: universal objects in the divisor poset of 12 -----------------------

int criterion5() {
  Gate g{5};
  FinCategory d12 = fixtures::divisor_poset(12);

  auto ts = find_terminals(d12);
  g.require(ts.size() == 1 && ts[0].object == "12", "terminal should be 12");
  auto is = find_initials(d12);
  g.require(is.size() == 1 && is[0].object == "1", "initial should be 1");

  auto p23 = find_products(d12, "2", "3");
  g.require(p23.size() == 1 && p23[0].apex == "1", "product(2,3) should be 1");
  auto p46 = find_products(d12, "4", "6");
  g.require(p46.size() == 1 && p46[0].apex == "2", "product(4,6) should be 2");
  auto c23 = find_coproducts(d12, "2", "3");
  g.require(c23.size() == 1 && c23[0].apex == "6", "coproduct(2,3) should be 6");

  FinCategory op = opposite_category(d12);
  auto op_ts = find_terminals(op);
  g.require(op_ts.size() == 1 && op_ts[0].object == "1",
            "terminal of the opposite should be 1");
  auto op_p = find_products(op, "2", "3");
  g.require(op_p.size() == 1 && op_p[0].apex == "6",
            "product(2,3) in the opposite should be 6");
  auto op_c = find_coproducts(op, "4", "6");
  g.require(op_c.size() == 1 && op_c[0].apex == "2",
            "coproduct(4,6) in the opposite should be 2");
  return g.finish("universal objects by exhaustive search and duality");
}

// ---- 6: products induce a coherent symmetric structure ---------------------

int criterion6() {
  Gate g{6};
  for (int n : {12, 30}) {
    auto cat = std::make_shared<FinCategory>(fixtures::divisor_poset(n));
    auto terminals = find_terminals(*cat);
    if (terminals.empty()) {
      g.require(false, "no terminal in divisor poset " + std::to_string(n));
      continue;
    }
    ProductChooser chooser = first_product_chooser(*cat);
    MonoidalStructure M =
        monoidal_from_products(cat, chooser, terminals.front());
    LawReport mon = check_monoidal_structure(M);
    g.require(mon.ok(), "poset " + std::to_string(n) + ": " +
                            std::to_string(mon.violations.size()) +
                            " monoidal violations");
    LawReport sym =
        check_symmetric_structure(M, symmetry_from_products(M, chooser));
    g.require(sym.ok(), "poset " + std::to_string(n) + ": " +
                            std::to_string(sym.violations.size()) +
                            " symmetry violations");
  }
  return g.finish("products imply monoidal coherence");
}

// ---- 7: finite sets --------------------------------------------------------

int criterion7() {
  Gate g{7};
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      for (const FinFunction& f : enumerate_fin_functions(m, n)) {
        g.require(fin_compose(fin_identity(m), f) == f, "left identity");
        g.require(fin_compose(f, fin_identity(n)) == f, "right identity");
        for (std::size_t p = 0; p <= 3; ++p)
          for (const FinFunction& h : enumerate_fin_functions(n, p))
            for (const FinFunction& k : enumerate_fin_functions(p, 3))
              g.require(fin_compose(fin_compose(f, h), k) ==
                            fin_compose(f, fin_compose(h, k)),
                        "associativity");
      }

  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      std::size_t want = 1;
      for (std::size_t i = 0; i < m; ++i) want *= n;
      g.require(enumerate_fin_functions(m, n).size() == want,
                "|hom(" + std::to_string(m) + "," + std::to_string(n) +
                    ")| should be " + std::to_string(want));
    }

  LawReport coherence = check_finset_monoidal(finset_products_monoidal(2));
  g.require(coherence.ok(),
            std::to_string(coherence.violations.size()) +
                " coherence violations at cap 2");

  Quiver q = fixtures::ab_quiver();
  std::map<ObjId, std::size_t> sizes{{"A", 2}, {"B", 2}};
  std::map<std::string, FinFunction> tables{{"a", {2, 2, {1, 0}}},
                                            {"b", {2, 2, {0, 1}}}};
  for (const ObjId& x : {"A", "B"})
    for (const ObjId& y : {"A", "B"})
      for (const Path& p : hom_paths(q, x, y, 4))
        for (const ObjId& z : {"A", "B"})
          for (const Path& r : hom_paths(q, y, z, 4))
            g.require(
                evaluate_free_functor(q, sizes, tables,
                                      path_compose(q, p, r)) ==
                    fin_compose(evaluate_free_functor(q, sizes, tables, p),
                                evaluate_free_functor(q, sizes, tables, r)),
                "functoriality at " + x + "," + y + "," + z);
  return g.finish("finite sets");
}

// ---- 8: free symmetric monoidal category -----------------------------------

int criterion8() {
  Gate g{8};
  Signature perm_sig = fixtures::object_only_signature();
  for (std::size_t n = 0; n <= 5; ++n) {
    Word w(n, "x");
    auto got = enumerate_homs(perm_sig, w, w, 0).size();
    auto want = oracles::brute_force_bijection_count(n);
    g.require(got == want, "|hom(x^" + std::to_string(n) + ")| = " +
                               std::to_string(got) + ", oracle says " +
                               std::to_string(want));
  }

  Signature sig = fixtures::merge_signature();
  LawReport sweep = check_free_smc_laws(sig, {2, 4});
  g.require(sweep.ok(), std::to_string(sweep.violations.size()) +
                            " law violations in the bounded sweep");

  std::vector<Word> words;
  for (std::size_t len = 0; len <= 4; ++len) words.push_back(Word(len, "x"));
  for (const Word& u : words)
    for (const Word& v : words)
      for (const Diagram& d : enumerate_homs(sig, u, v, 2)) {
        Diagram c = canonicalize(sig, d);
        g.require(canonical_records(sig, c) ==
                      canonical_records(sig, canonicalize(sig, c)),
                  "canonicalization not idempotent on a " +
                      std::to_string(d.boxes.size()) + "-box diagram");
      }
  return g.finish("free symmetric monoidal category");
}

// ---- 9: DSL and CLI --------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args, std::string* stdout_text = nullptr) {
  std::string tmp = "/tmp/catk_cli_out.tmp";
  std::string cmd = std::string(CATK_CLI_PATH) + " " + args + " > " + tmp +
                    " 2> /dev/null";
  int status = std::system(cmd.c_str());
  if (stdout_text) *stdout_text = slurp(tmp);
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

int criterion9() {
  Gate g{9};
  const std::string fx = FIXTURE_DIR;

  // round-trips
  for (const std::string& name :
       {"walking_arrow.cat", "z2.cat", "div12.cat", "div30.cat",
        "nonassoc.cat", "discrete2.cat", "ab.qv", "sig.sig",
        "arrow_to_z2.fun", "ab.asg"}) {
    auto kind = dsl::kind_from_extension(name);
    auto first = dsl::parse_document(slurp(fx + "/" + name), kind);
    if (!first.ok()) {
      g.require(false, name + " should parse");
      continue;
    }
    auto second = dsl::parse_document(dsl::print_document(*first.doc), kind);
    g.require(second.ok() && *first.doc == *second.doc,
              name + " should round-trip");
  }

  // documented JSON outputs, byte for byte
  struct JsonCase {
    std::string args;
    std::string expected;  // file under fixtures/expected/
  };
  std::vector<JsonCase> json_cases = {
      {"check " + fx + "/walking_arrow.cat --format json",
       "check_walking_arrow.json"},
      {"check " + fx + "/nonassoc.cat --format json", "check_nonassoc.json"},
      {"paths " + fx + "/ab.qv A A --max-len 4 --count --format json",
       "paths_count.json"},
      {"product " + fx + "/div12.cat 4 6 --format json",
       "product_div12.json"},
      {"terminal " + fx + "/div12.cat --format json", "terminal_div12.json"},
      {"free-eval " + fx + "/ab.qv " + fx + "/ab.asg A a,b --format json",
       "free_eval.json"},
      {"check-monoidal " + fx + "/div12.cat --format json",
       "check_monoidal_div12.json"},
      {"smc-equal " + fx + "/sig.sig \"sym(x,x) ; sym(x,x)\" \"id(x.x)\" "
       "--format json",
       "smc_equal.json"},
      {"functors " + fx + "/walking_arrow.cat " + fx +
           "/walking_arrow.cat --count --format json",
       "functors_count.json"},
  };
  for (const JsonCase& c : json_cases) {
    std::string got;
    run_cli(c.args, &got);
    std::string want = slurp(fx + "/expected/" + c.expected);
    g.require(!want.empty() && got == want,
              c.expected + " mismatch (got: " + got + ")");
  }

  // exit-code matrix
  struct ExitCase {
    std::string args;
    int code;
  };
  std::vector<ExitCase> exit_cases = {
      {"check " + fx + "/walking_arrow.cat", 0},
      {"paths " + fx + "/ab.qv A A --max-len 4 --count", 0},
      {"smc-equal " + fx + "/sig.sig \"sym(x,x) ; sym(x,x)\" \"id(x.x)\"", 0},
      {"check " + fx + "/nonassoc.cat", 1},
      {"terminal " + fx + "/discrete2.cat", 1},
      {"smc-equal " + fx + "/sig.sig \"sym(x,x)\" \"id(x.x)\"", 1},
      {"compose " + fx + "/div12.cat m_2_4 m_1_2", 1},
      {"check " + fx + "/bad_syntax.cat", 2},
      {"paths " + fx + "/bad_edge.qv A A", 2},
      {"check " + fx + "/no_such_file.cat", 2},
      {"definitely-not-a-verb", 2},
  };
  for (const ExitCase& c : exit_cases) {
    int got = run_cli(c.args);
    g.require(got == c.code, "`" + c.args + "` exited " +
                                 std::to_string(got) + ", expected " +
                                 std::to_string(c.code));
  }
  return g.finish("DSL round-trips, JSON outputs, exit codes");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1-9>\n";
    return 2;
  }
  switch (std::atoi(argv[1])) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
  }
  std::cerr << "usage: acceptance <criterion 1-9>\n";
  return 2;
}
