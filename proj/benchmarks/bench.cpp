#include <benchmark/benchmark.h>

#include "catk/kernel.hpp"
#include "catk/quiver.hpp"
#include "catk/smc.hpp"

using namespace catk;

namespace {

FinCategory divisor_poset(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<ObjId> objects;
  for (int d : divs) objects.push_back(std::to_string(d));
  auto mname = [](int a, int b) {
    return "m_" + std::to_string(a) + "_" + std::to_string(b);
  };
  std::vector<MorDecl> mors;
  for (int a : divs)
    for (int b : divs)
      if (a != b && b % a == 0)
        mors.push_back({mname(a, b), std::to_string(a), std::to_string(b)});
  std::vector<std::array<std::string, 3>> comp;
  for (int a : divs)
    for (int b : divs)
      for (int c : divs)
        if (a != b && b != c && a != c && b % a == 0 && c % b == 0)
          comp.push_back({mname(a, b), mname(b, c), mname(a, c)});
  return build_fin_category(objects, mors, comp);
}

void bm_check_category_laws(benchmark::State& state) {
  FinCategory cat = divisor_poset(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_category_laws(cat).ok());
}
BENCHMARK(bm_check_category_laws)->Arg(12)->Arg(30)->Arg(60);

void bm_hom_paths(benchmark::State& state) {
  Quiver q = build_quiver({"A", "B"}, {{"a", "A", "B"},
                                       {"b", "B", "A"},
                                       {"c", "A", "A"},
                                       {"d", "B", "B"}});
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hom_paths(q, "A", "A", len).size());
}
BENCHMARK(bm_hom_paths)->Arg(6)->Arg(10)->Arg(14);

void bm_enumerate_homs(benchmark::State& state) {
  Signature sig = build_signature({"x"}, {{"m", {"x", "x"}, {"x"}}});
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Word w(n, "x");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_homs(sig, w, w, 2).size());
}
BENCHMARK(bm_enumerate_homs)->Arg(3)->Arg(4)->Arg(5);

void bm_canonicalize(benchmark::State& state) {
  Signature sig = build_signature({"x"}, {{"m", {"x", "x"}, {"x"}}});
  // a bushy diagram: braid, merge twice, braid again
  Word x2{"x", "x"};
  Word x4{"x", "x", "x", "x"};
  Diagram m = generator_diagram(sig, "m");
  Diagram t = tensor_diagrams(sig, m, m);
  Diagram d = compose_diagrams(sig, symmetry_diagram(sig, x2, x2), t);
  d = compose_diagrams(sig, d, symmetry_diagram(sig, {"x"}, {"x"}));
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_serialization(sig, d).size());
}
BENCHMARK(bm_canonicalize);

}  // namespace

BENCHMARK_MAIN();
