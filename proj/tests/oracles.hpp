#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catk/kernel.hpp"
#include "catk/quiver.hpp"

namespace oracles {

using namespace catk;

// Path counting by adjacency-matrix power sums: the number of paths a -> b
// of length exactly k is (A^k)[a][b], so hom counts up to max_len are the
// partial geometric sum. Independent of the enumerator in core.
inline unsigned long long path_count_matrix(const Quiver& q, const ObjId& a,
                                            const ObjId& b,
                                            std::size_t max_len) {
  const auto& nodes = q.nodes();
  const std::size_t n = nodes.size();
  std::map<ObjId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[nodes[i]] = i;
  std::vector<std::vector<unsigned long long>> adj(
      n, std::vector<unsigned long long>(n, 0));
  for (const Edge& e : q.edges()) adj[index.at(e.src)][index.at(e.tgt)]++;

  std::vector<std::vector<unsigned long long>> power(
      n, std::vector<unsigned long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;

  unsigned long long total = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len > 0) {
      std::vector<std::vector<unsigned long long>> next(
          n, std::vector<unsigned long long>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j)
            next[i][j] += power[i][k] * adj[k][j];
      power = std::move(next);
    }
    total += power[index.at(a)][index.at(b)];
  }
  return total;
}

// Functor counting by raw filtration: every object map times every total
// morphism map, kept when typed and law-abiding. No shared code with
// enumerate_functors beyond the category accessors.
inline std::size_t brute_force_functor_count(const FinCategory& C,
                                             const FinCategory& D) {
  const auto& cobjs = C.objects();
  const auto& dobjs = D.objects();
  const auto& cmors = C.morphisms();
  const auto& dmors = D.morphisms();

  std::size_t count = 0;
  std::vector<std::size_t> omap(cobjs.size(), 0);
  auto advance = [](std::vector<std::size_t>& idx, std::size_t base) {
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < base) return true;
      idx[k] = 0;
    }
    return false;
  };

  do {
    std::map<ObjId, ObjId> F0;
    for (std::size_t i = 0; i < cobjs.size(); ++i)
      F0[cobjs[i]] = dobjs[omap[i]];

    std::vector<std::size_t> mmap(cmors.size(), 0);
    if (cmors.empty()) {
      ++count;  // the unique (empty) morphism map
      continue;
    }
    do {
      std::map<std::string, std::string> F1;
      bool good = true;
      for (std::size_t i = 0; i < cmors.size() && good; ++i) {
        const MorDecl& m = cmors[i];
        const MorDecl& im = dmors[mmap[i]];
        if (im.src != F0[m.src] || im.tgt != F0[m.tgt]) good = false;
        F1[m.name] = im.name;
      }
      if (good)
        for (const ObjId& a : cobjs)
          if (F1[C.identity(a)] != D.identity(F0[a])) good = false;
      if (good)
        for (const auto& [pair, h] : C.comp_table())
          if (D.compose(F1[pair.first], F1[pair.second]) != F1[h]) {
            good = false;
            break;
          }
      if (good) ++count;
    } while (advance(mmap, dmors.size()));
  } while (!cobjs.empty() && advance(omap, dobjs.size()));

  return count;
}

// Bijection counting by raw filtration over all n^n assignments.
inline unsigned long long brute_force_bijection_count(std::size_t n) {
  if (n == 0) return 1;
  std::vector<std::size_t> f(n, 0);
  unsigned long long count = 0;
  while (true) {
    std::set<std::size_t> image(f.begin(), f.end());
    if (image.size() == n) ++count;
    std::size_t k = n;
    bool advanced = false;
    while (k-- > 0) {
      if (++f[k] < n) {
        advanced = true;
        break;
      }
      f[k] = 0;
    }
    if (!advanced) return count;
  }
}

// Pointwise composite of tabulated functions, written directly.
inline std::vector<std::size_t> pointwise_composite(
    const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  std::vector<std::size_t> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

}  // namespace oracles
