#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "catk/kernel.hpp"
#include "catk/monoidal.hpp"
#include "catk/quiver.hpp"
#include "catk/smc.hpp"

namespace fixtures {

using namespace catk;

inline FinCategory trivial() { return build_fin_category({"star"}, {}, {}); }

inline FinCategory walking_arrow() {
  return build_fin_category({"A", "B"}, {{"f", "A", "B"}}, {});
}

inline FinCategory z2() {
  return build_fin_category({"S"}, {{"s", "S", "S"}}, {{{"s", "s", "id_S"}}});
}

inline FinCategory discrete2() {
  return build_fin_category({"P", "Q"}, {}, {});
}

inline FinCategory parallel_pair() {
  return build_fin_category({"A", "B"}, {{"u", "A", "B"}, {"v", "A", "B"}}, {});
}

// S3 as a one-object category, built from the actual permutations so the
// table is computed, not transcribed.
inline FinCategory s3() {
  using Perm = std::array<int, 3>;
  std::vector<std::pair<std::string, Perm>> elems = {
      {"e", {0, 1, 2}},   {"r1", {1, 2, 0}},  {"r2", {2, 0, 1}},
      {"s01", {1, 0, 2}}, {"s02", {2, 1, 0}}, {"s12", {0, 2, 1}}};
  auto name_of = [&](const Perm& p) {
    for (const auto& [n, q] : elems)
      if (q == p) return n;
    throw std::logic_error("not a permutation of 3");
  };
  std::vector<MorDecl> mors;
  for (const auto& [n, p] : elems)
    if (n != "e") mors.push_back({n, "G", "G"});
  std::vector<std::array<std::string, 3>> comp;
  for (const auto& [n1, p1] : elems)
    for (const auto& [n2, p2] : elems) {
      if (n1 == "e" || n2 == "e") continue;
      // diagrammatic: first p1, then p2
      Perm r{p2[p1[0]], p2[p1[1]], p2[p1[2]]};
      std::string rn = name_of(r);
      comp.push_back({n1, n2, rn == "e" ? "id_G" : rn});
    }
  return build_fin_category({"G"}, mors, comp);
}

// Divisor poset of n: one morphism a -> b exactly when a divides b.
inline FinCategory divisor_poset(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<ObjId> objects;
  for (int d : divs) objects.push_back(std::to_string(d));
  std::vector<MorDecl> mors;
  auto mname = [](int a, int b) {
    return "m_" + std::to_string(a) + "_" + std::to_string(b);
  };
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

inline FinCategory arrow_square() {
  FinCategory arrow = walking_arrow();
  return product_category(arrow, arrow);
}

// Two nodes with one edge each way; free category has countably many
// endo-paths.
inline Quiver ab_quiver() {
  return build_quiver({"A", "B"}, {{"a", "A", "B"}, {"b", "B", "A"}});
}

inline Signature merge_signature() {
  return build_signature({"x"}, {{"m", {"x", "x"}, {"x"}}});
}

inline Signature object_only_signature() { return build_signature({"x"}, {}); }

}  // namespace fixtures
