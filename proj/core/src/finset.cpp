#include "catk/finset.hpp"

#include <algorithm>
#include <string>

namespace catk {

FinFunction fin_identity(std::size_t n) {
  FinFunction f{n, n, {}};
  f.table.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.table[i] = i;
  return f;
}

FinFunction fin_compose(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.dom)
    fail(errc::compose_domain_mismatch,
         "cod " + std::to_string(f.cod) + " vs dom " + std::to_string(g.dom));
  FinFunction h{f.dom, g.cod, {}};
  h.table.resize(f.dom);
  for (std::size_t i = 0; i < f.dom; ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

std::vector<FinFunction> enumerate_fin_functions(std::size_t m, std::size_t n) {
  std::vector<FinFunction> out;
  if (n == 0) {
    if (m == 0) out.push_back(FinFunction{0, 0, {}});
    return out;
  }
  FinFunction f{m, n, std::vector<std::size_t>(m, 0)};
  while (true) {
    out.push_back(f);
    std::size_t k = m;
    while (k > 0) {
      --k;
      if (++f.table[k] < n) break;
      f.table[k] = 0;
      if (k == 0) return out;
    }
    if (m == 0) return out;
  }
}

// ---- FinSetView -----------------------------------------------------------

static bool parse_size(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  out = v;
  return true;
}

ViewMor FinSetView::to_mor(const FinFunction& f) {
  std::string repr =
      std::to_string(f.dom) + ">" + std::to_string(f.cod) + ":";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) repr += ",";
    repr += std::to_string(f.table[i]);
  }
  return ViewMor{std::to_string(f.dom), std::to_string(f.cod), repr};
}

FinFunction FinSetView::to_function(const ViewMor& m) {
  FinFunction f;
  auto gt = m.repr.find('>');
  auto colon = m.repr.find(':');
  if (gt == std::string::npos || colon == std::string::npos || colon < gt)
    fail(errc::compose_domain_mismatch, "malformed function repr " + m.repr);
  if (!parse_size(m.repr.substr(0, gt), f.dom) ||
      !parse_size(m.repr.substr(gt + 1, colon - gt - 1), f.cod))
    fail(errc::compose_domain_mismatch, "malformed function repr " + m.repr);
  std::size_t pos = colon + 1;
  while (pos < m.repr.size()) {
    auto comma = m.repr.find(',', pos);
    if (comma == std::string::npos) comma = m.repr.size();
    std::size_t v = 0;
    if (!parse_size(m.repr.substr(pos, comma - pos), v))
      fail(errc::compose_domain_mismatch, "malformed function repr " + m.repr);
    f.table.push_back(v);
    pos = comma + 1;
  }
  return f;
}

bool FinSetView::has_object(const ObjId& a) const {
  std::size_t n;
  return parse_size(a, n);
}

std::vector<ObjId> FinSetView::objects(std::size_t bound) const {
  std::vector<ObjId> out;
  for (std::size_t n = 0; n <= bound; ++n) out.push_back(std::to_string(n));
  return out;
}

ViewMor FinSetView::identity_of(const ObjId& a) const {
  std::size_t n;
  if (!parse_size(a, n)) fail(errc::unknown_object, a + " is not a size");
  return to_mor(fin_identity(n));
}

ViewMor FinSetView::compose(const ViewMor& f, const ViewMor& g) const {
  return to_mor(fin_compose(to_function(f), to_function(g)));
}

std::vector<ViewMor> FinSetView::hom(const ObjId& a, const ObjId& b,
                                     std::size_t) const {
  std::size_t m, n;
  if (!parse_size(a, m) || !parse_size(b, n))
    fail(errc::unknown_object, "hom between non-sizes");
  if (m > enum_cap_ || n > enum_cap_)
    fail(errc::cap_exceeded, "hom enumeration above the size cap");
  std::vector<ViewMor> out;
  for (const FinFunction& f : enumerate_fin_functions(m, n))
    out.push_back(to_mor(f));
  return out;
}

std::unique_ptr<CategoryView> finset_category(std::size_t enum_cap) {
  return std::make_unique<FinSetView>(enum_cap);
}

// ---- Cartesian monoidal structure ----------------------------------------

FinFunction FinSetMonoidal::tensor_mor(const FinFunction& f,
                                       const FinFunction& g) const {
  FinFunction h{f.dom * g.dom, f.cod * g.cod, {}};
  h.table.resize(h.dom);
  for (std::size_t i = 0; i < f.dom; ++i)
    for (std::size_t j = 0; j < g.dom; ++j)
      h.table[i * g.dom + j] = f.table[i] * g.cod + g.table[j];
  return h;
}

FinFunction FinSetMonoidal::associator(std::size_t m, std::size_t n,
                                       std::size_t p) const {
  // (i*n + j)*p + k == i*(n*p) + (j*p + k)
  return fin_identity(m * n * p);
}

FinFunction FinSetMonoidal::unitor_l(std::size_t m) const {
  return fin_identity(m);
}

FinFunction FinSetMonoidal::unitor_r(std::size_t m) const {
  return fin_identity(m);
}

FinFunction FinSetMonoidal::braiding(std::size_t m, std::size_t n) const {
  FinFunction b{m * n, n * m, {}};
  b.table.resize(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.table[i * n + j] = j * m + i;
  return b;
}

FinSetMonoidal finset_products_monoidal(std::size_t size_cap) {
  if (size_cap < 1) fail(errc::cap_exceeded, "size cap must be at least 1");
  std::size_t instances = 1;
  for (int i = 0; i < 4; ++i) {
    instances *= (size_cap + 1);
    if (instances > instance_budget())
      fail(errc::cap_exceeded, "coherence sweep exceeds the instance budget");
  }
  return FinSetMonoidal{size_cap};
}

LawReport check_finset_monoidal(const FinSetMonoidal& M) {
  LawReport report;
  const std::size_t cap = M.size_cap;

  auto fname = [](const FinFunction& f) { return FinSetView::to_mor(f).repr; };

  // Interchange (bifunctoriality) over all composable function pairs.
  for (std::size_t a = 0; a <= cap; ++a)
    for (std::size_t b = 0; b <= cap; ++b)
      for (std::size_t c = 0; c <= cap; ++c)
        for (std::size_t d = 0; d <= cap; ++d)
          for (std::size_t e = 0; e <= cap; ++e)
            for (std::size_t h = 0; h <= cap; ++h)
              for (const FinFunction& f : enumerate_fin_functions(a, b))
                for (const FinFunction& f2 : enumerate_fin_functions(b, c))
                  for (const FinFunction& g : enumerate_fin_functions(d, e))
                    for (const FinFunction& g2 : enumerate_fin_functions(e, h)) {
                      FinFunction lhs = fin_compose(M.tensor_mor(f, g),
                                                    M.tensor_mor(f2, g2));
                      FinFunction rhs =
                          M.tensor_mor(fin_compose(f, f2), fin_compose(g, g2));
                      if (!(lhs == rhs))
                        report.add("bifunctor",
                                   {fname(f), fname(g), fname(f2), fname(g2)},
                                   "interchange fails pointwise");
                    }

  // Identity preservation of the tensor.
  for (std::size_t a = 0; a <= cap; ++a)
    for (std::size_t b = 0; b <= cap; ++b)
      if (!(M.tensor_mor(fin_identity(a), fin_identity(b)) ==
            fin_identity(a * b)))
        report.add("bifunctor", {std::to_string(a), std::to_string(b)},
                   "tensor of identities is not the identity");

  // Naturality of associator, unitors, braiding.
  for (std::size_t a = 0; a <= cap; ++a)
    for (std::size_t a2 = 0; a2 <= cap; ++a2)
      for (std::size_t b = 0; b <= cap; ++b)
        for (std::size_t b2 = 0; b2 <= cap; ++b2)
          for (const FinFunction& f : enumerate_fin_functions(a, a2))
            for (const FinFunction& g : enumerate_fin_functions(b, b2)) {
              FinFunction lhs =
                  fin_compose(M.tensor_mor(f, g), M.braiding(a2, b2));
              FinFunction rhs =
                  fin_compose(M.braiding(a, b), M.tensor_mor(g, f));
              if (!(lhs == rhs))
                report.add("naturality", {fname(f), fname(g)},
                           "braiding is not natural");
              for (std::size_t c = 0; c <= cap; ++c)
                for (std::size_t c2 = 0; c2 <= cap; ++c2)
                  for (const FinFunction& h : enumerate_fin_functions(c, c2)) {
                    FinFunction l = fin_compose(
                        M.tensor_mor(M.tensor_mor(f, g), h),
                        M.associator(a2, b2, c2));
                    FinFunction r = fin_compose(
                        M.associator(a, b, c),
                        M.tensor_mor(f, M.tensor_mor(g, h)));
                    if (!(l == r))
                      report.add("naturality", {fname(f), fname(g), fname(h)},
                                 "associator is not natural");
                  }
            }
  for (std::size_t a = 0; a <= cap; ++a)
    for (std::size_t a2 = 0; a2 <= cap; ++a2)
      for (const FinFunction& f : enumerate_fin_functions(a, a2)) {
        FinFunction l = fin_compose(M.tensor_mor(fin_identity(1), f),
                                    M.unitor_l(a2));
        FinFunction r = fin_compose(M.unitor_l(a), f);
        if (!(l == r)) report.add("naturality", {fname(f)}, "left unitor not natural");
        l = fin_compose(M.tensor_mor(f, fin_identity(1)), M.unitor_r(a2));
        r = fin_compose(M.unitor_r(a), f);
        if (!(l == r)) report.add("naturality", {fname(f)}, "right unitor not natural");
      }

  // Pentagon, triangle, hexagons, symmetry over object tuples.
  for (std::size_t a = 0; a <= cap; ++a)
    for (std::size_t b = 0; b <= cap; ++b) {
      FinFunction tri_l = fin_compose(
          M.associator(a, 1, b),
          M.tensor_mor(fin_identity(a), M.unitor_l(b)));
      FinFunction tri_r = M.tensor_mor(M.unitor_r(a), fin_identity(b));
      if (!(tri_l == tri_r))
        report.add("triangle", {std::to_string(a), std::to_string(b)},
                   "triangle fails pointwise");
      FinFunction sym = fin_compose(M.braiding(a, b), M.braiding(b, a));
      if (!(sym == fin_identity(a * b)))
        report.add("symmetry", {std::to_string(a), std::to_string(b)},
                   "braiding does not square to the identity");
      for (std::size_t c = 0; c <= cap; ++c) {
        FinFunction h1l = fin_compose(
            fin_compose(M.associator(a, b, c), M.braiding(a, b * c)),
            M.associator(b, c, a));
        FinFunction h1r = fin_compose(
            fin_compose(M.tensor_mor(M.braiding(a, b), fin_identity(c)),
                        M.associator(b, a, c)),
            M.tensor_mor(fin_identity(b), M.braiding(a, c)));
        if (!(h1l == h1r))
          report.add("hexagon",
                     {std::to_string(a), std::to_string(b), std::to_string(c)},
                     "first hexagon fails pointwise");
        FinFunction h2l = fin_compose(
            fin_compose(M.associator(a, b, c), M.braiding(a * b, c)),
            M.associator(c, a, b));
        FinFunction h2r = fin_compose(
            fin_compose(M.tensor_mor(fin_identity(a), M.braiding(b, c)),
                        M.associator(a, c, b)),
            M.tensor_mor(M.braiding(a, c), fin_identity(b)));
        if (!(h2l == h2r))
          report.add("hexagon",
                     {std::to_string(a), std::to_string(b), std::to_string(c)},
                     "second hexagon fails pointwise");
        for (std::size_t d = 0; d <= cap; ++d) {
          FinFunction lhs = fin_compose(
              fin_compose(M.tensor_mor(M.associator(a, b, c), fin_identity(d)),
                          M.associator(a, b * c, d)),
              M.tensor_mor(fin_identity(a), M.associator(b, c, d)));
          FinFunction rhs = fin_compose(M.associator(a * b, c, d),
                                        M.associator(a, b, c * d));
          if (!(lhs == rhs))
            report.add("pentagon",
                       {std::to_string(a), std::to_string(b),
                        std::to_string(c), std::to_string(d)},
                       "pentagon fails pointwise");
        }
      }
    }
  return report;
}

FinFunction evaluate_free_functor(
    const Quiver& q, const std::map<ObjId, std::size_t>& node_sizes,
    const std::map<std::string, FinFunction>& edge_tables, const Path& p) {
  for (const ObjId& n : q.nodes())
    if (!node_sizes.count(n))
      fail(errc::ill_typed_edge_image, "no size assigned to node " + n);
  for (const Edge& e : q.edges()) {
    auto it = edge_tables.find(e.name);
    if (it == edge_tables.end())
      fail(errc::ill_typed_edge_image, "no table assigned to edge " + e.name);
    if (it->second.dom != node_sizes.at(e.src) ||
        it->second.cod != node_sizes.at(e.tgt) ||
        std::any_of(it->second.table.begin(), it->second.table.end(),
                    [&](std::size_t v) { return v >= it->second.cod; }))
      fail(errc::ill_typed_edge_image, "table for edge " + e.name +
                                           " does not match the node sizes");
  }
  if (!q.has_node(p.anchor))
    fail(errc::not_a_path, "path anchored at unknown node " + p.anchor);
  FinFunction acc = fin_identity(node_sizes.at(p.anchor));
  ObjId at = p.anchor;
  for (const std::string& step : p.steps) {
    if (!q.has_edge(step)) fail(errc::not_a_path, "unknown edge " + step);
    const Edge& e = q.edge(step);
    if (e.src != at) fail(errc::not_a_path, "steps are not composable");
    acc = fin_compose(acc, edge_tables.at(step));
    at = e.tgt;
  }
  return acc;
}

}  // namespace catk
