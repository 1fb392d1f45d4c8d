#include "catk/quiver.hpp"

#include <algorithm>
#include <set>

namespace catk {

bool Quiver::has_node(const ObjId& n) const {
  return std::find(nodes_.begin(), nodes_.end(), n) != nodes_.end();
}

bool Quiver::has_edge(const std::string& name) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return e.name == name; });
}

const Edge& Quiver::edge(const std::string& name) const {
  for (const Edge& e : edges_)
    if (e.name == name) return e;
  fail(errc::not_a_path, "no edge named " + name);
}

Quiver build_quiver(const std::vector<ObjId>& nodes,
                    const std::vector<Edge>& edges) {
  Quiver q;
  std::set<ObjId> seen;
  for (const ObjId& n : nodes) {
    if (n.empty()) fail(errc::unknown_node, "empty node name");
    if (!seen.insert(n).second)
      fail(errc::unknown_node, "node " + n + " declared twice");
    q.nodes_.push_back(n);
  }
  std::set<std::string> names;
  for (const Edge& e : edges) {
    if (!names.insert(e.name).second)
      fail(errc::duplicate_edge_name, "edge " + e.name + " declared twice");
    if (!seen.count(e.src))
      fail(errc::unknown_node, "edge " + e.name + " has unknown source " + e.src);
    if (!seen.count(e.tgt))
      fail(errc::unknown_node, "edge " + e.name + " has unknown target " + e.tgt);
    q.edges_.push_back(e);
  }
  return q;
}

ObjId path_target(const Quiver& q, const Path& p) {
  return p.steps.empty() ? p.anchor : q.edge(p.steps.back()).tgt;
}

Path path_identity(const Quiver& q, const ObjId& node) {
  if (!q.has_node(node)) fail(errc::unknown_node, "no node named " + node);
  return Path{node, {}};
}

Path path_compose(const Quiver& q, const Path& p1, const Path& p2) {
  ObjId mid = path_target(q, p1);
  ObjId src2 = p2.steps.empty() ? p2.anchor : q.edge(p2.steps.front()).src;
  if (mid != src2)
    fail(errc::not_composable,
         "path into " + mid + " then path from " + src2);
  Path out{p1.anchor, p1.steps};
  out.steps.insert(out.steps.end(), p2.steps.begin(), p2.steps.end());
  return out;
}

std::vector<Path> hom_paths(const Quiver& q, const ObjId& a, const ObjId& b,
                            std::size_t max_len) {
  if (!q.has_node(a)) fail(errc::unknown_node, "no node named " + a);
  if (!q.has_node(b)) fail(errc::unknown_node, "no node named " + b);
  std::vector<Edge> sorted_edges = q.edges();
  std::sort(sorted_edges.begin(), sorted_edges.end(),
            [](const Edge& x, const Edge& y) { return x.name < y.name; });
  std::vector<Path> out;
  if (a == b) out.push_back(Path{a, {}});
  // Enumerate per exact length so the result is length-major.
  std::vector<Path> frontier{Path{a, {}}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      ObjId at = path_target(q, p);
      for (const Edge& e : sorted_edges) {
        if (e.src != at) continue;
        Path ext{p.anchor, p.steps};
        ext.steps.push_back(e.name);
        next.push_back(std::move(ext));
      }
    }
    for (const Path& p : next)
      if (path_target(q, p) == b) out.push_back(p);
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

// ---- FreeCategoryView -----------------------------------------------------

ViewMor FreeCategoryView::to_mor(const Quiver& q, const Path& p) {
  std::string repr = p.anchor + ":";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (i) repr += ",";
    repr += p.steps[i];
  }
  return ViewMor{p.anchor, path_target(q, p), repr};
}

Path FreeCategoryView::to_path(const Quiver& q, const ViewMor& m) {
  auto colon = m.repr.find(':');
  if (colon == std::string::npos)
    fail(errc::not_a_path, "malformed path repr " + m.repr);
  Path p{m.repr.substr(0, colon), {}};
  std::string rest = m.repr.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    p.steps.push_back(rest.substr(pos, comma - pos));
    pos = comma + 1;
  }
  (void)q;
  return p;
}

bool FreeCategoryView::has_object(const ObjId& a) const {
  return q_.has_node(a);
}

std::vector<ObjId> FreeCategoryView::objects(std::size_t) const {
  return q_.nodes();
}

ViewMor FreeCategoryView::identity_of(const ObjId& a) const {
  return to_mor(q_, path_identity(q_, a));
}

ViewMor FreeCategoryView::compose(const ViewMor& f, const ViewMor& g) const {
  return to_mor(q_, path_compose(q_, to_path(q_, f), to_path(q_, g)));
}

std::vector<ViewMor> FreeCategoryView::hom(const ObjId& a, const ObjId& b,
                                           std::size_t bound) const {
  std::vector<ViewMor> out;
  for (const Path& p : hom_paths(q_, a, b, bound)) out.push_back(to_mor(q_, p));
  return out;
}

std::unique_ptr<CategoryView> free_category(Quiver q) {
  return std::make_unique<FreeCategoryView>(std::move(q));
}

// ---- FinCategoryView ------------------------------------------------------

bool FinCategoryView::has_object(const ObjId& a) const {
  return cat_->has_object(a);
}

std::vector<ObjId> FinCategoryView::objects(std::size_t) const {
  return cat_->objects();
}

ViewMor FinCategoryView::identity_of(const ObjId& a) const {
  const std::string& id = cat_->identity(a);
  return ViewMor{a, a, id};
}

ViewMor FinCategoryView::compose(const ViewMor& f, const ViewMor& g) const {
  const std::string& h = cat_->compose(f.repr, g.repr);
  return ViewMor{f.src, g.tgt, h};
}

std::vector<ViewMor> FinCategoryView::hom(const ObjId& a, const ObjId& b,
                                          std::size_t) const {
  std::vector<ViewMor> out;
  for (const std::string& m : cat_->hom(a, b)) out.push_back({a, b, m});
  return out;
}

// ---- FiniteMonoid ---------------------------------------------------------

FiniteMonoid FiniteMonoid::build(std::vector<std::string> elements,
                                 const std::string& unit,
                                 std::vector<std::vector<std::string>> table) {
  FiniteMonoid m;
  m.elements_ = std::move(elements);
  m.unit_ = unit;
  const std::size_t n = m.elements_.size();
  std::set<std::string> names(m.elements_.begin(), m.elements_.end());
  if (names.size() != n) fail(errc::duplicate_id, "repeated monoid element");
  if (!names.count(unit)) fail(errc::unit_law_fails, "unit " + unit + " not an element");
  if (table.size() != n) fail(errc::not_associative, "table has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) fail(errc::not_associative, "table has wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      if (!names.count(table[i][j]))
        fail(errc::not_associative, "table value " + table[i][j] + " not an element");
      m.mult_[{m.elements_[i], m.elements_[j]}] = table[i][j];
    }
  }
  for (const std::string& a : m.elements_) {
    if (m.mult(unit, a) != a || m.mult(a, unit) != a)
      fail(errc::unit_law_fails, "unit law fails at " + a);
  }
  for (const std::string& a : m.elements_)
    for (const std::string& b : m.elements_)
      for (const std::string& c : m.elements_)
        if (m.mult(a, m.mult(b, c)) != m.mult(m.mult(a, b), c))
          fail(errc::not_associative,
               "(" + a + "*" + b + ")*" + c + " != " + a + "*(" + b + "*" + c + ")");
  return m;
}

const std::string& FiniteMonoid::mult(const std::string& a,
                                      const std::string& b) const {
  auto it = mult_.find({a, b});
  if (it == mult_.end()) fail(errc::unknown_morphism, a + " * " + b);
  return it->second;
}

FinCategory monoid_as_category(const FiniteMonoid& m) {
  const ObjId star = "star";
  std::vector<MorDecl> mors;
  for (const std::string& e : m.elements()) mors.push_back({e, star, star});
  std::map<ObjId, std::string> identities{{star, m.unit()}};
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const std::string& a : m.elements())
    for (const std::string& b : m.elements()) comp[{a, b}] = m.mult(a, b);
  return FinCategory::assemble({star}, mors, identities, comp);
}

LawReport check_free_category_laws(const Quiver& q, std::size_t max_len) {
  LawReport report;
  FreeCategoryView view{q};
  std::vector<Path> all;
  for (const ObjId& a : q.nodes())
    for (const ObjId& b : q.nodes())
      for (const Path& p : hom_paths(q, a, b, max_len)) all.push_back(p);

  for (const Path& p : all) {
    Path l = path_compose(q, path_identity(q, p.anchor), p);
    Path r = path_compose(q, p, path_identity(q, path_target(q, p)));
    if (!(l == p))
      report.add("left-identity", {FreeCategoryView::to_mor(q, p).repr},
                 "identity path fails on the left");
    if (!(r == p))
      report.add("right-identity", {FreeCategoryView::to_mor(q, p).repr},
                 "identity path fails on the right");
  }
  for (const Path& p1 : all)
    for (const Path& p2 : all) {
      if (path_target(q, p1) != p2.anchor) continue;
      for (const Path& p3 : all) {
        if (path_target(q, p2) != p3.anchor) continue;
        Path l = path_compose(q, path_compose(q, p1, p2), p3);
        Path r = path_compose(q, p1, path_compose(q, p2, p3));
        if (!(l == r))
          report.add("associativity",
                     {FreeCategoryView::to_mor(q, p1).repr,
                      FreeCategoryView::to_mor(q, p2).repr,
                      FreeCategoryView::to_mor(q, p3).repr},
                     "path concatenation fails associativity");
      }
    }
  return report;
}

}  // namespace catk
