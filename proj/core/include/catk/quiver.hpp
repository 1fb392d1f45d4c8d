#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catk/kernel.hpp"

namespace catk {

struct Edge {
  std::string name;
  ObjId src;
  ObjId tgt;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Quiver {
public:
  Quiver() = default;

  const std::vector<ObjId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_node(const ObjId& n) const;
  const Edge& edge(const std::string& name) const;
  bool has_edge(const std::string& name) const;

  friend Quiver build_quiver(const std::vector<ObjId>& nodes,
                             const std::vector<Edge>& edges);

private:
  std::vector<ObjId> nodes_;
  std::vector<Edge> edges_;
};

Quiver build_quiver(const std::vector<ObjId>& nodes,
                    const std::vector<Edge>& edges);

// Morphism of the free category on a quiver: a composable edge sequence.
// Path equality is syntactic sequence equality; no quotient.
struct Path {
  ObjId anchor;  // source node; meaningful even when steps is empty
  std::vector<std::string> steps;

  friend bool operator==(const Path&, const Path&) = default;
};

ObjId path_target(const Quiver& q, const Path& p);
Path path_identity(const Quiver& q, const ObjId& node);
Path path_compose(const Quiver& q, const Path& p1, const Path& p2);

// All paths a -> b with at most max_len steps, in length-then-lexicographic
// order (lexicographic by edge name at each step).
std::vector<Path> hom_paths(const Quiver& q, const ObjId& a, const ObjId& b,
                            std::size_t max_len);

// Uniform handle over possibly-infinite categories. Morphisms travel as
// (src, tgt, repr) triples; each view keeps reprs canonical so that equality
// is repr equality.
struct ViewMor {
  ObjId src;
  ObjId tgt;
  std::string repr;

  friend bool operator==(const ViewMor&, const ViewMor&) = default;
};

class CategoryView {
public:
  virtual ~CategoryView() = default;

  virtual bool has_object(const ObjId& a) const = 0;
  // Bounded listing of the object universe (everything, for finite views).
  virtual std::vector<ObjId> objects(std::size_t bound) const = 0;
  virtual ViewMor identity_of(const ObjId& a) const = 0;
  virtual ViewMor compose(const ViewMor& f, const ViewMor& g) const = 0;
  virtual bool equal(const ViewMor& f, const ViewMor& g) const {
    return f == g;
  }
  // Bounded hom enumeration; the bound's meaning is view-specific (path
  // length for free categories, object-size cap for the finite-set view).
  virtual std::vector<ViewMor> hom(const ObjId& a, const ObjId& b,
                                   std::size_t bound) const = 0;
};

class FreeCategoryView : public CategoryView {
public:
  explicit FreeCategoryView(Quiver q) : q_(std::move(q)) {}

  const Quiver& quiver() const { return q_; }

  bool has_object(const ObjId& a) const override;
  std::vector<ObjId> objects(std::size_t bound) const override;
  ViewMor identity_of(const ObjId& a) const override;
  ViewMor compose(const ViewMor& f, const ViewMor& g) const override;
  std::vector<ViewMor> hom(const ObjId& a, const ObjId& b,
                           std::size_t bound) const override;

  static ViewMor to_mor(const Quiver& q, const Path& p);
  static Path to_path(const Quiver& q, const ViewMor& m);

private:
  Quiver q_;
};

std::unique_ptr<CategoryView> free_category(Quiver q);

// Any FinCategory seen through the uniform interface.
class FinCategoryView : public CategoryView {
public:
  explicit FinCategoryView(const FinCategory& cat) : cat_(&cat) {}

  bool has_object(const ObjId& a) const override;
  std::vector<ObjId> objects(std::size_t bound) const override;
  ViewMor identity_of(const ObjId& a) const override;
  ViewMor compose(const ViewMor& f, const ViewMor& g) const override;
  std::vector<ViewMor> hom(const ObjId& a, const ObjId& b,
                           std::size_t bound) const override;

private:
  const FinCategory* cat_;
};

class FiniteMonoid {
public:
  // table[i][j] is the element index of elements[i] * elements[j]
  // (left-to-right). Unit laws and associativity are checked here.
  static FiniteMonoid build(std::vector<std::string> elements,
                            const std::string& unit,
                            std::vector<std::vector<std::string>> table);

  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& unit() const { return unit_; }
  const std::string& mult(const std::string& a, const std::string& b) const;

private:
  std::vector<std::string> elements_;
  std::string unit_;
  std::map<std::pair<std::string, std::string>, std::string> mult_;
};

// One-object category on "star"; identity is the unit, composition is
// left-to-right multiplication.
FinCategory monoid_as_category(const FiniteMonoid& m);

// Bounded law sweep of the free category (a self-test of the checker: the
// laws hold by construction).
LawReport check_free_category_laws(const Quiver& q, std::size_t max_len);

}  // namespace catk
