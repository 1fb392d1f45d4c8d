#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "catk/kernel.hpp"
#include "catk/quiver.hpp"

namespace catk {

// Object of the finite-set category: the set {0, ..., size-1}.
struct FinSetObj {
  std::size_t size = 0;

  friend bool operator==(const FinSetObj&, const FinSetObj&) = default;
};

// Tabulated function; equality is table equality (extensionality holds by
// construction).
struct FinFunction {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> table;

  friend bool operator==(const FinFunction&, const FinFunction&) = default;
};

FinFunction fin_identity(std::size_t n);

// f then g, pointwise.
FinFunction fin_compose(const FinFunction& f, const FinFunction& g);

// All functions m -> n (cod^dom of them), tables in odometer order.
std::vector<FinFunction> enumerate_fin_functions(std::size_t m, std::size_t n);

// The finite-set category through the uniform interface. Objects are decimal
// size strings; the hom enumerator ignores its bound argument and applies
// enum_cap to the object sizes instead.
class FinSetView : public CategoryView {
public:
  explicit FinSetView(std::size_t enum_cap) : enum_cap_(enum_cap) {}

  bool has_object(const ObjId& a) const override;
  std::vector<ObjId> objects(std::size_t bound) const override;
  ViewMor identity_of(const ObjId& a) const override;
  ViewMor compose(const ViewMor& f, const ViewMor& g) const override;
  std::vector<ViewMor> hom(const ObjId& a, const ObjId& b,
                           std::size_t bound) const override;

  static ViewMor to_mor(const FinFunction& f);
  static FinFunction to_function(const ViewMor& m);

private:
  std::size_t enum_cap_;
};

std::unique_ptr<CategoryView> finset_category(std::size_t enum_cap = 4);

// Cartesian monoidal structure on finite sets, tabulated directly: tensor of
// sizes is the product, pairs encoded row-major ((i,j) -> i*|B|+j), unit the
// singleton. Structure morphisms are explicit tables; coherence is checked
// pointwise by check_finset_monoidal over objects of size <= size_cap.
struct FinSetMonoidal {
  std::size_t size_cap = 0;

  std::size_t tensor_obj(std::size_t m, std::size_t n) const { return m * n; }
  FinFunction tensor_mor(const FinFunction& f, const FinFunction& g) const;
  // (m*n)*p -> m*(n*p); the row-major encoding makes this the identity table.
  FinFunction associator(std::size_t m, std::size_t n, std::size_t p) const;
  FinFunction unitor_l(std::size_t m) const;  // 1*m -> m
  FinFunction unitor_r(std::size_t m) const;  // m*1 -> m
  FinFunction braiding(std::size_t m, std::size_t n) const;  // coordinate swap
};

FinSetMonoidal finset_products_monoidal(std::size_t size_cap);

// Pointwise sweeps: interchange over all function pairs at sizes <= cap,
// pentagon/triangle over object tuples, naturality of all structure maps,
// hexagons and symmetry of the braiding.
LawReport check_finset_monoidal(const FinSetMonoidal& M);

// Fold of edge tables along a path; the empty path is the identity table.
FinFunction evaluate_free_functor(
    const Quiver& q, const std::map<ObjId, std::size_t>& node_sizes,
    const std::map<std::string, FinFunction>& edge_tables, const Path& p);

}  // namespace catk
