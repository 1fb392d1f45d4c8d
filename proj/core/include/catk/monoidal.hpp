#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "catk/functor.hpp"
#include "catk/kernel.hpp"
#include "catk/universal.hpp"

namespace catk {

std::string pair_name(const std::string& a, const std::string& b);

// C x D with objects (a,b) and morphisms (f,g), componentwise structure.
FinCategory product_category(const FinCategory& C, const FinCategory& D);

// Monoidal data over a finite base. Structure morphisms carry designated
// inverses; `strict` demands they are all identities and that the object
// equations hold on the nose.
struct MonoidalStructure {
  std::shared_ptr<const FinCategory> base;
  std::shared_ptr<const FinCategory> square;  // base x base
  FunctorData tensor;                         // square -> base
  ObjId unit;
  // (a,b,c) -> (a(x)b)(x)c -> a(x)(b(x)c), with inverse
  std::map<std::array<ObjId, 3>, std::string> associator;
  std::map<std::array<ObjId, 3>, std::string> associator_inv;
  std::map<ObjId, std::string> unitor_l;      // unit(x)a -> a
  std::map<ObjId, std::string> unitor_l_inv;
  std::map<ObjId, std::string> unitor_r;      // a(x)unit -> a
  std::map<ObjId, std::string> unitor_r_inv;
  bool strict = false;

  ObjId tensor_obj(const ObjId& a, const ObjId& b) const;
  std::string tensor_mor(const std::string& f, const std::string& g) const;
};

struct SymmetricStructure {
  std::map<std::pair<ObjId, ObjId>, std::string> braiding;  // a(x)b -> b(x)a
};

// Bifunctoriality (via the tensor's functor laws plus a direct interchange
// sweep), naturality of the structure morphisms, inverse pairing, pentagon,
// triangle, and the strictness demands when flagged.
LawReport check_monoidal_structure(const MonoidalStructure& M);

// Braiding naturality, both hexagons, and symmetry (braid;braid = id).
LawReport check_symmetric_structure(const MonoidalStructure& M,
                                    const SymmetricStructure& S);

using ProductChooser =
    std::function<std::optional<ProductWitness>(const ObjId&, const ObjId&)>;

// Tensor = chosen apexes, unit = terminal object; all structure morphisms
// are the unique mediating isomorphisms.
MonoidalStructure monoidal_from_products(std::shared_ptr<const FinCategory> C,
                                         const ProductChooser& chooser,
                                         const TerminalWitness& terminal);

// The braiding induced by swapping projections.
SymmetricStructure symmetry_from_products(const MonoidalStructure& M,
                                          const ProductChooser& chooser);

// Chooser picking the first witness found by exhaustive search.
ProductChooser first_product_chooser(const FinCategory& C);

// Strict one-object structure with tensor = monoid multiplication.
// Lawful exactly when the monoid is commutative; the checker says which.
std::pair<MonoidalStructure, SymmetricStructure> monoid_monoidal(
    const FiniteMonoid& m);

}  // namespace catk
