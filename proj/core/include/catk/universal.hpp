#pragma once

#include <string>
#include <vector>

#include "catk/kernel.hpp"

namespace catk {

struct TerminalWitness {
  ObjId object;

  friend bool operator==(const TerminalWitness&, const TerminalWitness&) =
      default;
};

struct ProductWitness {
  ObjId left;
  ObjId right;
  ObjId apex;
  std::string proj_l;  // apex -> left
  std::string proj_r;  // apex -> right

  friend bool operator==(const ProductWitness&, const ProductWitness&) =
      default;
};

struct CoproductWitness {
  ObjId left;
  ObjId right;
  ObjId apex;
  std::string inj_l;  // left -> apex
  std::string inj_r;  // right -> apex

  friend bool operator==(const CoproductWitness&, const CoproductWitness&) =
      default;
};

// Empty report iff every hom-set into t is a singleton.
LawReport check_terminal(const FinCategory& cat, const ObjId& t);
std::vector<TerminalWitness> find_terminals(const FinCategory& cat);

// Exhaustive cone sweep; reports every (c, f, g) whose mediating-morphism
// count differs from one, distinguishing missing from non-unique.
LawReport check_product(const FinCategory& cat, const ProductWitness& w);
std::vector<ProductWitness> find_products(const FinCategory& cat,
                                          const ObjId& a, const ObjId& b);

// Duals, by reduction to the opposite category.
LawReport check_initial(const FinCategory& cat, const ObjId& t);
std::vector<TerminalWitness> find_initials(const FinCategory& cat);
LawReport check_coproduct(const FinCategory& cat, const CoproductWitness& w);
std::vector<CoproductWitness> find_coproducts(const FinCategory& cat,
                                              const ObjId& a, const ObjId& b);

}  // namespace catk
