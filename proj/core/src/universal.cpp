#include "catk/universal.hpp"

namespace catk {

LawReport check_terminal(const FinCategory& cat, const ObjId& t) {
  if (!cat.has_object(t)) fail(errc::unknown_object, "no object named " + t);
  LawReport report;
  for (const ObjId& a : cat.objects()) {
    std::size_t n = cat.hom(a, t).size();
    if (n != 1)
      report.add("terminal", {a, t},
                 "hom(" + a + ", " + t + ") has " + std::to_string(n) +
                     " morphisms, expected exactly 1");
  }
  return report;
}

std::vector<TerminalWitness> find_terminals(const FinCategory& cat) {
  std::vector<TerminalWitness> out;
  for (const ObjId& t : cat.objects())
    if (check_terminal(cat, t).ok()) out.push_back({t});
  return out;
}

LawReport check_product(const FinCategory& cat, const ProductWitness& w) {
  if (!cat.has_object(w.left) || !cat.has_object(w.right) ||
      !cat.has_object(w.apex))
    fail(errc::ill_typed_witness, "witness names unknown objects");
  if (!cat.has_morphism(w.proj_l) || !cat.has_morphism(w.proj_r))
    fail(errc::ill_typed_witness, "witness names unknown morphisms");
  const MorDecl& pl = cat.mor(w.proj_l);
  const MorDecl& pr = cat.mor(w.proj_r);
  if (pl.src != w.apex || pl.tgt != w.left)
    fail(errc::ill_typed_witness, "left projection is not " + w.apex + " -> " + w.left);
  if (pr.src != w.apex || pr.tgt != w.right)
    fail(errc::ill_typed_witness, "right projection is not " + w.apex + " -> " + w.right);

  LawReport report;
  for (const ObjId& c : cat.objects()) {
    for (const std::string& f : cat.hom(c, w.left)) {
      for (const std::string& g : cat.hom(c, w.right)) {
        std::size_t mediators = 0;
        for (const std::string& m : cat.hom(c, w.apex)) {
          if (cat.compose(m, w.proj_l) == f && cat.compose(m, w.proj_r) == g)
            ++mediators;
        }
        if (mediators == 0)
          report.add("product", {c, f, g},
                     "cone (" + f + ", " + g + ") from " + c +
                         " has no mediating morphism");
        else if (mediators > 1)
          report.add("product", {c, f, g},
                     "cone (" + f + ", " + g + ") from " + c + " has " +
                         std::to_string(mediators) + " mediating morphisms");
      }
    }
  }
  return report;
}

std::vector<ProductWitness> find_products(const FinCategory& cat,
                                          const ObjId& a, const ObjId& b) {
  if (!cat.has_object(a)) fail(errc::unknown_object, "no object named " + a);
  if (!cat.has_object(b)) fail(errc::unknown_object, "no object named " + b);
  std::vector<ProductWitness> out;
  for (const ObjId& apex : cat.objects()) {
    for (const std::string& pl : cat.hom(apex, a)) {
      for (const std::string& pr : cat.hom(apex, b)) {
        ProductWitness w{a, b, apex, pl, pr};
        if (check_product(cat, w).ok()) out.push_back(std::move(w));
      }
    }
  }
  return out;
}

LawReport check_initial(const FinCategory& cat, const ObjId& t) {
  return check_terminal(opposite_category(cat), t);
}

std::vector<TerminalWitness> find_initials(const FinCategory& cat) {
  return find_terminals(opposite_category(cat));
}

LawReport check_coproduct(const FinCategory& cat, const CoproductWitness& w) {
  return check_product(opposite_category(cat),
                       ProductWitness{w.left, w.right, w.apex, w.inj_l, w.inj_r});
}

std::vector<CoproductWitness> find_coproducts(const FinCategory& cat,
                                              const ObjId& a, const ObjId& b) {
  std::vector<CoproductWitness> out;
  for (const ProductWitness& w : find_products(opposite_category(cat), a, b))
    out.push_back({w.left, w.right, w.apex, w.proj_l, w.proj_r});
  return out;
}

}  // namespace catk
