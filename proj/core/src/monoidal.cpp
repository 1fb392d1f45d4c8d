#include "catk/monoidal.hpp"

namespace catk {

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

FinCategory product_category(const FinCategory& C, const FinCategory& D) {
  std::vector<ObjId> objects;
  for (const ObjId& a : C.objects())
    for (const ObjId& b : D.objects()) objects.push_back(pair_name(a, b));

  std::vector<MorDecl> mors;
  for (const MorDecl& f : C.morphisms())
    for (const MorDecl& g : D.morphisms())
      mors.push_back({pair_name(f.name, g.name), pair_name(f.src, g.src),
                      pair_name(f.tgt, g.tgt)});

  std::map<ObjId, std::string> identities;
  for (const ObjId& a : C.objects())
    for (const ObjId& b : D.objects())
      identities[pair_name(a, b)] = pair_name(C.identity(a), D.identity(b));

  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const MorDecl& f : C.morphisms())
    for (const MorDecl& g : D.morphisms())
      for (const MorDecl& h : C.morphisms())
        for (const MorDecl& k : D.morphisms()) {
          if (f.tgt != h.src || g.tgt != k.src) continue;
          comp[{pair_name(f.name, g.name), pair_name(h.name, k.name)}] =
              pair_name(C.compose(f.name, h.name), D.compose(g.name, k.name));
        }
  return FinCategory::assemble(objects, mors, identities, comp);
}

ObjId MonoidalStructure::tensor_obj(const ObjId& a, const ObjId& b) const {
  return tensor.obj_map.at(pair_name(a, b));
}

std::string MonoidalStructure::tensor_mor(const std::string& f,
                                          const std::string& g) const {
  return tensor.mor_map.at(pair_name(f, g));
}

namespace {

const std::string& structure_mor(const std::map<std::array<ObjId, 3>, std::string>& m,
                                 const std::array<ObjId, 3>& key,
                                 const char* what) {
  auto it = m.find(key);
  if (it == m.end())
    fail(errc::ill_typed_witness,
         std::string(what) + " missing at (" + key[0] + "," + key[1] + "," +
             key[2] + ")");
  return it->second;
}

const std::string& structure_mor(const std::map<ObjId, std::string>& m,
                                 const ObjId& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end())
    fail(errc::ill_typed_witness, std::string(what) + " missing at " + key);
  return it->second;
}

void check_iso_pair(const FinCategory& C, const std::string& fwd,
                    const std::string& bwd, const std::string& where,
                    LawReport& report) {
  const MorDecl& f = C.mor(fwd);
  const MorDecl& b = C.mor(bwd);
  if (b.src != f.tgt || b.tgt != f.src) {
    report.add("naturality", {fwd, bwd},
               where + ": designated inverse is not antiparallel");
    return;
  }
  if (C.compose(fwd, bwd) != C.identity(f.src) ||
      C.compose(bwd, fwd) != C.identity(f.tgt))
    report.add("naturality", {fwd, bwd},
               where + ": designated inverse fails to invert");
}

}  // namespace

LawReport check_monoidal_structure(const MonoidalStructure& M) {
  const FinCategory& C = *M.base;
  LawReport report;

  // Bifunctoriality, both as functor laws on the product category and as a
  // direct interchange sweep.
  report.merge(check_functor_laws(M.tensor));
  for (const MorDecl& f : C.morphisms())
    for (const MorDecl& h : C.morphisms()) {
      if (f.tgt != h.src) continue;
      for (const MorDecl& g : C.morphisms())
        for (const MorDecl& k : C.morphisms()) {
          if (g.tgt != k.src) continue;
          const std::string lhs =
              C.compose(M.tensor_mor(f.name, g.name), M.tensor_mor(h.name, k.name));
          const std::string rhs =
              M.tensor_mor(C.compose(f.name, h.name), C.compose(g.name, k.name));
          if (lhs != rhs)
            report.add("bifunctor", {f.name, g.name, h.name, k.name},
                       "(f(x)g);(h(x)k) = " + lhs + " but (f;h)(x)(g;k) = " + rhs);
        }
    }

  // Structure morphisms: typing and designated inverses.
  for (const ObjId& a : C.objects())
    for (const ObjId& b : C.objects())
      for (const ObjId& c : C.objects()) {
        const std::string& al = structure_mor(M.associator, {a, b, c}, "associator");
        const std::string& ali =
            structure_mor(M.associator_inv, {a, b, c}, "associator inverse");
        const MorDecl& m = C.mor(al);
        if (m.src != M.tensor_obj(M.tensor_obj(a, b), c) ||
            m.tgt != M.tensor_obj(a, M.tensor_obj(b, c)))
          fail(errc::ill_typed_witness, "associator ill-typed at (" + a + "," +
                                            b + "," + c + ")");
        check_iso_pair(C, al, ali, "associator(" + a + "," + b + "," + c + ")",
                       report);
      }
  for (const ObjId& a : C.objects()) {
    const std::string& l = structure_mor(M.unitor_l, a, "left unitor");
    const std::string& li = structure_mor(M.unitor_l_inv, a, "left unitor inverse");
    const std::string& r = structure_mor(M.unitor_r, a, "right unitor");
    const std::string& ri = structure_mor(M.unitor_r_inv, a, "right unitor inverse");
    if (C.mor(l).src != M.tensor_obj(M.unit, a) || C.mor(l).tgt != a)
      fail(errc::ill_typed_witness, "left unitor ill-typed at " + a);
    if (C.mor(r).src != M.tensor_obj(a, M.unit) || C.mor(r).tgt != a)
      fail(errc::ill_typed_witness, "right unitor ill-typed at " + a);
    check_iso_pair(C, l, li, "unitor_l(" + a + ")", report);
    check_iso_pair(C, r, ri, "unitor_r(" + a + ")", report);
  }

  // Naturality of associator and unitors.
  for (const MorDecl& f : C.morphisms())
    for (const MorDecl& g : C.morphisms())
      for (const MorDecl& h : C.morphisms()) {
        const std::string lhs = C.compose(
            M.tensor_mor(M.tensor_mor(f.name, g.name), h.name),
            M.associator.at({f.tgt, g.tgt, h.tgt}));
        const std::string rhs = C.compose(
            M.associator.at({f.src, g.src, h.src}),
            M.tensor_mor(f.name, M.tensor_mor(g.name, h.name)));
        if (lhs != rhs)
          report.add("naturality", {f.name, g.name, h.name},
                     "associator is not natural");
      }
  const std::string id_unit = C.identity(M.unit);
  for (const MorDecl& f : C.morphisms()) {
    if (C.compose(M.tensor_mor(id_unit, f.name), M.unitor_l.at(f.tgt)) !=
        C.compose(M.unitor_l.at(f.src), f.name))
      report.add("naturality", {f.name}, "left unitor is not natural");
    if (C.compose(M.tensor_mor(f.name, id_unit), M.unitor_r.at(f.tgt)) !=
        C.compose(M.unitor_r.at(f.src), f.name))
      report.add("naturality", {f.name}, "right unitor is not natural");
  }

  // Pentagon over all object quadruples.
  for (const ObjId& a : C.objects())
    for (const ObjId& b : C.objects())
      for (const ObjId& c : C.objects())
        for (const ObjId& d : C.objects()) {
          const std::string lhs = C.compose(
              C.compose(M.tensor_mor(M.associator.at({a, b, c}),
                                     C.identity(d)),
                        M.associator.at({a, M.tensor_obj(b, c), d})),
              M.tensor_mor(C.identity(a), M.associator.at({b, c, d})));
          const std::string rhs =
              C.compose(M.associator.at({M.tensor_obj(a, b), c, d}),
                        M.associator.at({a, b, M.tensor_obj(c, d)}));
          if (lhs != rhs)
            report.add("pentagon", {a, b, c, d}, "pentagon identity fails");
        }

  // Triangle over all object pairs.
  for (const ObjId& a : C.objects())
    for (const ObjId& b : C.objects()) {
      const std::string lhs =
          C.compose(M.associator.at({a, M.unit, b}),
                    M.tensor_mor(C.identity(a), M.unitor_l.at(b)));
      const std::string rhs = M.tensor_mor(M.unitor_r.at(a), C.identity(b));
      if (lhs != rhs) report.add("triangle", {a, b}, "triangle identity fails");
    }

  if (M.strict) {
    for (const auto& [key, al] : M.associator)
      if (!C.is_identity(al))
        report.add("strictness", {key[0], key[1], key[2]},
                   "associator component is not an identity");
    for (const auto& [a, l] : M.unitor_l)
      if (!C.is_identity(l))
        report.add("strictness", {a}, "left unitor component is not an identity");
    for (const auto& [a, r] : M.unitor_r)
      if (!C.is_identity(r))
        report.add("strictness", {a}, "right unitor component is not an identity");
    for (const ObjId& a : C.objects()) {
      if (M.tensor_obj(M.unit, a) != a || M.tensor_obj(a, M.unit) != a)
        report.add("strictness", {a}, "unit is not strict on objects");
      for (const ObjId& b : C.objects())
        for (const ObjId& c : C.objects())
          if (M.tensor_obj(M.tensor_obj(a, b), c) !=
              M.tensor_obj(a, M.tensor_obj(b, c)))
            report.add("strictness", {a, b, c},
                       "tensor is not associative on objects");
    }
  }
  return report;
}

LawReport check_symmetric_structure(const MonoidalStructure& M,
                                    const SymmetricStructure& S) {
  const FinCategory& C = *M.base;
  LawReport report;

  auto braid = [&](const ObjId& a, const ObjId& b) -> const std::string& {
    auto it = S.braiding.find({a, b});
    if (it == S.braiding.end())
      fail(errc::ill_typed_witness, "braiding missing at (" + a + "," + b + ")");
    return it->second;
  };

  for (const ObjId& a : C.objects())
    for (const ObjId& b : C.objects()) {
      const MorDecl& m = C.mor(braid(a, b));
      if (m.src != M.tensor_obj(a, b) || m.tgt != M.tensor_obj(b, a))
        fail(errc::ill_typed_witness,
             "braiding ill-typed at (" + a + "," + b + ")");
    }

  // Naturality.
  for (const MorDecl& f : C.morphisms())
    for (const MorDecl& g : C.morphisms()) {
      const std::string lhs =
          C.compose(M.tensor_mor(f.name, g.name), braid(f.tgt, g.tgt));
      const std::string rhs =
          C.compose(braid(f.src, g.src), M.tensor_mor(g.name, f.name));
      if (lhs != rhs)
        report.add("naturality", {f.name, g.name}, "braiding is not natural");
    }

  // Symmetry: braid ; braid = id.
  for (const ObjId& a : C.objects())
    for (const ObjId& b : C.objects())
      if (C.compose(braid(a, b), braid(b, a)) !=
          C.identity(M.tensor_obj(a, b)))
        report.add("symmetry", {a, b}, "braid(a,b);braid(b,a) is not identity");

  // Hexagons.
  for (const ObjId& a : C.objects())
    for (const ObjId& b : C.objects())
      for (const ObjId& c : C.objects()) {
        const std::string h1l =
            C.compose(C.compose(M.associator.at({a, b, c}),
                                braid(a, M.tensor_obj(b, c))),
                      M.associator.at({b, c, a}));
        const std::string h1r = C.compose(
            C.compose(M.tensor_mor(braid(a, b), C.identity(c)),
                      M.associator.at({b, a, c})),
            M.tensor_mor(C.identity(b), braid(a, c)));
        if (h1l != h1r) report.add("hexagon", {a, b, c}, "first hexagon fails");

        const std::string h2l =
            C.compose(C.compose(M.associator_inv.at({a, b, c}),
                                braid(M.tensor_obj(a, b), c)),
                      M.associator_inv.at({c, a, b}));
        const std::string h2r = C.compose(
            C.compose(M.tensor_mor(C.identity(a), braid(b, c)),
                      M.associator_inv.at({a, c, b})),
            M.tensor_mor(braid(a, c), C.identity(b)));
        if (h2l != h2r) report.add("hexagon", {a, b, c}, "second hexagon fails");
      }
  return report;
}

namespace {

// The unique m : c -> w.apex with m;proj_l = f and m;proj_r = g.
std::string mediator(const FinCategory& C, const ProductWitness& w,
                     const ObjId& c, const std::string& f,
                     const std::string& g) {
  std::string found;
  std::size_t count = 0;
  for (const std::string& m : C.hom(c, w.apex)) {
    if (C.compose(m, w.proj_l) == f && C.compose(m, w.proj_r) == g) {
      found = m;
      ++count;
    }
  }
  if (count != 1)
    fail(errc::missing_product,
         "cone (" + f + ", " + g + ") from " + c + " has " +
             std::to_string(count) + " mediating morphisms into " + w.apex);
  return found;
}

}  // namespace

MonoidalStructure monoidal_from_products(std::shared_ptr<const FinCategory> C,
                                         const ProductChooser& chooser,
                                         const TerminalWitness& terminal) {
  const FinCategory& cat = *C;
  if (!check_terminal(cat, terminal.object).ok())
    fail(errc::missing_terminal, terminal.object + " is not terminal");

  std::map<std::pair<ObjId, ObjId>, ProductWitness> chosen;
  for (const ObjId& a : cat.objects())
    for (const ObjId& b : cat.objects()) {
      auto w = chooser(a, b);
      if (!w)
        fail(errc::missing_product, "no product chosen for (" + a + "," + b + ")");
      if (w->left != a || w->right != b || !check_product(cat, *w).ok())
        fail(errc::missing_product,
             "chosen witness for (" + a + "," + b + ") is not a product");
      chosen.emplace(std::make_pair(a, b), *w);
    }

  MonoidalStructure M;
  M.base = C;
  M.square = std::make_shared<FinCategory>(product_category(cat, cat));
  M.unit = terminal.object;

  std::map<ObjId, ObjId> obj_map;
  for (const auto& [pair, w] : chosen) obj_map[pair_name(pair.first, pair.second)] = w.apex;
  std::map<std::string, std::string> mor_map;
  for (const MorDecl& f : cat.morphisms())
    for (const MorDecl& g : cat.morphisms()) {
      const ProductWitness& src_w = chosen.at({f.src, g.src});
      const ProductWitness& tgt_w = chosen.at({f.tgt, g.tgt});
      mor_map[pair_name(f.name, g.name)] =
          mediator(cat, tgt_w, src_w.apex,
                   cat.compose(src_w.proj_l, f.name),
                   cat.compose(src_w.proj_r, g.name));
    }
  M.tensor = make_functor(*M.square, cat, std::move(obj_map), std::move(mor_map));

  for (const ObjId& a : cat.objects())
    for (const ObjId& b : cat.objects())
      for (const ObjId& c : cat.objects()) {
        const ProductWitness& ab = chosen.at({a, b});
        const ProductWitness& bc = chosen.at({b, c});
        const ProductWitness& ab_c = chosen.at({ab.apex, c});
        const ProductWitness& a_bc = chosen.at({a, bc.apex});
        // (a(x)b)(x)c -> a(x)(b(x)c)
        std::string into_bc =
            mediator(cat, bc, ab_c.apex,
                     cat.compose(ab_c.proj_l, ab.proj_r), ab_c.proj_r);
        M.associator[{a, b, c}] =
            mediator(cat, a_bc, ab_c.apex,
                     cat.compose(ab_c.proj_l, ab.proj_l), into_bc);
        std::string into_ab =
            mediator(cat, ab, a_bc.apex, a_bc.proj_l,
                     cat.compose(a_bc.proj_r, bc.proj_l));
        M.associator_inv[{a, b, c}] =
            mediator(cat, ab_c, a_bc.apex, into_ab,
                     cat.compose(a_bc.proj_r, bc.proj_r));
      }

  for (const ObjId& a : cat.objects()) {
    const ProductWitness& ta = chosen.at({M.unit, a});
    const ProductWitness& at = chosen.at({a, M.unit});
    const std::string& bang = cat.hom(a, M.unit).front();
    M.unitor_l[a] = ta.proj_r;
    M.unitor_l_inv[a] = mediator(cat, ta, a, bang, cat.identity(a));
    M.unitor_r[a] = at.proj_l;
    M.unitor_r_inv[a] = mediator(cat, at, a, cat.identity(a), bang);
  }

  bool strict = true;
  for (const auto& [key, al] : M.associator)
    if (!cat.is_identity(al)) strict = false;
  for (const auto& [a, l] : M.unitor_l)
    if (!cat.is_identity(l)) strict = false;
  for (const auto& [a, r] : M.unitor_r)
    if (!cat.is_identity(r)) strict = false;
  if (strict)
    for (const ObjId& a : cat.objects()) {
      if (M.tensor_obj(M.unit, a) != a || M.tensor_obj(a, M.unit) != a)
        strict = false;
      for (const ObjId& b : cat.objects())
        for (const ObjId& c : cat.objects())
          if (M.tensor_obj(M.tensor_obj(a, b), c) !=
              M.tensor_obj(a, M.tensor_obj(b, c)))
            strict = false;
    }
  M.strict = strict;
  return M;
}

SymmetricStructure symmetry_from_products(const MonoidalStructure& M,
                                          const ProductChooser& chooser) {
  const FinCategory& cat = *M.base;
  SymmetricStructure S;
  for (const ObjId& a : cat.objects())
    for (const ObjId& b : cat.objects()) {
      auto ab = chooser(a, b);
      auto ba = chooser(b, a);
      if (!ab || !ba)
        fail(errc::missing_product, "no product chosen for braiding");
      S.braiding[{a, b}] =
          mediator(cat, *ba, ab->apex, ab->proj_r, ab->proj_l);
    }
  return S;
}

ProductChooser first_product_chooser(const FinCategory& C) {
  return [&C](const ObjId& a, const ObjId& b) -> std::optional<ProductWitness> {
    auto ws = find_products(C, a, b);
    if (ws.empty()) return std::nullopt;
    return ws.front();
  };
}

std::pair<MonoidalStructure, SymmetricStructure> monoid_monoidal(
    const FiniteMonoid& m) {
  auto base = std::make_shared<FinCategory>(monoid_as_category(m));
  const ObjId star = "star";
  MonoidalStructure M;
  M.base = base;
  M.square = std::make_shared<FinCategory>(product_category(*base, *base));
  M.unit = star;
  std::map<ObjId, ObjId> obj_map{{pair_name(star, star), star}};
  std::map<std::string, std::string> mor_map;
  for (const std::string& a : m.elements())
    for (const std::string& b : m.elements())
      mor_map[pair_name(a, b)] = m.mult(a, b);
  M.tensor = make_functor(*M.square, *base, std::move(obj_map), std::move(mor_map));
  M.associator[{star, star, star}] = m.unit();
  M.associator_inv[{star, star, star}] = m.unit();
  M.unitor_l[star] = m.unit();
  M.unitor_l_inv[star] = m.unit();
  M.unitor_r[star] = m.unit();
  M.unitor_r_inv[star] = m.unit();
  M.strict = true;

  SymmetricStructure S;
  S.braiding[{star, star}] = m.unit();
  return {M, S};
}

}  // namespace catk
