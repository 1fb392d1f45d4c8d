#include "catk/functor.hpp"

#include <algorithm>

namespace catk {

FunctorData identity_functor(const FinCategory& cat) {
  FunctorData F;
  F.source = &cat;
  F.target = &cat;
  for (const ObjId& a : cat.objects()) F.obj_map[a] = a;
  for (const MorDecl& m : cat.morphisms()) F.mor_map[m.name] = m.name;
  return F;
}

FunctorData make_functor(const FinCategory& source, const FinCategory& target,
                         std::map<ObjId, ObjId> obj_map,
                         std::map<std::string, std::string> mor_map) {
  FunctorData F;
  F.source = &source;
  F.target = &target;
  F.obj_map = std::move(obj_map);
  F.mor_map = std::move(mor_map);
  for (const ObjId& a : source.objects()) {
    auto it = F.obj_map.find(a);
    if (it == F.obj_map.end())
      fail(errc::source_target_mismatch, "obj_map not total at " + a);
    if (!target.has_object(it->second))
      fail(errc::source_target_mismatch,
           "obj_map sends " + a + " outside the target");
  }
  for (const MorDecl& m : source.morphisms()) {
    auto it = F.mor_map.find(m.name);
    if (it == F.mor_map.end()) {
      if (source.is_identity(m.name)) {
        F.mor_map[m.name] = target.identity(F.obj_map.at(m.src));
        continue;
      }
      fail(errc::source_target_mismatch, "mor_map not total at " + m.name);
    }
    const MorDecl& img = target.mor(it->second);
    if (img.src != F.obj_map.at(m.src) || img.tgt != F.obj_map.at(m.tgt))
      fail(errc::source_target_mismatch,
           "mor_map is ill-typed at " + m.name + " |-> " + it->second);
  }
  return F;
}

LawReport check_functor_laws(const FunctorData& F) {
  LawReport report;
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  for (const ObjId& a : C.objects()) {
    const std::string& img = F.mor_map.at(C.identity(a));
    const std::string& want = D.identity(F.obj_map.at(a));
    if (img != want)
      report.add("functor-identity", {a},
                 "F(" + C.identity(a) + ") = " + img + " but expected " + want);
  }
  for (const MorDecl& f : C.morphisms()) {
    for (const MorDecl& g : C.morphisms()) {
      if (f.tgt != g.src) continue;
      const std::string& lhs = F.mor_map.at(C.compose(f.name, g.name));
      const std::string& rhs =
          D.compose(F.mor_map.at(f.name), F.mor_map.at(g.name));
      if (lhs != rhs)
        report.add("functor-composition", {f.name, g.name},
                   "F(" + f.name + ";" + g.name + ") = " + lhs +
                       " but F(" + f.name + ");F(" + g.name + ") = " + rhs);
    }
  }
  return report;
}

FunctorData compose_functors(const FunctorData& F, const FunctorData& G) {
  if (F.target != G.source)
    fail(errc::not_composable, "functor targets/sources do not agree");
  FunctorData H;
  H.source = F.source;
  H.target = G.target;
  for (const auto& [a, fa] : F.obj_map) H.obj_map[a] = G.obj_map.at(fa);
  for (const auto& [m, fm] : F.mor_map) H.mor_map[m] = G.mor_map.at(fm);
  return H;
}

bool functors_equal(const FunctorData& F, const FunctorData& G) {
  return F.obj_map == G.obj_map && F.mor_map == G.mor_map;
}

std::vector<FunctorData> enumerate_functors(const FinCategory& C,
                                            const FinCategory& D) {
  std::vector<FunctorData> out;
  const auto& cobjs = C.objects();
  const auto& dobjs = D.objects();
  if (cobjs.empty()) {
    FunctorData F;
    F.source = &C;
    F.target = &D;
    out.push_back(F);
    return out;
  }
  if (dobjs.empty()) return out;

  std::vector<const MorDecl*> gens;  // non-identity morphisms, declared order
  for (const MorDecl& m : C.morphisms())
    if (!C.is_identity(m.name)) gens.push_back(&m);

  // Rightmost index moves fastest, so results come out lexicographically.
  auto advance = [](std::vector<std::size_t>& idx, auto limit) -> bool {
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < limit(k)) return true;
      idx[k] = 0;
    }
    return false;
  };

  std::vector<std::size_t> oidx(cobjs.size(), 0);
  do {
    std::map<ObjId, ObjId> obj_map;
    for (std::size_t i = 0; i < cobjs.size(); ++i)
      obj_map[cobjs[i]] = dobjs[oidx[i]];

    std::vector<const std::vector<std::string>*> cands(gens.size());
    bool feasible = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      cands[i] = &D.hom(obj_map.at(gens[i]->src), obj_map.at(gens[i]->tgt));
      if (cands[i]->empty()) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    std::vector<std::size_t> midx(gens.size(), 0);
    do {
      std::map<std::string, std::string> mor_map;
      for (std::size_t i = 0; i < gens.size(); ++i)
        mor_map[gens[i]->name] = (*cands[i])[midx[i]];
      FunctorData F = make_functor(C, D, obj_map, std::move(mor_map));
      if (check_functor_laws(F).ok()) out.push_back(std::move(F));
    } while (advance(midx, [&](std::size_t k) { return cands[k]->size(); }));
  } while (advance(oidx, [&](std::size_t) { return dobjs.size(); }));
  return out;
}

CatCategory cat_category(const std::vector<const FinCategory*>& cats,
                         std::size_t cap) {
  CatCategory result;
  result.object_cats = cats;
  for (std::size_t i = 0; i < cats.size(); ++i)
    result.object_names.push_back("C" + std::to_string(i));

  std::size_t total = 0;
  std::vector<MorDecl> mors;
  std::map<ObjId, std::string> identities;
  std::map<std::pair<ObjId, ObjId>, std::vector<FunctorData>> homs;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::size_t j = 0; j < cats.size(); ++j) {
      auto fs = enumerate_functors(*cats[i], *cats[j]);
      total += fs.size();
      if (total > cap)
        fail(errc::cap_exceeded,
             "functor count exceeds cap of " + std::to_string(cap));
      for (std::size_t k = 0; k < fs.size(); ++k) {
        std::string name = "F" + std::to_string(i) + "_" + std::to_string(j) +
                           "_" + std::to_string(k);
        mors.push_back({name, result.object_names[i], result.object_names[j]});
        result.functor_of.emplace(name, fs[k]);
      }
      homs[{result.object_names[i], result.object_names[j]}] = std::move(fs);
    }
    // Identity functor's slot in hom(i,i).
    const auto& endos = homs.at({result.object_names[i], result.object_names[i]});
    FunctorData idf = identity_functor(*cats[i]);
    bool found = false;
    for (std::size_t k = 0; k < endos.size(); ++k) {
      if (functors_equal(endos[k], idf)) {
        identities[result.object_names[i]] =
            "F" + std::to_string(i) + "_" + std::to_string(i) + "_" +
            std::to_string(k);
        found = true;
        break;
      }
    }
    if (!found)
      fail(errc::missing_composite, "identity functor missing from enumeration");
  }

  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const MorDecl& f : mors) {
    for (const MorDecl& g : mors) {
      if (f.tgt != g.src) continue;
      FunctorData h =
          compose_functors(result.functor_of.at(f.name), result.functor_of.at(g.name));
      const auto& hs = homs.at({f.src, g.tgt});
      bool found = false;
      for (std::size_t k = 0; k < hs.size(); ++k) {
        if (functors_equal(hs[k], h)) {
          std::size_t i = std::find(result.object_names.begin(),
                                    result.object_names.end(), f.src) -
                          result.object_names.begin();
          std::size_t j = std::find(result.object_names.begin(),
                                    result.object_names.end(), g.tgt) -
                          result.object_names.begin();
          comp[{f.name, g.name}] = "F" + std::to_string(i) + "_" +
                                   std::to_string(j) + "_" + std::to_string(k);
          found = true;
          break;
        }
      }
      if (!found)
        fail(errc::missing_composite,
             "composite functor missing from enumeration");
    }
  }
  result.cat =
      FinCategory::assemble(result.object_names, mors, identities, comp);
  return result;
}

LawReport check_naturality(const NatTransData& t) {
  const FunctorData& F = *t.F;
  const FunctorData& G = *t.G;
  if (F.source != G.source || F.target != G.target)
    fail(errc::source_target_mismatch,
         "natural transformation between functors with different ends");
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  for (const ObjId& a : C.objects()) {
    auto it = t.components.find(a);
    if (it == t.components.end())
      fail(errc::source_target_mismatch, "missing component at " + a);
    const MorDecl& c = D.mor(it->second);
    if (c.src != F.obj_map.at(a) || c.tgt != G.obj_map.at(a))
      fail(errc::source_target_mismatch, "component at " + a + " is ill-typed");
  }
  LawReport report;
  for (const MorDecl& f : C.morphisms()) {
    const std::string& lhs =
        D.compose(t.components.at(f.src), G.mor_map.at(f.name));
    const std::string& rhs =
        D.compose(F.mor_map.at(f.name), t.components.at(f.tgt));
    if (lhs != rhs)
      report.add("naturality", {f.name},
                 "component_" + f.src + " ; G(" + f.name + ") = " + lhs +
                     " but F(" + f.name + ") ; component_" + f.tgt + " = " + rhs);
  }
  return report;
}

ViewMor FreeFunctor::apply(const Path& p) const {
  if (!quiver->has_node(p.anchor))
    fail(errc::not_a_path, "path anchored at unknown node " + p.anchor);
  ViewMor acc = target->identity_of(node_map.at(p.anchor));
  ObjId at = p.anchor;
  for (const std::string& step : p.steps) {
    const Edge& e = quiver->edge(step);
    if (e.src != at) fail(errc::not_a_path, "steps are not composable");
    acc = target->compose(acc, edge_map.at(step));
    at = e.tgt;
  }
  return acc;
}

FreeFunctor free_functor_extend(const Quiver& q, const CategoryView& target,
                                std::map<ObjId, ObjId> node_map,
                                std::map<std::string, ViewMor> edge_map) {
  FreeFunctor F;
  F.quiver = &q;
  F.target = &target;
  F.node_map = std::move(node_map);
  F.edge_map = std::move(edge_map);
  for (const ObjId& n : q.nodes()) {
    auto it = F.node_map.find(n);
    if (it == F.node_map.end())
      fail(errc::ill_typed_edge_image, "node_map not total at " + n);
    if (!target.has_object(it->second))
      fail(errc::ill_typed_edge_image,
           "node_map sends " + n + " outside the target");
  }
  for (const Edge& e : q.edges()) {
    auto it = F.edge_map.find(e.name);
    if (it == F.edge_map.end())
      fail(errc::ill_typed_edge_image, "edge_map not total at " + e.name);
    if (it->second.src != F.node_map.at(e.src) ||
        it->second.tgt != F.node_map.at(e.tgt))
      fail(errc::ill_typed_edge_image, "edge image ill-typed at " + e.name);
  }
  return F;
}

LawReport check_free_functor_laws(const FreeFunctor& F, std::size_t max_len) {
  LawReport report;
  const Quiver& q = *F.quiver;
  std::vector<Path> all;
  for (const ObjId& a : q.nodes()) {
    ViewMor img = F.apply(path_identity(q, a));
    ViewMor want = F.target->identity_of(F.node_map.at(a));
    if (!F.target->equal(img, want))
      report.add("functor-identity", {a},
                 "empty path at " + a + " maps to " + img.repr);
    for (const ObjId& b : q.nodes())
      for (const Path& p : hom_paths(q, a, b, max_len)) all.push_back(p);
  }
  for (const Path& p1 : all)
    for (const Path& p2 : all) {
      if (path_target(q, p1) !=
          (p2.steps.empty() ? p2.anchor : q.edge(p2.steps.front()).src))
        continue;
      ViewMor lhs = F.apply(path_compose(q, p1, p2));
      ViewMor rhs = F.target->compose(F.apply(p1), F.apply(p2));
      if (!F.target->equal(lhs, rhs))
        report.add("functor-composition",
                   {FreeCategoryView::to_mor(q, p1).repr,
                    FreeCategoryView::to_mor(q, p2).repr},
                   "fold of concatenation disagrees with composed folds");
    }
  return report;
}

}  // namespace catk
