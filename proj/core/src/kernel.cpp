#include "catk/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace catk {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

FinCategory FinCategory::assemble(
    std::vector<ObjId> objects, std::vector<MorDecl> morphisms,
    std::map<ObjId, std::string> identities,
    std::map<std::pair<std::string, std::string>, std::string> comp) {
  FinCategory cat;
  cat.objects_ = std::move(objects);
  cat.mors_ = std::move(morphisms);
  cat.identity_ = std::move(identities);
  cat.comp_ = std::move(comp);

  std::set<ObjId> objset;
  for (const auto& a : cat.objects_) {
    if (a.empty()) fail(errc::unknown_object, "empty object name");
    if (!objset.insert(a).second)
      fail(errc::duplicate_id, "object " + a + " declared twice");
  }
  for (std::size_t i = 0; i < cat.mors_.size(); ++i) {
    const MorDecl& m = cat.mors_[i];
    if (m.name.empty()) fail(errc::duplicate_id, "empty morphism name");
    if (!objset.count(m.src))
      fail(errc::unknown_object, "morphism " + m.name + " has unknown source " + m.src);
    if (!objset.count(m.tgt))
      fail(errc::unknown_object, "morphism " + m.name + " has unknown target " + m.tgt);
    if (!cat.mor_index_.emplace(m.name, i).second)
      fail(errc::duplicate_id, "morphism " + m.name + " declared twice");
    cat.homs_[{m.src, m.tgt}].push_back(m.name);
  }
  for (const auto& a : cat.objects_) {
    auto it = cat.identity_.find(a);
    if (it == cat.identity_.end())
      fail(errc::unknown_object, "no identity declared for " + a);
    const MorDecl& id = cat.mor(it->second);
    if (id.src != a || id.tgt != a)
      fail(errc::identity_conflict, "identity of " + a + " is not an endomorphism");
  }
  // Composition: total on composable pairs, well-typed values.
  for (const MorDecl& f : cat.mors_) {
    for (const MorDecl& g : cat.mors_) {
      if (f.tgt != g.src) continue;
      auto it = cat.comp_.find({f.name, g.name});
      if (it == cat.comp_.end())
        fail(errc::missing_composite,
             "no composite for " + f.name + " ; " + g.name);
      const MorDecl& h = cat.mor(it->second);
      if (h.src != f.src || h.tgt != g.tgt)
        fail(errc::ill_typed_composite,
             f.name + " ; " + g.name + " = " + h.name + " is ill-typed");
    }
  }
  for (const auto& [pair, h] : cat.comp_) {
    if (!cat.has_morphism(pair.first) || !cat.has_morphism(pair.second))
      fail(errc::unknown_morphism,
           "composition entry over unknown morphisms " + pair.first + ", " +
               pair.second);
    if (cat.mor(pair.first).tgt != cat.mor(pair.second).src)
      fail(errc::not_composable,
           "composition entry for non-composable pair " + pair.first + ", " +
               pair.second);
    (void)h;
  }
  return cat;
}

bool FinCategory::has_object(const ObjId& a) const {
  return std::find(objects_.begin(), objects_.end(), a) != objects_.end();
}

bool FinCategory::has_morphism(const std::string& name) const {
  return mor_index_.count(name) != 0;
}

const MorDecl& FinCategory::mor(const std::string& name) const {
  auto it = mor_index_.find(name);
  if (it == mor_index_.end())
    fail(errc::unknown_morphism, "no morphism named " + name);
  return mors_[it->second];
}

const std::string& FinCategory::identity(const ObjId& a) const {
  auto it = identity_.find(a);
  if (it == identity_.end()) fail(errc::unknown_object, "no object named " + a);
  return it->second;
}

bool FinCategory::is_identity(const std::string& name) const {
  const MorDecl& m = mor(name);
  return m.src == m.tgt && identity(m.src) == name;
}

const std::vector<std::string>& FinCategory::hom(const ObjId& a,
                                                 const ObjId& b) const {
  static const std::vector<std::string> empty;
  if (!has_object(a)) fail(errc::unknown_object, "no object named " + a);
  if (!has_object(b)) fail(errc::unknown_object, "no object named " + b);
  auto it = homs_.find({a, b});
  return it == homs_.end() ? empty : it->second;
}

const std::string& FinCategory::compose(const std::string& f,
                                        const std::string& g) const {
  const MorDecl& mf = mor(f);
  const MorDecl& mg = mor(g);
  if (mf.tgt != mg.src)
    fail(errc::not_composable, f + " ; " + g + " (target " + mf.tgt +
                                   " vs source " + mg.src + ")");
  return comp_.at({f, g});
}

FinCategory FinCategory::with_comp_entry(const std::string& f,
                                         const std::string& g,
                                         const std::string& h) const {
  const MorDecl& mf = mor(f);
  const MorDecl& mg = mor(g);
  const MorDecl& mh = mor(h);
  if (mf.tgt != mg.src) fail(errc::not_composable, f + " ; " + g);
  if (mh.src != mf.src || mh.tgt != mg.tgt)
    fail(errc::ill_typed_composite, f + " ; " + g + " = " + h);
  FinCategory out = *this;
  out.comp_[{f, g}] = h;
  return out;
}

FinCategory build_fin_category(
    const std::vector<ObjId>& objects, const std::vector<MorDecl>& morphisms,
    const std::vector<std::array<std::string, 3>>& comp_entries) {
  for (const auto& a : objects)
    if (!valid_token(a)) fail(errc::unknown_object, "bad object token " + a);

  std::vector<MorDecl> mors;
  std::map<ObjId, std::string> identities;
  for (const auto& a : objects) {
    std::string id = "id_" + a;
    mors.push_back({id, a, a});
    identities[a] = id;
  }
  for (const MorDecl& m : morphisms) {
    if (!valid_token(m.name))
      fail(errc::duplicate_id, "bad morphism token " + m.name);
    if (m.name.rfind("id_", 0) == 0)
      fail(errc::duplicate_id, "morphism name " + m.name + " is reserved");
    mors.push_back(m);
  }

  // Identity composites are forced; user entries may restate but not
  // contradict them.
  auto find_mor = [&](const std::string& n) -> const MorDecl* {
    for (const MorDecl& m : mors)
      if (m.name == n) return &m;
    return nullptr;
  };
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const MorDecl& m : mors) {
    comp[{identities[m.src], m.name}] = m.name;
    comp[{m.name, identities[m.tgt]}] = m.name;
  }

  for (const auto& [f, g, h] : comp_entries) {
    const MorDecl* mf = find_mor(f);
    const MorDecl* mg = find_mor(g);
    const MorDecl* mh = find_mor(h);
    if (!mf) fail(errc::unknown_morphism, "comp entry names unknown " + f);
    if (!mg) fail(errc::unknown_morphism, "comp entry names unknown " + g);
    if (!mh) fail(errc::unknown_morphism, "comp entry names unknown " + h);
    if (mf->tgt != mg->src)
      fail(errc::not_composable, "comp entry " + f + " ; " + g);
    if (mh->src != mf->src || mh->tgt != mg->tgt)
      fail(errc::ill_typed_composite, f + " ; " + g + " = " + h);
    auto it = comp.find({f, g});
    if (it != comp.end() && it->second != h)
      fail(errc::identity_conflict,
           f + " ; " + g + " = " + h + " contradicts forced value " +
               it->second);
    comp[{f, g}] = h;
  }
  return FinCategory::assemble(objects, mors, identities, comp);
}

LawReport check_category_laws(const FinCategory& cat) {
  LawReport report;
  for (const MorDecl& f : cat.morphisms()) {
    const std::string& ida = cat.identity(f.src);
    const std::string& idb = cat.identity(f.tgt);
    if (cat.compose(ida, f.name) != f.name)
      report.add("left-identity", {f.name},
                 ida + " ; " + f.name + " = " + cat.compose(ida, f.name) +
                     " but expected " + f.name);
    if (cat.compose(f.name, idb) != f.name)
      report.add("right-identity", {f.name},
                 f.name + " ; " + idb + " = " + cat.compose(f.name, idb) +
                     " but expected " + f.name);
  }
  for (const MorDecl& f : cat.morphisms()) {
    for (const MorDecl& g : cat.morphisms()) {
      if (f.tgt != g.src) continue;
      const std::string& fg = cat.compose(f.name, g.name);
      for (const MorDecl& h : cat.morphisms()) {
        if (g.tgt != h.src) continue;
        const std::string& gh = cat.compose(g.name, h.name);
        const std::string& left = cat.compose(fg, h.name);
        const std::string& right = cat.compose(f.name, gh);
        if (left != right)
          report.add("associativity", {f.name, g.name, h.name},
                     "(" + f.name + ";" + g.name + ");" + h.name + " = " +
                         left + " but " + f.name + ";(" + g.name + ";" +
                         h.name + ") = " + right);
      }
    }
  }
  return report;
}

FinCategory opposite_category(const FinCategory& cat) {
  std::vector<MorDecl> mors;
  mors.reserve(cat.morphisms().size());
  for (const MorDecl& m : cat.morphisms()) mors.push_back({m.name, m.tgt, m.src});
  std::map<ObjId, std::string> identities;
  for (const ObjId& a : cat.objects()) identities[a] = cat.identity(a);
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const auto& [pair, h] : cat.comp_table())
    comp[{pair.second, pair.first}] = h;
  return FinCategory::assemble(cat.objects(), mors, identities, comp);
}

std::string fold_path(const FinCategory& cat, const MorPath& p) {
  if (p.mors.empty()) {
    if (!cat.has_object(p.anchor))
      fail(errc::unknown_object, "path anchored at unknown object " + p.anchor);
    return cat.identity(p.anchor);
  }
  std::string acc = p.mors.front();
  if (!cat.has_morphism(acc))
    fail(errc::unknown_morphism, "path step " + acc);
  if (!p.anchor.empty() && cat.mor(acc).src != p.anchor)
    fail(errc::endpoint_mismatch,
         "path anchored at " + p.anchor + " starts with " + acc);
  for (std::size_t i = 1; i < p.mors.size(); ++i)
    acc = cat.compose(acc, p.mors[i]);
  return acc;
}

static ObjId path_source(const FinCategory& cat, const MorPath& p) {
  return p.mors.empty() ? p.anchor : cat.mor(p.mors.front()).src;
}
static ObjId path_target(const FinCategory& cat, const MorPath& p) {
  return p.mors.empty() ? p.anchor : cat.mor(p.mors.back()).tgt;
}

bool commutes(const FinCategory& cat, const MorPath& p1, const MorPath& p2) {
  if (path_source(cat, p1) != path_source(cat, p2) ||
      path_target(cat, p1) != path_target(cat, p2))
    fail(errc::endpoint_mismatch, "paths are not parallel");
  return fold_path(cat, p1) == fold_path(cat, p2);
}

}  // namespace catk
