#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catk/error.hpp"

namespace catk {

using ObjId = std::string;

struct MorDecl {
  std::string name;
  ObjId src;
  ObjId tgt;

  friend bool operator==(const MorDecl&, const MorDecl&) = default;
};

struct Violation {
  std::string law;  // left-identity, right-identity, associativity, ...
  std::vector<std::string> witnesses;
  std::string detail;
};

struct LawReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<std::string> witnesses,
           std::string detail) {
    violations.push_back(
        {std::move(law), std::move(witnesses), std::move(detail)});
  }
  void merge(const LawReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

// Composable sequence of morphism names; an empty path is anchored at an
// object and folds to its identity.
struct MorPath {
  ObjId anchor;
  std::vector<std::string> mors;
};

// Fully tabulated finite category. Hom-sets are enumerated and morphism
// equality is name equality; identity names are arbitrary (the DSL reserves
// id_<obj> but embeddings such as monoid_as_category pick their own).
class FinCategory {
public:
  FinCategory() = default;

  // Structural assembly: validates typing and totality of the data, not the
  // category laws (check_category_laws is the law gate). `morphisms` must
  // already contain the identities named by `identities`; `comp` must be the
  // full table over composable pairs.
  static FinCategory assemble(
      std::vector<ObjId> objects, std::vector<MorDecl> morphisms,
      std::map<ObjId, std::string> identities,
      std::map<std::pair<std::string, std::string>, std::string> comp);

  const std::vector<ObjId>& objects() const { return objects_; }
  const std::vector<MorDecl>& morphisms() const { return mors_; }

  bool has_object(const ObjId& a) const;
  bool has_morphism(const std::string& name) const;
  const MorDecl& mor(const std::string& name) const;
  const std::string& identity(const ObjId& a) const;
  bool is_identity(const std::string& name) const;

  // Morphism names from a to b in declaration order; empty if none.
  const std::vector<std::string>& hom(const ObjId& a, const ObjId& b) const;

  // Diagrammatic composition: f then g. Throws NotComposable.
  const std::string& compose(const std::string& f, const std::string& g) const;

  const std::map<std::pair<std::string, std::string>, std::string>&
  comp_table() const {
    return comp_;
  }

  // Copy with one composition entry replaced; h must live in the right
  // hom-set. Used for mutation sweeps; the result may break the laws.
  FinCategory with_comp_entry(const std::string& f, const std::string& g,
                              const std::string& h) const;

private:
  std::vector<ObjId> objects_;
  std::vector<MorDecl> mors_;
  std::map<std::string, std::size_t> mor_index_;
  std::map<std::pair<ObjId, ObjId>, std::vector<std::string>> homs_;
  std::map<ObjId, std::string> identity_;
  std::map<std::pair<std::string, std::string>, std::string> comp_;
};

// Presentation-level builder: identities are created automatically as
// id_<obj> (the name is reserved), identity composites are auto-filled, and
// supplied entries that contradict an auto-filled one are rejected.
// comp_entries are (f, g, h) triples meaning f;g = h.
FinCategory build_fin_category(
    const std::vector<ObjId>& objects, const std::vector<MorDecl>& morphisms,
    const std::vector<std::array<std::string, 3>>& comp_entries);

// Exhaustive sweep of both identity laws and associativity.
LawReport check_category_laws(const FinCategory& cat);

FinCategory opposite_category(const FinCategory& cat);

// Folds both paths through compose and compares. Paths must be parallel.
bool commutes(const FinCategory& cat, const MorPath& p1, const MorPath& p2);

// Fold of a path; the empty path yields the anchor's identity.
std::string fold_path(const FinCategory& cat, const MorPath& p);

// DSL token: letters, digits, underscore; non-empty.
bool valid_token(const std::string& s);

}  // namespace catk
