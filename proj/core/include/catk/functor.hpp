#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catk/kernel.hpp"
#include "catk/quiver.hpp"

namespace catk {

// Functor between tabulated categories. mor_map is total (identities
// included); the laws are checked, never assumed.
struct FunctorData {
  const FinCategory* source = nullptr;
  const FinCategory* target = nullptr;
  std::map<ObjId, ObjId> obj_map;
  std::map<std::string, std::string> mor_map;
};

FunctorData identity_functor(const FinCategory& cat);

// Validates typing; identity entries missing from mor_map are filled with
// the identities of the image objects (explicit entries win, so a broken
// identity image can be expressed for testing the checker).
FunctorData make_functor(const FinCategory& source, const FinCategory& target,
                         std::map<ObjId, ObjId> obj_map,
                         std::map<std::string, std::string> mor_map);

LawReport check_functor_laws(const FunctorData& F);

FunctorData compose_functors(const FunctorData& F, const FunctorData& G);

bool functors_equal(const FunctorData& F, const FunctorData& G);

// All law-passing functors C -> D, lexicographic over obj_map then mor_map
// (value order = declaration order in D).
std::vector<FunctorData> enumerate_functors(const FinCategory& C,
                                            const FinCategory& D);

// Cat at desk scale: objects are the given categories, hom-sets are the
// enumerated functors. Functor names are hom_<i>_<j>_<k>.
struct CatCategory {
  FinCategory cat;
  std::vector<std::string> object_names;
  std::vector<const FinCategory*> object_cats;
  std::map<std::string, FunctorData> functor_of;  // morphism name -> functor
};

CatCategory cat_category(const std::vector<const FinCategory*>& cats,
                         std::size_t cap = instance_budget());

struct NatTransData {
  const FunctorData* F = nullptr;
  const FunctorData* G = nullptr;
  std::map<ObjId, std::string> components;  // a -> (F a -> G a)
};

LawReport check_naturality(const NatTransData& t);

// The functor out of a free category determined by node and edge images;
// a path maps to the fold of its edge images in the target view.
struct FreeFunctor {
  const Quiver* quiver = nullptr;
  const CategoryView* target = nullptr;
  std::map<ObjId, ObjId> node_map;
  std::map<std::string, ViewMor> edge_map;

  ViewMor apply(const Path& p) const;
};

FreeFunctor free_functor_extend(const Quiver& q, const CategoryView& target,
                                std::map<ObjId, ObjId> node_map,
                                std::map<std::string, ViewMor> edge_map);

// Bounded functoriality sweep over enumerated paths.
LawReport check_free_functor_laws(const FreeFunctor& F, std::size_t max_len);

}  // namespace catk
