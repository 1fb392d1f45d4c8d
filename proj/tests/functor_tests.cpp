#include <doctest.h>

#include "catk/finset.hpp"
#include "catk/functor.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catk;

TEST_CASE("identity functor passes the laws") {
  FinCategory s3 = fixtures::s3();
  CHECK(check_functor_laws(identity_functor(s3)).ok());
}

TEST_CASE("make_functor validates typing") {
  FinCategory arrow = fixtures::walking_arrow();
  FinCategory z2 = fixtures::z2();
  CHECK_THROWS_AS(make_functor(arrow, z2, {{"A", "S"}, {"B", "nope"}},
                               {{"f", "s"}}),
                  CatError);
  FunctorData F =
      make_functor(arrow, z2, {{"A", "S"}, {"B", "S"}}, {{"f", "s"}});
  CHECK(F.mor_map.at("id_A") == "id_S");  // identity autofill
  CHECK(check_functor_laws(F).ok());
}

TEST_CASE("the checker catches a non-functor") {
  FinCategory z2 = fixtures::z2();
  // s;s = id in the source but the image breaks it: send id_S to s.
  FunctorData F = make_functor(z2, z2, {{"S", "S"}},
                               {{"s", "s"}, {"id_S", "s"}});
  CHECK_FALSE(check_functor_laws(F).ok());
}

TEST_CASE("enumeration matches brute force on small pairs") {
  std::vector<FinCategory> cats;
  cats.push_back(fixtures::trivial());
  cats.push_back(fixtures::walking_arrow());
  cats.push_back(fixtures::z2());
  cats.push_back(fixtures::discrete2());
  cats.push_back(fixtures::parallel_pair());
  for (const FinCategory& C : cats)
    for (const FinCategory& D : cats) {
      CAPTURE(C.objects().size());
      CAPTURE(D.objects().size());
      CHECK(enumerate_functors(C, D).size() ==
            oracles::brute_force_functor_count(C, D));
    }
  FinCategory arrow = fixtures::walking_arrow();
  CHECK(enumerate_functors(arrow, arrow).size() == 3);
}

TEST_CASE("functor composition and equality") {
  FinCategory arrow = fixtures::walking_arrow();
  FinCategory z2 = fixtures::z2();
  FunctorData F =
      make_functor(arrow, z2, {{"A", "S"}, {"B", "S"}}, {{"f", "s"}});
  FunctorData G = identity_functor(z2);
  FunctorData FG = compose_functors(F, G);
  CHECK(functors_equal(FG, F));
  CHECK_THROWS_AS(compose_functors(G, F), CatError);
}

TEST_CASE("Cat at desk scale is a category") {
  FinCategory t = fixtures::trivial();
  FinCategory arrow = fixtures::walking_arrow();
  FinCategory z2 = fixtures::z2();
  CatCategory C = cat_category({&t, &arrow, &z2});
  CHECK(check_category_laws(C.cat).ok());
  const std::vector<const FinCategory*> cats{&t, &arrow, &z2};
  for (std::size_t i = 0; i < cats.size(); ++i)
    for (std::size_t j = 0; j < cats.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(C.cat.hom(C.object_names[i], C.object_names[j]).size() ==
            enumerate_functors(*cats[i], *cats[j]).size());
    }
}

TEST_CASE("cap guards Cat tabulation") {
  FinCategory s3 = fixtures::s3();
  CHECK_THROWS_AS(cat_category({&s3, &s3}, 2), CatError);
}

TEST_CASE("naturality checking") {
  FinCategory pp = fixtures::parallel_pair();
  FinCategory z2 = fixtures::z2();
  FunctorData F = make_functor(pp, z2, {{"A", "S"}, {"B", "S"}},
                               {{"u", "id_S"}, {"v", "id_S"}});
  FunctorData G = make_functor(pp, z2, {{"A", "S"}, {"B", "S"}},
                               {{"u", "s"}, {"v", "s"}});
  NatTransData t{&F, &G, {{"A", "id_S"}, {"B", "s"}}};
  CHECK(check_naturality(t).ok());
  // well-typed but the square at u fails: id;id = id yet id;s = s
  NatTransData broken{&F, &G, {{"A", "id_S"}, {"B", "id_S"}}};
  LawReport r = check_naturality(broken);
  CHECK_FALSE(r.ok());
  // ill-typed components are structural, not law violations
  FinCategory arrow = fixtures::walking_arrow();
  FunctorData H = make_functor(arrow, z2, {{"A", "S"}, {"B", "S"}},
                               {{"f", "s"}});
  NatTransData illtyped{&F, &G, {{"A", "id_S"}}};
  CHECK_THROWS_AS(check_naturality(illtyped), CatError);
  (void)H;
}

TEST_CASE("free functor extension into finite sets") {
  Quiver q = fixtures::ab_quiver();
  auto view = finset_category(3);
  std::map<ObjId, ObjId> nodes{{"A", "2"}, {"B", "2"}};
  std::map<std::string, ViewMor> edges{
      {"a", FinSetView::to_mor({2, 2, {1, 0}})},
      {"b", FinSetView::to_mor({2, 2, {0, 1}})}};
  FreeFunctor F = free_functor_extend(q, *view, nodes, edges);
  CHECK(check_free_functor_laws(F, 4).ok());
  ViewMor round = F.apply({"A", {"a", "b"}});
  CHECK(FinSetView::to_function(round).table == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(
      free_functor_extend(q, *view, nodes,
                          {{"a", FinSetView::to_mor({2, 3, {0, 1}})},
                           {"b", FinSetView::to_mor({2, 2, {0, 1}})}}),
      CatError);
}
