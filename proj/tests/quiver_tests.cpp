#include <doctest.h>

#include "catk/quiver.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catk;

TEST_CASE("quiver builder validates") {
  CHECK_THROWS_AS(build_quiver({"A"}, {{"a", "A", "C"}}), CatError);
  CHECK_THROWS_AS(build_quiver({"A"}, {{"a", "A", "A"}, {"a", "A", "A"}}),
                  CatError);
}

TEST_CASE("path enumeration matches the matrix oracle") {
  Quiver q = fixtures::ab_quiver();
  for (const ObjId& a : {"A", "B"})
    for (const ObjId& b : {"A", "B"})
      for (std::size_t len = 0; len <= 6; ++len) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(len);
        CHECK(hom_paths(q, a, b, len).size() ==
              oracles::path_count_matrix(q, a, b, len));
      }
  CHECK(hom_paths(q, "A", "A", 4).size() == 3);
}

TEST_CASE("paths come in length-then-lexicographic order") {
  Quiver q = build_quiver({"A"}, {{"a", "A", "A"}, {"b", "A", "A"}});
  auto paths = hom_paths(q, "A", "A", 2);
  REQUIRE(paths.size() == 7);
  CHECK(paths[0].steps.empty());
  CHECK(paths[1].steps == std::vector<std::string>{"a"});
  CHECK(paths[2].steps == std::vector<std::string>{"b"});
  CHECK(paths[3].steps == std::vector<std::string>{"a", "a"});
  CHECK(paths[6].steps == std::vector<std::string>{"b", "b"});
}

TEST_CASE("path composition is concatenation with endpoint checks") {
  Quiver q = fixtures::ab_quiver();
  Path p = path_compose(q, {"A", {"a"}}, {"B", {"b"}});
  CHECK(p == Path{"A", {"a", "b"}});
  CHECK(path_target(q, p) == "A");
  CHECK_THROWS_AS(path_compose(q, {"A", {"a"}}, {"A", {"a"}}), CatError);
}

TEST_CASE("free category view behaves categorically") {
  auto view = free_category(fixtures::ab_quiver());
  ViewMor id_a = view->identity_of("A");
  auto homs = view->hom("A", "B", 3);
  REQUIRE(!homs.empty());
  ViewMor ab = homs.front();
  CHECK(view->compose(id_a, ab) == ab);
  CHECK(view->equal(view->compose(ab, view->identity_of("B")), ab));
  CHECK(check_free_category_laws(fixtures::ab_quiver(), 4).ok());
}

TEST_CASE("finite monoid builder checks the axioms") {
  // a*e = e breaks the right unit law
  CHECK_THROWS_AS(
      FiniteMonoid::build({"e", "a"}, "e", {{"e", "a"}, {"e", "a"}}),
      CatError);
  // lawful: absorption monoid
  CHECK_NOTHROW(
      FiniteMonoid::build({"e", "a"}, "e", {{"e", "a"}, {"a", "a"}}));
}

TEST_CASE("monoid as a one-object category") {
  FiniteMonoid z2m =
      FiniteMonoid::build({"e", "s"}, "e", {{"e", "s"}, {"s", "e"}});
  FinCategory cat = monoid_as_category(z2m);
  CHECK(cat.objects().size() == 1);
  CHECK(check_category_laws(cat).ok());
  CHECK(cat.compose("s", "s") == "e");
}
