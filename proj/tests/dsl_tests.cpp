#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catk/dsl.hpp"
#include "fixtures.hpp"

using namespace catk;
namespace dsl = catk::dsl;

namespace {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("walking arrow text parses to a two-object category") {
  auto result = dsl::parse_document(
      "objects: A, B\nmor f : A -> B\n", dsl::DocKind::category);
  REQUIRE(result.ok());
  FinCategory cat = dsl::build_category(result.doc->cat);
  CHECK(cat.objects().size() == 2);
  CHECK(cat.morphisms().size() == 3);  // f plus two identities
  CHECK(cat.mor("f").tgt == "B");
}

TEST_CASE("semantic errors carry the offending line") {
  auto result = dsl::parse_document(
      "nodes: A, B\nedge a : A -> C\n", dsl::DocKind::quiver);
  REQUIRE_FALSE(result.ok());
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].kind == "SemanticError");
  CHECK(result.errors[0].span.line == 2);
  CHECK(result.errors[0].message.find("UnknownNode") != std::string::npos);
}

TEST_CASE("duplicate declarations report both spans") {
  auto result = dsl::parse_document(
      "objects: A, B\nmor f : A -> B\nmor f : A -> B\n",
      dsl::DocKind::category);
  REQUIRE_FALSE(result.ok());
  REQUIRE_FALSE(result.errors.empty());
  const auto& e = result.errors.front();
  CHECK(e.kind == "SemanticError");
  CHECK(e.message.find("2") != std::string::npos);
  CHECK(e.message.find("3") != std::string::npos);
}

TEST_CASE("syntax errors are positioned") {
  auto result =
      dsl::parse_document("objects: A\nmor f A -> A\n", dsl::DocKind::category);
  REQUIRE_FALSE(result.ok());
  CHECK(result.errors[0].kind == "SyntaxError");
  CHECK(result.errors[0].span.line == 2);
}

TEST_CASE("comments and blank lines are ignored") {
  auto result = dsl::parse_document(
      "# a comment\n\nobjects: A # trailing\n", dsl::DocKind::category);
  REQUIRE(result.ok());
  CHECK(result.doc->cat.objects == std::vector<ObjId>{"A"});
}

TEST_CASE("empty category prints to a bare objects line") {
  dsl::Document doc;
  doc.kind = dsl::DocKind::category;
  CHECK(dsl::print_document(doc) == "objects:\n");
}

TEST_CASE("all fixtures round-trip through print") {
  for (const std::string& name :
       {"walking_arrow.cat", "z2.cat", "div12.cat", "div30.cat",
        "nonassoc.cat", "ab.qv", "sig.sig", "arrow_to_z2.fun", "ab.asg"}) {
    CAPTURE(name);
    auto kind = dsl::kind_from_extension(name);
    auto first = dsl::parse_document(fixture_text(name), kind);
    if (name == "nonassoc.cat") {
      // law-violating but well-formed: the builder accepts the table
      REQUIRE(first.ok());
    }
    REQUIRE(first.ok());
    auto second = dsl::parse_document(dsl::print_document(*first.doc), kind);
    REQUIRE(second.ok());
    CHECK(*first.doc == *second.doc);
  }
}

TEST_CASE("extension dispatch") {
  CHECK(dsl::kind_from_extension("a/b/c.qv") == dsl::DocKind::quiver);
  CHECK_THROWS_AS(dsl::kind_from_extension("file.txt"), CatError);
}

TEST_CASE("word syntax") {
  CHECK(dsl::parse_word("1").empty());
  CHECK(dsl::parse_word("x.y.x") == Word{"x", "y", "x"});
  CHECK_THROWS_AS(dsl::parse_word("x..y"), CatError);
}

TEST_CASE("term grammar: precedence and shapes") {
  Signature sig = fixtures::merge_signature();
  // '*' binds tighter than ';'
  Diagram d = dsl::parse_smc_term("m * m ; m", sig);
  CHECK(d.dom == Word{"x", "x", "x", "x"});
  CHECK(d.cod == Word{"x"});
  CHECK(d.boxes.size() == 3);

  Diagram viaparens =
      dsl::parse_smc_term("(m * m) ; m", sig);
  CHECK(diagrams_equal(sig, d, viaparens));

  Diagram braid = dsl::parse_smc_term("sym(x,x)", sig);
  CHECK(diagrams_equal(
      sig, dsl::parse_smc_term("sym(x,x) ; sym(x,x)", sig),
      dsl::parse_smc_term("id(x.x)", sig)));
  CHECK(braid.dom == Word{"x", "x"});

  CHECK(dsl::parse_smc_term("id(1)", sig).dom.empty());
  CHECK_THROWS_AS(dsl::parse_smc_term("m ;", sig), CatError);
  CHECK_THROWS_AS(dsl::parse_smc_term("nope", sig), CatError);
  CHECK_THROWS_AS(dsl::parse_smc_term("m ; m", sig), CatError);  // word clash
}
