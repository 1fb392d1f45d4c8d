#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catk/kernel.hpp"
#include "catk/quiver.hpp"
#include "catk/smc.hpp"

namespace catk::dsl {

enum class DocKind { category, quiver, signature, functor, assignment };

// Maps .cat/.qv/.sig/.fun/.asg; throws ParseError for anything else.
DocKind kind_from_extension(const std::string& path);
std::string kind_name(DocKind k);

struct Span {
  int line = 0;  // 1-based; 0 = no position
  int col = 0;
};

struct ParseError {
  std::string kind;  // "SyntaxError" or "SemanticError"
  Span span;
  std::string message;
};

struct CatDoc {
  std::vector<ObjId> objects;
  std::vector<MorDecl> morphisms;
  // (f, g, h) meaning f-then-g = h; identity composites implicit.
  std::vector<std::array<std::string, 3>> comp_entries;

  friend bool operator==(const CatDoc&, const CatDoc&) = default;
};

struct QuiverDoc {
  std::vector<ObjId> nodes;
  std::vector<Edge> edges;

  friend bool operator==(const QuiverDoc&, const QuiverDoc&) = default;
};

struct SigDoc {
  std::vector<std::string> objects;
  std::vector<GenDecl> gens;

  friend bool operator==(const SigDoc&, const SigDoc&) = default;
};

struct FunDoc {
  std::string name;
  std::string src_file;
  std::string tgt_file;
  std::vector<std::pair<std::string, std::string>> obj_map;
  std::vector<std::pair<std::string, std::string>> mor_map;

  friend bool operator==(const FunDoc&, const FunDoc&) = default;
};

struct AsgDoc {
  std::vector<std::pair<std::string, std::size_t>> nodes;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> edges;

  friend bool operator==(const AsgDoc&, const AsgDoc&) = default;
};

// Tagged union of the five payloads; spans map declaration names to source
// positions and are not part of structural equality.
struct Document {
  DocKind kind = DocKind::category;
  CatDoc cat;
  QuiverDoc qv;
  SigDoc sig;
  FunDoc fun;
  AsgDoc asg;
  std::multimap<std::string, Span> spans;

  friend bool operator==(const Document& a, const Document& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case DocKind::category: return a.cat == b.cat;
      case DocKind::quiver: return a.qv == b.qv;
      case DocKind::signature: return a.sig == b.sig;
      case DocKind::functor: return a.fun == b.fun;
      case DocKind::assignment: return a.asg == b.asg;
    }
    return false;
  }
};

struct ParseResult {
  std::optional<Document> doc;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty() && doc.has_value(); }
};

// Line-oriented parse; '#' starts a comment. Semantic validation runs the
// owning module's builder, so nothing parses here that the builder rejects.
ParseResult parse_document(const std::string& text, DocKind kind);

// Canonical text: sections in fixed order (objects, then morphisms, then
// comp entries), declaration order preserved within a section.
// parse(print(doc)) is structurally equal to doc.
std::string print_document(const Document& doc);

// Builders over parsed payloads (semantic errors surface as CatError).
FinCategory build_category(const CatDoc& doc);
Quiver build_quiver_doc(const QuiverDoc& doc);
Signature build_signature_doc(const SigDoc& doc);

// "1" or '.'-separated tokens.
Word parse_word(const std::string& text);

// Term grammar: id(w) | sym(u,v) | generator name | term ; term |
// term * term | (term); '*' binds tighter than ';'. Throws CatError.
Diagram parse_smc_term(const std::string& text, const Signature& sig);

}  // namespace catk::dsl
