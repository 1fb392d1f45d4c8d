#include "catk/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace catk::dsl {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

// Comma list; an empty tail (e.g. after "objects:") yields no items.
std::vector<std::string> comma_list(const std::string& s) {
  if (trim(s).empty()) return {};
  return split(s, ',');
}

struct LineScanner {
  std::vector<std::pair<int, std::string>> lines;  // (1-based line, content)

  explicit LineScanner(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
      ++n;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (!raw.empty()) lines.emplace_back(n, raw);
    }
  }
};

struct Errors {
  std::vector<ParseError>& sink;

  void syntax(int line, const std::string& msg) {
    sink.push_back({"SyntaxError", {line, 1}, msg});
  }
  void semantic(int line, const std::string& msg) {
    sink.push_back({"SemanticError", {line, 1}, msg});
  }
};

// "mor f : A -> B" after the keyword: "f : A -> B". Returns (name, lhs, rhs).
bool parse_arrow_decl(const std::string& rest, std::string& name,
                      std::string& lhs, std::string& rhs) {
  std::size_t colon = rest.find(':');
  if (colon == std::string::npos) return false;
  name = trim(rest.substr(0, colon));
  std::string typing = rest.substr(colon + 1);
  std::size_t arrow = typing.find("->");
  if (arrow == std::string::npos) return false;
  lhs = trim(typing.substr(0, arrow));
  rhs = trim(typing.substr(arrow + 2));
  return !name.empty() && !lhs.empty() && !rhs.empty();
}

bool starts_with(const std::string& s, const std::string& prefix,
                 std::string& rest) {
  if (s.rfind(prefix, 0) != 0) return false;
  rest = trim(s.substr(prefix.size()));
  return true;
}

void note_span(Document& doc, const std::string& name, int line) {
  doc.spans.insert({name, Span{line, 1}});
}

void report_duplicates(const Document& doc, Errors& err,
                       const std::string& what,
                       const std::vector<std::string>& names) {
  std::vector<std::string> seen;
  for (const std::string& n : names) {
    if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
    seen.push_back(n);
    auto [b, e] = doc.spans.equal_range(n);
    if (std::distance(b, e) < 2) continue;
    std::string lines;
    for (auto it = b; it != e; ++it) {
      if (!lines.empty()) lines += ", ";
      lines += std::to_string(it->second.line);
    }
    err.semantic(b->second.line,
                 "DuplicateId: " + what + " " + n + " declared at lines " + lines);
  }
}

void parse_cat(const LineScanner& sc, Document& doc, Errors& err) {
  bool saw_objects = false;
  std::vector<std::string> mor_names;
  for (const auto& [lineno, line] : sc.lines) {
    std::string rest;
    if (starts_with(line, "objects:", rest)) {
      if (saw_objects) {
        err.syntax(lineno, "repeated objects: line");
        continue;
      }
      saw_objects = true;
      doc.cat.objects = comma_list(rest);
      for (const std::string& o : doc.cat.objects) note_span(doc, o, lineno);
    } else if (starts_with(line, "mor ", rest)) {
      std::string name, src, tgt;
      if (!parse_arrow_decl(rest, name, src, tgt)) {
        err.syntax(lineno, "expected 'mor <name> : <obj> -> <obj>'");
        continue;
      }
      doc.cat.morphisms.push_back({name, src, tgt});
      mor_names.push_back(name);
      note_span(doc, name, lineno);
    } else if (starts_with(line, "comp ", rest)) {
      // comp f g = h
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        err.syntax(lineno, "expected 'comp <f> <g> = <h>'");
        continue;
      }
      std::istringstream pair(trim(rest.substr(0, eq)));
      std::string f, g, extra;
      std::string h = trim(rest.substr(eq + 1));
      if (!(pair >> f >> g) || (pair >> extra) || h.empty()) {
        err.syntax(lineno, "expected 'comp <f> <g> = <h>'");
        continue;
      }
      doc.cat.comp_entries.push_back({f, g, h});
      note_span(doc, "comp " + f + " " + g, lineno);
    } else {
      err.syntax(lineno, "expected objects:, mor, or comp declaration");
    }
  }
  if (!saw_objects) err.syntax(1, "missing objects: line");
  report_duplicates(doc, err, "morphism", mor_names);
}

void parse_qv(const LineScanner& sc, Document& doc, Errors& err) {
  bool saw_nodes = false;
  std::vector<std::string> edge_names;
  for (const auto& [lineno, line] : sc.lines) {
    std::string rest;
    if (starts_with(line, "nodes:", rest)) {
      if (saw_nodes) {
        err.syntax(lineno, "repeated nodes: line");
        continue;
      }
      saw_nodes = true;
      doc.qv.nodes = comma_list(rest);
      for (const std::string& n : doc.qv.nodes) note_span(doc, n, lineno);
    } else if (starts_with(line, "edge ", rest)) {
      std::string name, src, tgt;
      if (!parse_arrow_decl(rest, name, src, tgt)) {
        err.syntax(lineno, "expected 'edge <name> : <node> -> <node>'");
        continue;
      }
      doc.qv.edges.push_back({name, src, tgt});
      edge_names.push_back(name);
      note_span(doc, name, lineno);
    } else {
      err.syntax(lineno, "expected nodes: or edge declaration");
    }
  }
  if (!saw_nodes) err.syntax(1, "missing nodes: line");
  report_duplicates(doc, err, "edge", edge_names);
}

void parse_sig(const LineScanner& sc, Document& doc, Errors& err) {
  bool saw_objects = false;
  std::vector<std::string> gen_names;
  for (const auto& [lineno, line] : sc.lines) {
    std::string rest;
    if (starts_with(line, "objects:", rest)) {
      if (saw_objects) {
        err.syntax(lineno, "repeated objects: line");
        continue;
      }
      saw_objects = true;
      doc.sig.objects = comma_list(rest);
      for (const std::string& o : doc.sig.objects) note_span(doc, o, lineno);
    } else if (starts_with(line, "gen ", rest)) {
      std::string name, dom, cod;
      if (!parse_arrow_decl(rest, name, dom, cod)) {
        err.syntax(lineno, "expected 'gen <name> : <word> -> <word>'");
        continue;
      }
      doc.sig.gens.push_back({name, parse_word(dom), parse_word(cod)});
      gen_names.push_back(name);
      note_span(doc, name, lineno);
    } else {
      err.syntax(lineno, "expected objects: or gen declaration");
    }
  }
  if (!saw_objects) err.syntax(1, "missing objects: line");
  report_duplicates(doc, err, "generator", gen_names);
}

bool parse_mapsto(const std::string& rest, std::string& from, std::string& to) {
  std::size_t arrow = rest.find("|->");
  if (arrow == std::string::npos) return false;
  from = trim(rest.substr(0, arrow));
  to = trim(rest.substr(arrow + 3));
  return !from.empty() && !to.empty();
}

void parse_fun(const LineScanner& sc, Document& doc, Errors& err) {
  bool saw_header = false;
  std::vector<std::string> keys;
  for (const auto& [lineno, line] : sc.lines) {
    std::string rest;
    if (starts_with(line, "functor ", rest)) {
      std::string name, src, tgt;
      if (saw_header || !parse_arrow_decl(rest, name, src, tgt)) {
        err.syntax(lineno, "expected one 'functor <name> : <src> -> <tgt>'");
        continue;
      }
      saw_header = true;
      doc.fun.name = name;
      doc.fun.src_file = src;
      doc.fun.tgt_file = tgt;
      note_span(doc, name, lineno);
    } else if (starts_with(line, "obj ", rest)) {
      std::string from, to;
      if (!parse_mapsto(rest, from, to)) {
        err.syntax(lineno, "expected 'obj <A> |-> <X>'");
        continue;
      }
      doc.fun.obj_map.emplace_back(from, to);
      keys.push_back("obj " + from);
      note_span(doc, "obj " + from, lineno);
    } else if (starts_with(line, "mor ", rest)) {
      std::string from, to;
      if (!parse_mapsto(rest, from, to)) {
        err.syntax(lineno, "expected 'mor <f> |-> <g>'");
        continue;
      }
      doc.fun.mor_map.emplace_back(from, to);
      keys.push_back("mor " + from);
      note_span(doc, "mor " + from, lineno);
    } else {
      err.syntax(lineno, "expected functor, obj, or mor declaration");
    }
  }
  if (!saw_header) err.syntax(1, "missing functor header");
  report_duplicates(doc, err, "mapping", keys);
}

bool parse_size(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

void parse_asg(const LineScanner& sc, Document& doc, Errors& err) {
  std::vector<std::string> keys;
  for (const auto& [lineno, line] : sc.lines) {
    std::string rest;
    if (starts_with(line, "node ", rest)) {
      std::size_t eq = rest.find('=');
      std::size_t size = 0;
      if (eq == std::string::npos ||
          !parse_size(trim(rest.substr(eq + 1)), size)) {
        err.syntax(lineno, "expected 'node <A> = <size>'");
        continue;
      }
      std::string name = trim(rest.substr(0, eq));
      doc.asg.nodes.emplace_back(name, size);
      keys.push_back("node " + name);
      note_span(doc, "node " + name, lineno);
    } else if (starts_with(line, "edge ", rest)) {
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        err.syntax(lineno, "expected 'edge <a> = [..]'");
        continue;
      }
      std::string name = trim(rest.substr(0, eq));
      std::string body = trim(rest.substr(eq + 1));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        err.syntax(lineno, "expected 'edge <a> = [..]'");
        continue;
      }
      std::vector<std::size_t> table;
      bool bad = false;
      std::string inner = trim(body.substr(1, body.size() - 2));
      if (!inner.empty()) {
        for (const std::string& item : split(inner, ',')) {
          std::size_t v = 0;
          if (!parse_size(item, v)) {
            bad = true;
            break;
          }
          table.push_back(v);
        }
      }
      if (bad) {
        err.syntax(lineno, "table entries must be natural numbers");
        continue;
      }
      doc.asg.edges.emplace_back(name, std::move(table));
      keys.push_back("edge " + name);
      note_span(doc, "edge " + name, lineno);
    } else {
      err.syntax(lineno, "expected node or edge assignment");
    }
  }
  report_duplicates(doc, err, "assignment", keys);
}

int span_line(const Document& doc, const std::string& name) {
  auto it = doc.spans.find(name);
  return it == doc.spans.end() ? 0 : it->second.line;
}

// The builders are the single source of semantic truth; anything they throw
// becomes a SemanticError, positioned when a declaration name matches.
void semantic_gate(Document& doc, Errors& err) {
  try {
    switch (doc.kind) {
      case DocKind::category:
        (void)build_category(doc.cat);
        break;
      case DocKind::quiver:
        (void)build_quiver_doc(doc.qv);
        break;
      case DocKind::signature:
        (void)build_signature_doc(doc.sig);
        break;
      case DocKind::functor:
      case DocKind::assignment:
        // Cross-file payloads; checked when resolved against their targets.
        break;
    }
  } catch (const CatError& e) {
    int line = 0;
    for (const auto& [name, span] : doc.spans)
      if (std::string(e.what()).find(name) != std::string::npos &&
          (line == 0 || span.line < line))
        line = span.line;
    err.semantic(line, std::string(errc_name(e.code())) + ": " + e.what());
  }
}

}  // namespace

DocKind kind_from_extension(const std::string& path) {
  std::size_t dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".cat") return DocKind::category;
  if (ext == ".qv") return DocKind::quiver;
  if (ext == ".sig") return DocKind::signature;
  if (ext == ".fun") return DocKind::functor;
  if (ext == ".asg") return DocKind::assignment;
  fail(errc::parse_error, "unrecognized file extension on " + path);
}

std::string kind_name(DocKind k) {
  switch (k) {
    case DocKind::category: return "category";
    case DocKind::quiver: return "quiver";
    case DocKind::signature: return "signature";
    case DocKind::functor: return "functor";
    case DocKind::assignment: return "assignment";
  }
  return "?";
}

ParseResult parse_document(const std::string& text, DocKind kind) {
  ParseResult result;
  Document doc;
  doc.kind = kind;
  Errors err{result.errors};
  LineScanner sc(text);
  switch (kind) {
    case DocKind::category: parse_cat(sc, doc, err); break;
    case DocKind::quiver: parse_qv(sc, doc, err); break;
    case DocKind::signature: parse_sig(sc, doc, err); break;
    case DocKind::functor: parse_fun(sc, doc, err); break;
    case DocKind::assignment: parse_asg(sc, doc, err); break;
  }
  if (result.errors.empty()) semantic_gate(doc, err);
  if (result.errors.empty()) result.doc = std::move(doc);
  return result;
}

std::string print_document(const Document& doc) {
  std::ostringstream out;
  auto list = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ", ";
      s += xs[i];
    }
    return s;
  };
  switch (doc.kind) {
    case DocKind::category:
      out << "objects:";
      if (!doc.cat.objects.empty()) out << " " << list(doc.cat.objects);
      out << "\n";
      for (const MorDecl& m : doc.cat.morphisms)
        out << "mor " << m.name << " : " << m.src << " -> " << m.tgt << "\n";
      for (const auto& [f, g, h] : doc.cat.comp_entries)
        out << "comp " << f << " " << g << " = " << h << "\n";
      break;
    case DocKind::quiver:
      out << "nodes:";
      if (!doc.qv.nodes.empty()) out << " " << list(doc.qv.nodes);
      out << "\n";
      for (const Edge& e : doc.qv.edges)
        out << "edge " << e.name << " : " << e.src << " -> " << e.tgt << "\n";
      break;
    case DocKind::signature:
      out << "objects:";
      if (!doc.sig.objects.empty()) out << " " << list(doc.sig.objects);
      out << "\n";
      for (const GenDecl& g : doc.sig.gens)
        out << "gen " << g.name << " : " << word_str(g.dom) << " -> "
            << word_str(g.cod) << "\n";
      break;
    case DocKind::functor:
      out << "functor " << doc.fun.name << " : " << doc.fun.src_file << " -> "
          << doc.fun.tgt_file << "\n";
      for (const auto& [a, x] : doc.fun.obj_map)
        out << "obj " << a << " |-> " << x << "\n";
      for (const auto& [f, g] : doc.fun.mor_map)
        out << "mor " << f << " |-> " << g << "\n";
      break;
    case DocKind::assignment:
      for (const auto& [n, size] : doc.asg.nodes)
        out << "node " << n << " = " << size << "\n";
      for (const auto& [e, table] : doc.asg.edges) {
        out << "edge " << e << " = [";
        for (std::size_t i = 0; i < table.size(); ++i) {
          if (i) out << ",";
          out << table[i];
        }
        out << "]\n";
      }
      break;
  }
  return out.str();
}

FinCategory build_category(const CatDoc& doc) {
  return build_fin_category(doc.objects, doc.morphisms, doc.comp_entries);
}

Quiver build_quiver_doc(const QuiverDoc& doc) {
  return build_quiver(doc.nodes, doc.edges);
}

Signature build_signature_doc(const SigDoc& doc) {
  return build_signature(doc.objects, doc.gens);
}

Word parse_word(const std::string& text) {
  std::string t = trim(text);
  if (t == "1") return {};
  if (t.empty()) fail(errc::parse_error, "empty word (the unit is written 1)");
  Word w;
  for (const std::string& tok : split(t, '.')) {
    if (!valid_token(tok)) fail(errc::parse_error, "bad object token " + tok);
    w.push_back(tok);
  }
  return w;
}

namespace {

struct TermParser {
  const Signature& sig;
  std::vector<std::string> toks;
  std::size_t pos = 0;

  TermParser(const Signature& s, const std::string& text) : sig(s) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    };
    for (char c : text) {
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        cur += c;
      } else if (c == ' ' || c == '\t') {
        flush();
      } else if (c == ';' || c == '*' || c == '(' || c == ')' || c == ',') {
        flush();
        toks.push_back(std::string(1, c));
      } else {
        fail(errc::parse_error, std::string("unexpected character '") + c +
                                    "' in term");
      }
    }
    flush();
  }

  bool at(const std::string& t) const { return pos < toks.size() && toks[pos] == t; }
  void expect(const std::string& t) {
    if (!at(t)) fail(errc::parse_error, "expected '" + t + "' in term");
    ++pos;
  }
  std::string next_word_token() {
    if (pos >= toks.size()) fail(errc::parse_error, "term ends early");
    return toks[pos++];
  }

  Diagram atom() {
    if (at("(")) {
      ++pos;
      Diagram d = term();
      expect(")");
      return d;
    }
    if (pos >= toks.size()) fail(errc::parse_error, "term ends early");
    std::string head = toks[pos++];
    if (head == "id") {
      expect("(");
      Word w = parse_word(next_word_token());
      expect(")");
      return identity_diagram(sig, w);
    }
    if (head == "sym") {
      expect("(");
      Word u = parse_word(next_word_token());
      expect(",");
      Word v = parse_word(next_word_token());
      expect(")");
      return symmetry_diagram(sig, u, v);
    }
    return generator_diagram(sig, head);
  }

  Diagram factor() {
    Diagram d = atom();
    while (at("*")) {
      ++pos;
      d = tensor_diagrams(sig, d, atom());
    }
    return d;
  }

  Diagram term() {
    Diagram d = factor();
    while (at(";")) {
      ++pos;
      d = compose_diagrams(sig, d, factor());
    }
    return d;
  }
};

}  // namespace

Diagram parse_smc_term(const std::string& text, const Signature& sig) {
  TermParser p(sig, text);
  Diagram d = p.term();
  if (p.pos != p.toks.size())
    fail(errc::parse_error, "trailing input after term");
  return d;
}

}  // namespace catk::dsl
