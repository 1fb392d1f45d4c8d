#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "catk/dsl.hpp"
#include "catk/finset.hpp"
#include "catk/functor.hpp"
#include "catk/kernel.hpp"
#include "catk/monoidal.hpp"
#include "catk/quiver.hpp"
#include "catk/smc.hpp"
#include "catk/universal.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace catk;

namespace {

struct Output {
  bool ok = true;
  json violations = json::array();
  // (text rendering, json value) per result row.
  std::vector<std::pair<std::string, json>> results;

  void add_report(const LawReport& report) {
    if (!report.ok()) ok = false;
    for (const Violation& v : report.violations)
      violations.push_back({{"law", v.law},
                            {"witnesses", v.witnesses},
                            {"detail", v.detail}});
  }
  void add(std::string text, json value) {
    results.emplace_back(std::move(text), std::move(value));
  }
  void add(const std::string& text) { add(text, text); }
};

int emit(const Output& out, bool json_format) {
  if (json_format) {
    json doc;
    doc["ok"] = out.ok;
    doc["violations"] = out.violations;
    doc["results"] = json::array();
    for (const auto& [text, value] : out.results)
      doc["results"].push_back(value);
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& v : out.violations)
      std::cout << "violation " << v["law"].get<std::string>() << ": "
                << v["detail"].get<std::string>() << "\n";
    for (const auto& [text, value] : out.results) std::cout << text << "\n";
    if (out.violations.empty() && out.results.empty())
      std::cout << (out.ok ? "ok" : "failed") << "\n";
  }
  return out.ok ? 0 : 1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dsl::Document load_document(const std::string& path) {
  dsl::DocKind kind = dsl::kind_from_extension(path);
  dsl::ParseResult result = dsl::parse_document(slurp(path), kind);
  if (!result.ok()) {
    for (const dsl::ParseError& e : result.errors)
      std::cerr << path << ":" << e.span.line << ": " << e.kind << ": "
                << e.message << "\n";
    std::exit(2);
  }
  return *result.doc;
}

FinCategory load_category(const std::string& path) {
  dsl::Document doc = load_document(path);
  if (doc.kind != dsl::DocKind::category)
    fail(errc::parse_error, path + " is not a category file");
  return dsl::build_category(doc.cat);
}

Quiver load_quiver(const std::string& path) {
  dsl::Document doc = load_document(path);
  if (doc.kind != dsl::DocKind::quiver)
    fail(errc::parse_error, path + " is not a quiver file");
  return dsl::build_quiver_doc(doc.qv);
}

Signature load_signature(const std::string& path) {
  dsl::Document doc = load_document(path);
  if (doc.kind != dsl::DocKind::signature)
    fail(errc::parse_error, path + " is not a signature file");
  return dsl::build_signature_doc(doc.sig);
}

// Category/quiver paths inside a .fun file resolve against its directory.
std::string sibling(const std::string& fun_path, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return ref;
  return (fs::path(fun_path).parent_path() / p).string();
}

struct LoadedFunctor {
  std::shared_ptr<FinCategory> src;
  std::shared_ptr<FinCategory> tgt;
  FunctorData F;
  std::string src_file;
  std::string tgt_file;
};

LoadedFunctor load_functor(const std::string& path,
                           std::shared_ptr<FinCategory> src = nullptr,
                           std::shared_ptr<FinCategory> tgt = nullptr) {
  dsl::Document doc = load_document(path);
  if (doc.kind != dsl::DocKind::functor)
    fail(errc::parse_error, path + " is not a functor file");
  LoadedFunctor out;
  out.src_file = sibling(path, doc.fun.src_file);
  out.tgt_file = sibling(path, doc.fun.tgt_file);
  out.src = src ? src
                : std::make_shared<FinCategory>(load_category(out.src_file));
  out.tgt = tgt ? tgt
                : std::make_shared<FinCategory>(load_category(out.tgt_file));
  std::map<ObjId, ObjId> obj_map(doc.fun.obj_map.begin(),
                                 doc.fun.obj_map.end());
  std::map<std::string, std::string> mor_map(doc.fun.mor_map.begin(),
                                             doc.fun.mor_map.end());
  out.F = make_functor(*out.src, *out.tgt, std::move(obj_map),
                       std::move(mor_map));
  return out;
}

MorPath parse_mor_path(const ObjId& anchor, const std::string& steps) {
  MorPath p{anchor, {}};
  if (steps.empty() || steps == "-") return p;
  std::istringstream in(steps);
  std::string item;
  while (std::getline(in, item, ',')) p.mors.push_back(item);
  return p;
}

// Presentation of a tabulated category, printable as .cat text.
dsl::Document category_document(const FinCategory& cat) {
  dsl::Document doc;
  doc.kind = dsl::DocKind::category;
  doc.cat.objects = cat.objects();
  for (const MorDecl& m : cat.morphisms())
    if (!cat.is_identity(m.name)) doc.cat.morphisms.push_back(m);
  for (const auto& [pair, h] : cat.comp_table())
    if (!cat.is_identity(pair.first) && !cat.is_identity(pair.second))
      doc.cat.comp_entries.push_back({pair.first, pair.second, h});
  return doc;
}

std::string path_str(const Path& p) {
  std::string s = p.anchor + ":";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (i) s += ",";
    s += p.steps[i];
  }
  return s;
}

struct MonoidalBuild {
  MonoidalStructure M;
  ProductChooser chooser;
};

MonoidalBuild build_monoidal(const std::string& path) {
  auto cat = std::make_shared<FinCategory>(load_category(path));
  auto terminals = find_terminals(*cat);
  if (terminals.empty())
    fail(errc::missing_terminal, "no terminal object in " + path);
  MonoidalBuild out;
  out.chooser = first_product_chooser(*cat);
  out.M = monoidal_from_products(cat, out.chooser, terminals.front());
  return out;
}

json functor_json(const FunctorData& F) {
  json obj = json::object();
  for (const auto& [a, x] : F.obj_map) obj[a] = x;
  json mor = json::object();
  for (const auto& [f, g] : F.mor_map) mor[f] = g;
  return {{"obj_map", obj}, {"mor_map", mor}};
}

std::string functor_text(const FunctorData& F) {
  std::string s;
  for (const auto& [a, x] : F.obj_map) s += "obj " + a + "|->" + x + " ";
  for (const auto& [f, g] : F.mor_map) s += "mor " + f + "|->" + g + " ";
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite category toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, file2, arg1, arg2, arg3;
  std::vector<std::string> files, components;
  std::size_t max_len = 6, max_boxes = 2, max_word = 4;
  bool count = false;

  auto* check = app.add_subcommand("check", "category laws of a .cat file");
  check->add_option("file", file)->required();

  auto* check_functor =
      app.add_subcommand("check-functor", "functor laws of a .fun file");
  check_functor->add_option("file", file)->required();

  auto* check_natural = app.add_subcommand(
      "check-natural", "naturality of components between two parallel functors");
  check_natural->add_option("F", file)->required();
  check_natural->add_option("G", file2)->required();
  check_natural->add_option("--component", components,
                            "component as <object>=<morphism>");

  auto* compose = app.add_subcommand("compose", "compose f then g");
  compose->add_option("file", file)->required();
  compose->add_option("f", arg1)->required();
  compose->add_option("g", arg2)->required();

  auto* commutes_cmd =
      app.add_subcommand("commutes", "compare two parallel composites");
  commutes_cmd->add_option("file", file)->required();
  commutes_cmd->add_option("anchor", arg1)->required();
  commutes_cmd->add_option("path1", arg2, "comma-separated names, - for empty")
      ->required();
  commutes_cmd->add_option("path2", arg3, "comma-separated names, - for empty")
      ->required();

  auto* opposite = app.add_subcommand("opposite", "print the opposite category");
  opposite->add_option("file", file)->required();

  auto* paths = app.add_subcommand("paths", "paths in the free category");
  paths->add_option("file", file)->required();
  paths->add_option("src", arg1)->required();
  paths->add_option("tgt", arg2)->required();
  paths->add_option("--max-len", max_len, "maximum path length");
  paths->add_flag("--count", count, "print only the count");

  auto* free_eval = app.add_subcommand(
      "free-eval", "evaluate a path under a table assignment");
  free_eval->add_option("quiver", file)->required();
  free_eval->add_option("assignment", file2)->required();
  free_eval->add_option("anchor", arg1)->required();
  free_eval->add_option("steps", arg2, "comma-separated edges, - for empty")
      ->required();

  auto* terminal = app.add_subcommand("terminal", "find terminal objects");
  terminal->add_option("file", file)->required();
  auto* initial = app.add_subcommand("initial", "find initial objects");
  initial->add_option("file", file)->required();

  auto* product = app.add_subcommand("product", "find binary products");
  product->add_option("file", file)->required();
  product->add_option("left", arg1)->required();
  product->add_option("right", arg2)->required();
  auto* coproduct = app.add_subcommand("coproduct", "find binary coproducts");
  coproduct->add_option("file", file)->required();
  coproduct->add_option("left", arg1)->required();
  coproduct->add_option("right", arg2)->required();

  auto* from_products = app.add_subcommand(
      "monoidal-from-products", "monoidal structure from chosen products");
  from_products->add_option("file", file)->required();
  auto* check_monoidal = app.add_subcommand(
      "check-monoidal", "coherence of the products-induced structure");
  check_monoidal->add_option("file", file)->required();
  auto* check_symmetric = app.add_subcommand(
      "check-symmetric", "symmetry of the products-induced structure");
  check_symmetric->add_option("file", file)->required();

  auto* cat_cmd =
      app.add_subcommand("cat", "category of the listed categories");
  cat_cmd->add_option("files", files)->required()->expected(-1);

  auto* functors =
      app.add_subcommand("functors", "enumerate functors between two files");
  functors->add_option("src", file)->required();
  functors->add_option("tgt", file2)->required();
  functors->add_flag("--count", count, "print only the count");

  auto* smc_equal =
      app.add_subcommand("smc-equal", "decide equality of two diagram terms");
  smc_equal->add_option("sig", file)->required();
  smc_equal->add_option("term1", arg1)->required();
  smc_equal->add_option("term2", arg2)->required();

  auto* smc_enum = app.add_subcommand("smc-enum", "enumerate diagrams");
  smc_enum->add_option("sig", file)->required();
  smc_enum->add_option("dom", arg1)->required();
  smc_enum->add_option("cod", arg2)->required();
  smc_enum->add_option("--max-boxes", max_boxes, "box budget");
  smc_enum->add_flag("--count", count, "print only the count");

  auto* smc_check =
      app.add_subcommand("smc-check", "bounded law sweep over a signature");
  smc_check->add_option("sig", file)->required();
  smc_check->add_option("--max-boxes", max_boxes, "box budget");
  smc_check->add_option("--max-word", max_word, "word length bound");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool json_format = format == "json";
  Output out;

  try {
    if (check->parsed()) {
      FinCategory cat = load_category(file);
      out.add_report(check_category_laws(cat));
    } else if (check_functor->parsed()) {
      LoadedFunctor lf = load_functor(file);
      out.add_report(check_functor_laws(lf.F));
    } else if (check_natural->parsed()) {
      LoadedFunctor lf = load_functor(file);
      dsl::Document gdoc = load_document(file2);
      if (gdoc.kind != dsl::DocKind::functor)
        fail(errc::parse_error, file2 + " is not a functor file");
      if (sibling(file2, gdoc.fun.src_file) != lf.src_file ||
          sibling(file2, gdoc.fun.tgt_file) != lf.tgt_file)
        fail(errc::source_target_mismatch,
             "the two functors are not parallel");
      LoadedFunctor lg = load_functor(file2, lf.src, lf.tgt);
      NatTransData t;
      t.F = &lf.F;
      t.G = &lg.F;
      for (const std::string& c : components) {
        std::size_t eq = c.find('=');
        if (eq == std::string::npos)
          fail(errc::parse_error, "--component wants <object>=<morphism>");
        t.components[c.substr(0, eq)] = c.substr(eq + 1);
      }
      out.add_report(check_naturality(t));
    } else if (compose->parsed()) {
      FinCategory cat = load_category(file);
      out.add(cat.compose(arg1, arg2));
    } else if (commutes_cmd->parsed()) {
      FinCategory cat = load_category(file);
      bool eq = commutes(cat, parse_mor_path(arg1, arg2),
                         parse_mor_path(arg1, arg3));
      out.ok = eq;
      out.add(eq ? "true" : "false", eq);
    } else if (opposite->parsed()) {
      FinCategory cat = load_category(file);
      std::string text = dsl::print_document(category_document(
          opposite_category(cat)));
      if (json_format) {
        out.add(text, text);
      } else {
        std::cout << text;
        return 0;
      }
    } else if (paths->parsed()) {
      Quiver q = load_quiver(file);
      auto found = hom_paths(q, arg1, arg2, max_len);
      if (count) {
        out.add(std::to_string(found.size()), found.size());
      } else {
        for (const Path& p : found) out.add(path_str(p));
      }
    } else if (free_eval->parsed()) {
      Quiver q = load_quiver(file);
      dsl::Document asg = load_document(file2);
      if (asg.kind != dsl::DocKind::assignment)
        fail(errc::parse_error, file2 + " is not an assignment file");
      std::map<ObjId, std::size_t> sizes(asg.asg.nodes.begin(),
                                         asg.asg.nodes.end());
      std::map<std::string, FinFunction> tables;
      for (const auto& [name, table] : asg.asg.edges) {
        const Edge* e = nullptr;
        for (const Edge& cand : q.edges())
          if (cand.name == name) e = &cand;
        if (!e) fail(errc::unknown_generator, "assignment for unknown edge " + name);
        FinFunction f;
        f.dom = sizes.count(e->src) ? sizes[e->src] : 0;
        f.cod = sizes.count(e->tgt) ? sizes[e->tgt] : 0;
        f.table = table;
        tables[name] = std::move(f);
      }
      MorPath mp = parse_mor_path(arg1, arg2);
      FinFunction result =
          evaluate_free_functor(q, sizes, tables, Path{mp.anchor, mp.mors});
      std::string text = "[";
      for (std::size_t i = 0; i < result.table.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(result.table[i]);
      }
      text += "]";
      out.add(text, {{"dom", result.dom},
                     {"cod", result.cod},
                     {"table", result.table}});
    } else if (terminal->parsed() || initial->parsed()) {
      FinCategory cat = load_category(file);
      auto found = terminal->parsed() ? find_terminals(cat) : find_initials(cat);
      out.ok = !found.empty();
      for (const TerminalWitness& w : found) out.add(w.object);
    } else if (product->parsed()) {
      FinCategory cat = load_category(file);
      auto found = find_products(cat, arg1, arg2);
      out.ok = !found.empty();
      for (const ProductWitness& w : found)
        out.add(w.apex + " " + w.proj_l + " " + w.proj_r,
                {{"apex", w.apex}, {"proj_l", w.proj_l}, {"proj_r", w.proj_r}});
    } else if (coproduct->parsed()) {
      FinCategory cat = load_category(file);
      auto found = find_coproducts(cat, arg1, arg2);
      out.ok = !found.empty();
      for (const CoproductWitness& w : found)
        out.add(w.apex + " " + w.inj_l + " " + w.inj_r,
                {{"apex", w.apex}, {"inj_l", w.inj_l}, {"inj_r", w.inj_r}});
    } else if (from_products->parsed() || check_monoidal->parsed() ||
               check_symmetric->parsed()) {
      MonoidalBuild b = build_monoidal(file);
      out.add("unit " + b.M.unit + (b.M.strict ? " strict" : " non-strict"),
              {{"unit", b.M.unit}, {"strict", b.M.strict}});
      if (check_monoidal->parsed() || check_symmetric->parsed())
        out.add_report(check_monoidal_structure(b.M));
      if (check_symmetric->parsed())
        out.add_report(check_symmetric_structure(
            b.M, symmetry_from_products(b.M, b.chooser)));
    } else if (cat_cmd->parsed()) {
      std::vector<FinCategory> cats;
      cats.reserve(files.size());
      for (const std::string& f : files) cats.push_back(load_category(f));
      std::vector<const FinCategory*> ptrs;
      for (const FinCategory& c : cats) ptrs.push_back(&c);
      CatCategory C = cat_category(ptrs);
      out.add_report(check_category_laws(C.cat));
      out.add("objects " + std::to_string(C.cat.objects().size()) +
                  " morphisms " + std::to_string(C.cat.morphisms().size()),
              {{"objects", C.cat.objects().size()},
               {"morphisms", C.cat.morphisms().size()}});
    } else if (functors->parsed()) {
      FinCategory C = load_category(file);
      FinCategory D = load_category(file2);
      auto found = enumerate_functors(C, D);
      if (count) {
        out.add(std::to_string(found.size()), found.size());
      } else {
        for (const FunctorData& F : found)
          out.add(functor_text(F), functor_json(F));
      }
    } else if (smc_equal->parsed()) {
      Signature sig = load_signature(file);
      Diagram d1 = dsl::parse_smc_term(arg1, sig);
      Diagram d2 = dsl::parse_smc_term(arg2, sig);
      bool eq = diagrams_equal(sig, d1, d2);
      out.ok = eq;
      out.add(eq ? "true" : "false", eq);
    } else if (smc_enum->parsed()) {
      Signature sig = load_signature(file);
      auto found = enumerate_homs(sig, dsl::parse_word(arg1),
                                  dsl::parse_word(arg2), max_boxes);
      if (count) {
        out.add(std::to_string(found.size()), found.size());
      } else {
        for (const Diagram& d : found)
          out.add(canonical_serialization(sig, d));
      }
    } else if (smc_check->parsed()) {
      Signature sig = load_signature(file);
      out.add_report(check_free_smc_laws(sig, {max_boxes, max_word}));
    }
  } catch (const CatError& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return emit(out, json_format);
}
