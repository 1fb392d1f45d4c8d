#include "catk/smc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace catk {

namespace {
CanonMode g_canon_mode = CanonMode::full;
}

void set_canonicalization_mode(CanonMode mode) { g_canon_mode = mode; }
CanonMode canonicalization_mode() { return g_canon_mode; }

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += w[i];
  }
  return s;
}

Word word_concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

bool Signature::has_object(const std::string& tok) const {
  return std::find(objects_.begin(), objects_.end(), tok) != objects_.end();
}

bool Signature::has_generator(const std::string& name) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const GenDecl& g) { return g.name == name; });
}

const GenDecl& Signature::generator(const std::string& name) const {
  for (const GenDecl& g : gens_)
    if (g.name == name) return g;
  fail(errc::unknown_generator, "no generator named " + name);
}

Signature build_signature(const std::vector<std::string>& objects,
                          const std::vector<GenDecl>& gens) {
  Signature sig;
  std::set<std::string> objset;
  for (const std::string& o : objects) {
    if (!objset.insert(o).second)
      fail(errc::duplicate_id, "object token " + o + " declared twice");
    sig.objects_.push_back(o);
  }
  std::set<std::string> names;
  for (const GenDecl& g : gens) {
    if (!names.insert(g.name).second)
      fail(errc::duplicate_generator, "generator " + g.name + " declared twice");
    for (const std::string& t : g.dom)
      if (!objset.count(t))
        fail(errc::unknown_object_token,
             "generator " + g.name + " uses undeclared token " + t);
    for (const std::string& t : g.cod)
      if (!objset.count(t))
        fail(errc::unknown_object_token,
             "generator " + g.name + " uses undeclared token " + t);
    sig.gens_.push_back(g);
  }
  return sig;
}

namespace {

const std::string& source_type(const Signature& sig, const Diagram& d,
                               const WirePort& p) {
  if (p.box < 0) return d.dom[static_cast<std::size_t>(p.port)];
  return sig.generator(d.boxes[static_cast<std::size_t>(p.box)])
      .cod[static_cast<std::size_t>(p.port)];
}

bool acyclic(const Diagram& d) {
  const std::size_t n = d.boxes.size();
  std::vector<std::set<int>> preds(n);
  for (std::size_t b = 0; b < n; ++b)
    for (const WirePort& s : d.box_inputs[b])
      if (s.box >= 0) preds[b].insert(s.box);
  // Kahn
  std::vector<bool> placed(n, false);
  std::size_t done = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (placed[b]) continue;
      bool ready = std::all_of(preds[b].begin(), preds[b].end(),
                               [&](int p) { return placed[static_cast<std::size_t>(p)]; });
      if (ready) {
        placed[b] = true;
        ++done;
        progress = true;
      }
    }
  }
  return done == n;
}

}  // namespace

void validate_diagram(const Signature& sig, const Diagram& d) {
  for (const std::string& t : d.dom)
    if (!sig.has_object(t)) fail(errc::unknown_object_token, t);
  for (const std::string& t : d.cod)
    if (!sig.has_object(t)) fail(errc::unknown_object_token, t);
  if (d.box_inputs.size() != d.boxes.size())
    fail(errc::word_mismatch, "box wiring tables out of shape");
  for (std::size_t b = 0; b < d.boxes.size(); ++b) {
    const GenDecl& g = sig.generator(d.boxes[b]);
    if (d.box_inputs[b].size() != g.dom.size())
      fail(errc::word_mismatch, "box " + g.name + " has wrong input arity");
  }
  if (d.cod_inputs.size() != d.cod.size())
    fail(errc::word_mismatch, "cod wiring has wrong arity");

  // The wiring must hit every source exactly once, type-preservingly.
  std::map<WirePort, std::size_t> uses;
  auto visit = [&](const WirePort& src, const std::string& sink_type) {
    if (src.box < -1) fail(errc::word_mismatch, "bad wire source");
    if (src.box == -1) {
      if (src.port < 0 || static_cast<std::size_t>(src.port) >= d.dom.size())
        fail(errc::word_mismatch, "wire source outside dom");
    } else {
      if (static_cast<std::size_t>(src.box) >= d.boxes.size())
        fail(errc::word_mismatch, "wire source names unknown box");
      const GenDecl& g = sig.generator(d.boxes[static_cast<std::size_t>(src.box)]);
      if (src.port < 0 || static_cast<std::size_t>(src.port) >= g.cod.size())
        fail(errc::word_mismatch, "wire source outside box outputs");
    }
    if (source_type(sig, d, src) != sink_type)
      fail(errc::word_mismatch, "wire connects mismatched object types");
    uses[src]++;
  };
  for (std::size_t b = 0; b < d.boxes.size(); ++b) {
    const GenDecl& g = sig.generator(d.boxes[b]);
    for (std::size_t k = 0; k < g.dom.size(); ++k)
      visit(d.box_inputs[b][k], g.dom[k]);
  }
  for (std::size_t i = 0; i < d.cod.size(); ++i)
    visit(d.cod_inputs[i], d.cod[i]);

  std::size_t sources = d.dom.size();
  for (const std::string& b : d.boxes) sources += sig.generator(b).cod.size();
  if (uses.size() != sources)
    fail(errc::word_mismatch, "wiring is not a perfect matching");
  for (const auto& [src, count] : uses)
    if (count != 1) fail(errc::word_mismatch, "wire source used twice");

  if (!acyclic(d)) fail(errc::word_mismatch, "wiring has a cycle");
}

Diagram identity_diagram(const Signature& sig, const Word& w) {
  for (const std::string& t : w)
    if (!sig.has_object(t)) fail(errc::unknown_object_token, t);
  Diagram d;
  d.dom = w;
  d.cod = w;
  for (std::size_t i = 0; i < w.size(); ++i)
    d.cod_inputs.push_back({-1, static_cast<int>(i)});
  return d;
}

Diagram generator_diagram(const Signature& sig, const std::string& name) {
  const GenDecl& g = sig.generator(name);
  Diagram d;
  d.dom = g.dom;
  d.cod = g.cod;
  d.boxes.push_back(name);
  d.box_inputs.emplace_back();
  for (std::size_t i = 0; i < g.dom.size(); ++i)
    d.box_inputs[0].push_back({-1, static_cast<int>(i)});
  for (std::size_t i = 0; i < g.cod.size(); ++i)
    d.cod_inputs.push_back({0, static_cast<int>(i)});
  return d;
}

Diagram symmetry_diagram(const Signature& sig, const Word& u, const Word& v) {
  for (const std::string& t : u)
    if (!sig.has_object(t)) fail(errc::unknown_object_token, t);
  for (const std::string& t : v)
    if (!sig.has_object(t)) fail(errc::unknown_object_token, t);
  Diagram d;
  d.dom = word_concat(u, v);
  d.cod = word_concat(v, u);
  for (std::size_t i = 0; i < v.size(); ++i)
    d.cod_inputs.push_back({-1, static_cast<int>(u.size() + i)});
  for (std::size_t i = 0; i < u.size(); ++i)
    d.cod_inputs.push_back({-1, static_cast<int>(i)});
  return d;
}

Diagram compose_diagrams(const Signature& sig, const Diagram& d1,
                         const Diagram& d2) {
  if (d1.cod != d2.dom)
    fail(errc::word_mismatch, "cannot compose " + word_str(d1.cod) +
                                  " against " + word_str(d2.dom));
  const int offset = static_cast<int>(d1.boxes.size());
  auto remap = [&](const WirePort& src) -> WirePort {
    if (src.box == -1) return d1.cod_inputs[static_cast<std::size_t>(src.port)];
    return {src.box + offset, src.port};
  };
  Diagram out;
  out.dom = d1.dom;
  out.cod = d2.cod;
  out.boxes = d1.boxes;
  out.boxes.insert(out.boxes.end(), d2.boxes.begin(), d2.boxes.end());
  out.box_inputs = d1.box_inputs;
  for (const auto& ins : d2.box_inputs) {
    std::vector<WirePort> row;
    for (const WirePort& s : ins) row.push_back(remap(s));
    out.box_inputs.push_back(std::move(row));
  }
  for (const WirePort& s : d2.cod_inputs) out.cod_inputs.push_back(remap(s));
  (void)sig;
  return out;
}

Diagram tensor_diagrams(const Signature& sig, const Diagram& d1,
                        const Diagram& d2) {
  const int box_off = static_cast<int>(d1.boxes.size());
  const int dom_off = static_cast<int>(d1.dom.size());
  auto remap = [&](const WirePort& src) -> WirePort {
    if (src.box == -1) return {-1, src.port + dom_off};
    return {src.box + box_off, src.port};
  };
  Diagram out;
  out.dom = word_concat(d1.dom, d2.dom);
  out.cod = word_concat(d1.cod, d2.cod);
  out.boxes = d1.boxes;
  out.boxes.insert(out.boxes.end(), d2.boxes.begin(), d2.boxes.end());
  out.box_inputs = d1.box_inputs;
  for (const auto& ins : d2.box_inputs) {
    std::vector<WirePort> row;
    for (const WirePort& s : ins) row.push_back(remap(s));
    out.box_inputs.push_back(std::move(row));
  }
  out.cod_inputs = d1.cod_inputs;
  for (const WirePort& s : d2.cod_inputs) out.cod_inputs.push_back(remap(s));
  (void)sig;
  return out;
}

namespace {

// Lexicographically least admissible serialization. Candidates at each step
// are the boxes whose box-predecessors are all placed; only candidates whose
// immediate record is minimal can lead to the least sequence, so ties branch
// and everything else prunes.
struct CanonSearch {
  const Signature& sig;
  const Diagram& d;
  std::vector<std::set<int>> preds;
  std::vector<int> canon_of;  // orig box -> canonical index, -1 if unplaced
  std::vector<int> order;
  std::vector<std::string> records;
  std::vector<std::string> best_records;
  std::vector<int> best_order;
  bool have_best = false;

  CanonSearch(const Signature& s, const Diagram& diag) : sig(s), d(diag) {
    const std::size_t n = d.boxes.size();
    preds.resize(n);
    for (std::size_t b = 0; b < n; ++b)
      for (const WirePort& src : d.box_inputs[b])
        if (src.box >= 0) preds[b].insert(src.box);
    canon_of.assign(n, -1);
  }

  std::string encode(const WirePort& src) const {
    if (src.box == -1) return "d" + std::to_string(src.port);
    return "b" + std::to_string(canon_of[static_cast<std::size_t>(src.box)]) +
           "o" + std::to_string(src.port);
  }

  std::string box_record(int b) const {
    std::string rec = d.boxes[static_cast<std::size_t>(b)] + "(";
    const auto& ins = d.box_inputs[static_cast<std::size_t>(b)];
    for (std::size_t k = 0; k < ins.size(); ++k) {
      if (k) rec += ",";
      rec += encode(ins[k]);
    }
    return rec + ")";
  }

  std::string out_record() const {
    std::string rec = "out(";
    for (std::size_t i = 0; i < d.cod_inputs.size(); ++i) {
      if (i) rec += ",";
      rec += encode(d.cod_inputs[i]);
    }
    return rec + ")";
  }

  void run(std::size_t placed) {
    const std::size_t n = d.boxes.size();
    if (placed == n) {
      records.push_back(out_record());
      if (!have_best || records < best_records) {
        best_records = records;
        best_order = order;
        have_best = true;
      }
      records.pop_back();
      return;
    }
    if (have_best && records > best_records) return;  // prefix already worse

    std::string min_rec;
    std::vector<int> ties;
    for (std::size_t b = 0; b < n; ++b) {
      if (canon_of[b] != -1) continue;
      bool ready = std::all_of(preds[b].begin(), preds[b].end(),
                               [&](int p) { return canon_of[static_cast<std::size_t>(p)] != -1; });
      if (!ready) continue;
      std::string rec = box_record(static_cast<int>(b));
      if (ties.empty() || rec < min_rec) {
        min_rec = std::move(rec);
        ties.assign(1, static_cast<int>(b));
      } else if (rec == min_rec) {
        ties.push_back(static_cast<int>(b));
      }
    }
    for (int b : ties) {
      canon_of[static_cast<std::size_t>(b)] = static_cast<int>(placed);
      order.push_back(b);
      records.push_back(min_rec);
      run(placed + 1);
      records.pop_back();
      order.pop_back();
      canon_of[static_cast<std::size_t>(b)] = -1;
    }
  }
};

std::pair<std::vector<std::string>, std::vector<int>> canonical_search(
    const Signature& sig, const Diagram& d) {
  CanonSearch search(sig, d);
  if (g_canon_mode == CanonMode::declared_order) {
    std::vector<int> order(d.boxes.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
      search.canon_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::string> records;
    for (int b : order) records.push_back(search.box_record(b));
    records.push_back(search.out_record());
    return {records, order};
  }
  search.run(0);
  return {search.best_records, search.best_order};
}

}  // namespace

std::vector<std::string> canonical_records(const Signature& sig,
                                           const Diagram& d) {
  auto [records, order] = canonical_search(sig, d);
  std::vector<std::string> out;
  out.push_back("dom:" + word_str(d.dom));
  out.push_back("cod:" + word_str(d.cod));
  out.insert(out.end(), records.begin(), records.end());
  return out;
}

std::string canonical_serialization(const Signature& sig, const Diagram& d) {
  std::string s;
  for (const std::string& rec : canonical_records(sig, d)) {
    if (!s.empty()) s += ";";
    s += rec;
  }
  return s;
}

Diagram canonicalize(const Signature& sig, const Diagram& d) {
  auto [records, order] = canonical_search(sig, d);
  (void)records;
  std::vector<int> canon_of(d.boxes.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    canon_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  auto remap = [&](const WirePort& src) -> WirePort {
    if (src.box == -1) return src;
    return {canon_of[static_cast<std::size_t>(src.box)], src.port};
  };
  Diagram out;
  out.dom = d.dom;
  out.cod = d.cod;
  for (int b : order) {
    out.boxes.push_back(d.boxes[static_cast<std::size_t>(b)]);
    std::vector<WirePort> row;
    for (const WirePort& s : d.box_inputs[static_cast<std::size_t>(b)])
      row.push_back(remap(s));
    out.box_inputs.push_back(std::move(row));
  }
  for (const WirePort& s : d.cod_inputs) out.cod_inputs.push_back(remap(s));
  return out;
}

bool diagrams_equal(const Signature& sig, const Diagram& d1,
                    const Diagram& d2) {
  if (d1.dom != d2.dom || d1.cod != d2.cod) return false;
  return canonical_records(sig, d1) == canonical_records(sig, d2);
}

namespace {

// All type-preserving perfect matchings for a fixed box multiset, filtered
// for acyclicity.
void wire_and_collect(const Signature& sig, const Word& w1, const Word& w2,
                      const std::vector<std::string>& boxes,
                      std::vector<Diagram>& out,
                      std::set<std::vector<std::string>>& seen) {
  struct Sink {
    bool is_cod;
    int box;
    int port;
  };
  std::map<std::string, std::vector<WirePort>> sources;
  std::map<std::string, std::vector<Sink>> sinks;
  for (std::size_t i = 0; i < w1.size(); ++i)
    sources[w1[i]].push_back({-1, static_cast<int>(i)});
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const GenDecl& g = sig.generator(boxes[b]);
    for (std::size_t k = 0; k < g.cod.size(); ++k)
      sources[g.cod[k]].push_back({static_cast<int>(b), static_cast<int>(k)});
    for (std::size_t k = 0; k < g.dom.size(); ++k)
      sinks[g.dom[k]].push_back({false, static_cast<int>(b), static_cast<int>(k)});
  }
  for (std::size_t i = 0; i < w2.size(); ++i)
    sinks[w2[i]].push_back({true, -1, static_cast<int>(i)});

  std::vector<std::string> types;
  for (const auto& [t, srcs] : sources) {
    if (!sinks.count(t) || sinks[t].size() != srcs.size()) return;
    types.push_back(t);
  }
  for (const auto& [t, sk] : sinks)
    if (!sources.count(t) && !sk.empty()) return;

  // Per-type permutations, combined by odometer over next_permutation.
  std::map<std::string, std::vector<std::size_t>> perm;
  for (const std::string& t : types) {
    perm[t].resize(sources[t].size());
    std::iota(perm[t].begin(), perm[t].end(), 0);
  }

  Diagram proto;
  proto.dom = w1;
  proto.cod = w2;
  proto.boxes = boxes;
  proto.box_inputs.resize(boxes.size());
  for (std::size_t b = 0; b < boxes.size(); ++b)
    proto.box_inputs[b].resize(sig.generator(boxes[b]).dom.size());
  proto.cod_inputs.resize(w2.size());

  while (true) {
    Diagram d = proto;
    for (const std::string& t : types) {
      const auto& srcs = sources[t];
      const auto& sks = sinks[t];
      const auto& p = perm[t];
      for (std::size_t i = 0; i < srcs.size(); ++i) {
        const Sink& sk = sks[p[i]];
        if (sk.is_cod)
          d.cod_inputs[static_cast<std::size_t>(sk.port)] = srcs[i];
        else
          d.box_inputs[static_cast<std::size_t>(sk.box)]
                      [static_cast<std::size_t>(sk.port)] = srcs[i];
      }
    }
    if (acyclic(d)) {
      Diagram canon = canonicalize(sig, d);
      auto records = canonical_records(sig, canon);
      if (seen.insert(records).second) out.push_back(std::move(canon));
    }

    // Advance the per-type permutation odometer.
    std::size_t k = 0;
    for (; k < types.size(); ++k) {
      auto& p = perm[types[k]];
      if (std::next_permutation(p.begin(), p.end())) break;
      // wrapped to identity; carry on to the next type
    }
    if (k == types.size()) break;
  }
}

void multisets(const Signature& sig, std::size_t max_boxes,
               std::size_t gen_from, std::vector<std::string>& boxes,
               const Word& w1, const Word& w2, std::vector<Diagram>& out,
               std::set<std::vector<std::string>>& seen) {
  wire_and_collect(sig, w1, w2, boxes, out, seen);
  if (boxes.size() == max_boxes) return;
  for (std::size_t g = gen_from; g < sig.generators().size(); ++g) {
    boxes.push_back(sig.generators()[g].name);
    multisets(sig, max_boxes, g, boxes, w1, w2, out, seen);
    boxes.pop_back();
  }
}

}  // namespace

std::vector<Diagram> enumerate_homs(const Signature& sig, const Word& w1,
                                    const Word& w2, std::size_t max_boxes) {
  std::vector<Diagram> out;
  std::set<std::vector<std::string>> seen;
  std::vector<std::string> boxes;
  multisets(sig, max_boxes, 0, boxes, w1, w2, out, seen);
  std::stable_sort(out.begin(), out.end(),
                   [&](const Diagram& a, const Diagram& b) {
                     if (a.boxes.size() != b.boxes.size())
                       return a.boxes.size() < b.boxes.size();
                     return canonical_serialization(sig, a) <
                            canonical_serialization(sig, b);
                   });
  return out;
}

LawReport check_free_smc_laws(const Signature& sig, const SmcBounds& bounds) {
  LawReport report;

  std::vector<Word> words{{}};
  for (std::size_t len = 1; len <= bounds.max_word; ++len) {
    std::vector<Word> next;
    for (const Word& w : words) {
      if (w.size() != len - 1) continue;
      for (const std::string& o : sig.objects()) {
        Word w2 = w;
        w2.push_back(o);
        next.push_back(std::move(w2));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }

  std::vector<Diagram> all;
  for (const Word& u : words)
    for (const Word& v : words)
      for (Diagram& d : enumerate_homs(sig, u, v, bounds.max_boxes))
        all.push_back(std::move(d));

  auto name = [&](const Diagram& d) { return canonical_serialization(sig, d); };

  // Category laws.
  for (const Diagram& d : all) {
    if (!diagrams_equal(sig, compose_diagrams(sig, identity_diagram(sig, d.dom), d), d))
      report.add("left-identity", {name(d)}, "id;d differs from d");
    if (!diagrams_equal(sig, compose_diagrams(sig, d, identity_diagram(sig, d.cod)), d))
      report.add("right-identity", {name(d)}, "d;id differs from d");
    // Strict unit for the tensor.
    if (!diagrams_equal(sig, tensor_diagrams(sig, d, identity_diagram(sig, {})), d) ||
        !diagrams_equal(sig, tensor_diagrams(sig, identity_diagram(sig, {}), d), d))
      report.add("right-identity", {name(d)}, "tensor with the empty word is not neutral");
    // Canonicalization idempotence.
    Diagram c = canonicalize(sig, d);
    if (canonical_records(sig, c) != canonical_records(sig, canonicalize(sig, c)))
      report.add("associativity", {name(d)}, "canonicalization is not idempotent");
  }

  // Associativity of composition, bounded by total box count.
  for (const Diagram& f : all)
    for (const Diagram& g : all) {
      if (f.cod != g.dom) continue;
      if (f.boxes.size() + g.boxes.size() > bounds.max_boxes) continue;
      for (const Diagram& h : all) {
        if (g.cod != h.dom) continue;
        if (f.boxes.size() + g.boxes.size() + h.boxes.size() > bounds.max_boxes)
          continue;
        Diagram lhs = compose_diagrams(sig, compose_diagrams(sig, f, g), h);
        Diagram rhs = compose_diagrams(sig, f, compose_diagrams(sig, g, h));
        if (!diagrams_equal(sig, lhs, rhs))
          report.add("associativity", {name(f), name(g), name(h)},
                     "composition fails associativity");
      }
    }

  // Interchange.
  for (const Diagram& f : all)
    for (const Diagram& h : all) {
      if (f.cod != h.dom) continue;
      for (const Diagram& g : all) {
        if (f.dom.size() + g.dom.size() > bounds.max_word) continue;
        for (const Diagram& k : all) {
          if (g.cod != k.dom) continue;
          if (f.boxes.size() + g.boxes.size() + h.boxes.size() +
                  k.boxes.size() > bounds.max_boxes)
            continue;
          Diagram lhs = compose_diagrams(sig, tensor_diagrams(sig, f, g),
                                         tensor_diagrams(sig, h, k));
          Diagram rhs = tensor_diagrams(sig, compose_diagrams(sig, f, h),
                                        compose_diagrams(sig, g, k));
          if (!diagrams_equal(sig, lhs, rhs))
            report.add("bifunctor", {name(f), name(g), name(h), name(k)},
                       "interchange fails");
        }
      }
    }

  // Symmetry naturality: slide any diagram past a braid.
  for (const Diagram& f : all)
    for (const Word& w : words) {
      if (f.dom.size() + w.size() > bounds.max_word ||
          f.cod.size() + w.size() > bounds.max_word)
        continue;
      Diagram lhs = compose_diagrams(
          sig, tensor_diagrams(sig, f, identity_diagram(sig, w)),
          symmetry_diagram(sig, f.cod, w));
      Diagram rhs = compose_diagrams(
          sig, symmetry_diagram(sig, f.dom, w),
          tensor_diagrams(sig, identity_diagram(sig, w), f));
      if (!diagrams_equal(sig, lhs, rhs))
        report.add("naturality", {name(f), word_str(w)},
                   "braid does not slide past the diagram");
    }

  // Hexagons in block form, and involution.
  for (const Word& u : words)
    for (const Word& v : words) {
      if (u.size() + v.size() > bounds.max_word) continue;
      Diagram invol = compose_diagrams(sig, symmetry_diagram(sig, u, v),
                                       symmetry_diagram(sig, v, u));
      if (!diagrams_equal(sig, invol,
                          identity_diagram(sig, word_concat(u, v))))
        report.add("symmetry", {word_str(u), word_str(v)},
                   "braid does not square to the identity");
      for (const Word& w : words) {
        if (u.size() + v.size() + w.size() > bounds.max_word) continue;
        Diagram lhs = symmetry_diagram(sig, word_concat(u, v), w);
        Diagram rhs = compose_diagrams(
            sig,
            tensor_diagrams(sig, identity_diagram(sig, u),
                            symmetry_diagram(sig, v, w)),
            tensor_diagrams(sig, symmetry_diagram(sig, u, w),
                            identity_diagram(sig, v)));
        if (!diagrams_equal(sig, lhs, rhs))
          report.add("hexagon", {word_str(u), word_str(v), word_str(w)},
                     "block hexagon fails");
      }
    }

  return report;
}

}  // namespace catk
