#pragma once

#include <string>
#include <vector>

#include "catk/kernel.hpp"

namespace catk {

// Object of the free strict SMC: a word over the generating objects.
// The empty word is the monoidal unit; concatenation is the tensor.
using Word = std::vector<std::string>;

std::string word_str(const Word& w);  // "x.y.x", "1" for the empty word
Word word_concat(const Word& u, const Word& v);

struct GenDecl {
  std::string name;
  Word dom;
  Word cod;

  friend bool operator==(const GenDecl&, const GenDecl&) = default;
};

class Signature {
public:
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<GenDecl>& generators() const { return gens_; }
  bool has_object(const std::string& tok) const;
  bool has_generator(const std::string& name) const;
  const GenDecl& generator(const std::string& name) const;

  friend Signature build_signature(const std::vector<std::string>& objects,
                                   const std::vector<GenDecl>& gens);

private:
  std::vector<std::string> objects_;
  std::vector<GenDecl> gens_;
};

Signature build_signature(const std::vector<std::string>& objects,
                          const std::vector<GenDecl>& gens);

// A wire source or sink. box == -1 means the diagram boundary (dom side for
// sources, cod side for sinks); port indexes into the word or the box's
// dom/cod word.
struct WirePort {
  int box = -1;
  int port = 0;

  friend bool operator==(const WirePort&, const WirePort&) = default;
  friend auto operator<=>(const WirePort&, const WirePort&) = default;
};

// Morphism of the free strict SMC: an interfaced acyclic box-and-wire
// structure. The wiring is stored sink-side: every sink (cod position, box
// input port) records the unique source (dom position, box output port)
// feeding it.
struct Diagram {
  Word dom;
  Word cod;
  std::vector<std::string> boxes;  // generator names, box id = index
  std::vector<std::vector<WirePort>> box_inputs;
  std::vector<WirePort> cod_inputs;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Structural validity: known generators, arities, the wiring a
// type-preserving perfect matching, box dependencies acyclic.
void validate_diagram(const Signature& sig, const Diagram& d);

Diagram identity_diagram(const Signature& sig, const Word& w);
Diagram generator_diagram(const Signature& sig, const std::string& name);
// dom = u.v, cod = v.u, block-swap wiring.
Diagram symmetry_diagram(const Signature& sig, const Word& u, const Word& v);

Diagram compose_diagrams(const Signature& sig, const Diagram& d1,
                         const Diagram& d2);
Diagram tensor_diagrams(const Signature& sig, const Diagram& d1,
                        const Diagram& d2);

// Canonical form: boxes renumbered by the lexicographically least admissible
// topological serialization, which decides free-SMC equality (invariant
// under box relabeling, complete for wire-preserving isomorphism).
std::vector<std::string> canonical_records(const Signature& sig,
                                           const Diagram& d);
std::string canonical_serialization(const Signature& sig, const Diagram& d);
Diagram canonicalize(const Signature& sig, const Diagram& d);

bool diagrams_equal(const Signature& sig, const Diagram& d1, const Diagram& d2);

// All pairwise-inequal morphisms w1 -> w2 with at most max_boxes boxes,
// canonical, ordered by box count then serialization.
std::vector<Diagram> enumerate_homs(const Signature& sig, const Word& w1,
                                    const Word& w2, std::size_t max_boxes);

struct SmcBounds {
  std::size_t max_boxes = 2;
  std::size_t max_word = 4;
};

// Sweeps category laws, strict tensor laws, interchange, symmetry
// naturality, block hexagons, and involution under diagrams_equal, plus
// canonicalization idempotence, over everything enumerable in bounds.
LawReport check_free_smc_laws(const Signature& sig, const SmcBounds& bounds);

// Testing hook: declared_order skips the canonical search and serializes
// boxes in declaration order, which is deliberately unsound.
enum class CanonMode { full, declared_order };
void set_canonicalization_mode(CanonMode mode);
CanonMode canonicalization_mode();

}  // namespace catk
