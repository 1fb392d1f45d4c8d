#include "catk/error.hpp"

#include <cstdlib>

namespace catk {

const char* errc_name(errc code) {
  switch (code) {
    case errc::unknown_object: return "UnknownObject";
    case errc::unknown_morphism: return "UnknownMorphism";
    case errc::duplicate_id: return "DuplicateId";
    case errc::missing_composite: return "MissingComposite";
    case errc::ill_typed_composite: return "IllTypedComposite";
    case errc::identity_conflict: return "IdentityConflict";
    case errc::not_composable: return "NotComposable";
    case errc::endpoint_mismatch: return "EndpointMismatch";
    case errc::unknown_node: return "UnknownNode";
    case errc::duplicate_edge_name: return "DuplicateEdgeName";
    case errc::not_associative: return "NotAssociative";
    case errc::unit_law_fails: return "UnitLawFails";
    case errc::source_target_mismatch: return "SourceTargetMismatch";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::ill_typed_edge_image: return "IllTypedEdgeImage";
    case errc::not_a_path: return "NotAPath";
    case errc::unknown_object_token: return "UnknownObjectToken";
    case errc::duplicate_generator: return "DuplicateGenerator";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::word_mismatch: return "WordMismatch";
    case errc::ill_typed_witness: return "IllTypedWitness";
    case errc::missing_product: return "MissingProduct";
    case errc::missing_terminal: return "MissingTerminal";
    case errc::compose_domain_mismatch: return "ComposeDomainMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

std::size_t instance_budget() {
  if (const char* env = std::getenv("CATK_INSTANCE_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

}  // namespace catk
