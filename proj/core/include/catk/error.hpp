#pragma once

#include <stdexcept>
#include <string>

namespace catk {

// Every domain error carries one of these codes; the CLI maps them to
// exit statuses and the tests match on them.
enum class errc {
  unknown_object,
  unknown_morphism,
  duplicate_id,
  missing_composite,
  ill_typed_composite,
  identity_conflict,
  not_composable,
  endpoint_mismatch,
  unknown_node,
  duplicate_edge_name,
  not_associative,
  unit_law_fails,
  source_target_mismatch,
  cap_exceeded,
  ill_typed_edge_image,
  not_a_path,
  unknown_object_token,
  duplicate_generator,
  unknown_generator,
  word_mismatch,
  ill_typed_witness,
  missing_product,
  missing_terminal,
  compose_domain_mismatch,
  parse_error,
};

const char* errc_name(errc code);

class CatError : public std::runtime_error {
public:
  CatError(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw CatError(code, msg);
}

// Tabulation guard, overridable via CATK_INSTANCE_BUDGET.
std::size_t instance_budget();

}  // namespace catk
