#ifndef CAMUT_ERRORS_HPP
#define CAMUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace camut {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad JSON, bad polynomial text, schema mismatch.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

/// An operation was called outside its stated domain (bad index, frozen
/// point, 2-cycle at the mutation point, reducible minimal polynomial, ...).
struct precondition_error : error {
  explicit precondition_error(const std::string& what) : error(what) {}
};

/// A computation was abandoned because it exceeded an explicit resource
/// limit. Never a wrong answer.
struct resource_error : error {
  explicit resource_error(const std::string& what) : error(what) {}
};

/// Exact division by a cluster variable failed. The Laurent phenomenon
/// guarantees this never happens for genuine seed mutation, so reaching
/// this is an internal bug, not a user error.
struct laurent_violation : error {
  explicit laurent_violation(const std::string& what) : error(what) {}
};

}  // namespace camut

#endif
