#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "primal/errors.hpp"

namespace primal {

// A polynomial ring over Q is identified by its ordered list of variable
// names.  Contexts are immutable and shared by everything built over them.
struct RingContext {
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> names) {
  if (names.empty()) throw Error("ring needs at least one variable");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty variable name");
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw Error("duplicate variable name '" + names[i] + "'");
  }
  auto ctx = std::make_shared<RingContext>();
  ctx->vars = std::move(names);
  return ctx;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw ContextMismatchError("operands from different rings");
}

}  // namespace primal
