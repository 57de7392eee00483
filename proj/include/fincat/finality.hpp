#pragma once

// Final functors. Over Set, i: B -> A is final exactly when every comma
// category (a ↓ i) is nonempty and connected: a cocone under D∘i extends
// uniquely to one under D because each (a ↓ i) is a single zig-zag class.

#include <optional>
#include <string>

#include "fincat/colimit.hpp"

namespace fincat {

struct FinalityReport {
  bool final = false;
  /// When not final: the first object a with (a ↓ i) empty or
  /// disconnected.
  std::string object;
  bool empty = false;
  std::size_t components = 0;
};

FinalityReport is_final(const Functor& i);

/// For final i: B -> A and D on A, checks that (i(b), x) |-> (i(b), x)
/// induces a bijection colim(D∘i) -> colim(D). Throws NotFinal when i is
/// not final. A false return is an internal failure.
bool check_finality_theorem(const Functor& i, const SetFunctor& diagram);

/// A diagram D on A with value sets of size <= max_size whose colimit has
/// a different number of classes from colim(D∘i), if one exists.
std::optional<SetFunctor> find_distinguishing_diagram(const Functor& i, std::size_t max_size);

}  // namespace fincat
