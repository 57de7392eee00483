#pragma once

// Flatness of presheaves on a finite category, by the three filtering
// conditions and, independently, by filteredness of the category of
// elements.

#include <map>
#include <string>

#include "fincat/set_functor.hpp"

namespace fincat {

struct FlatnessReport {
  bool flat = false;
  /// 0 when flat, otherwise the first failing condition:
  /// 1 every F(c) is empty;
  /// 2 x in F(c), y in F(d) have no common extension along c -> b <- d;
  /// 3 parallel u, v: d -> c agreeing on x in F(c) are not coequalized
  ///   by any w: c -> b with x in the image of F(w).
  int condition = 0;
  std::map<std::string, std::string> witness;
};

/// F is a presheaf on C, i.e. F.base() is opposite(C). Conditions are
/// tried in order and the first violation is reported.
FlatnessReport is_flat(const SetFunctor& presheaf);

/// is_filtered(elements_presheaf(F)).
bool is_flat_via_elements(const SetFunctor& presheaf);

}  // namespace fincat
