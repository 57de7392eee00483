#pragma once

// Small named categories used by tests, the CLI self-test and examples.
// Identity arrows are named "id_<object>".

#include <string>
#include <utility>
#include <vector>

#include "fincat/category.hpp"

namespace fincat::fixtures {

/// One object "*".
Category term();
/// a, b; f: a -> b.
Category arrow2();
/// a, b; f, g: a -> b.
Category pair();
/// a, b, c; s: c -> a, t: c -> b.
Category span();
/// a, b, c; s: a -> c, t: b -> c.
Category cospan();
/// x; e: x -> x with e∘e = e.
Category idem();
/// x; e: x -> x with e∘e = id_x.
Category z2();
/// a, b; identities only.
Category discrete2();
/// ARROW2 read as the poset a <= b.
Category poset_ab();

/// Every fixture above, keyed by its upper-case name.
std::vector<std::pair<std::string, Category>> all();

/// Category with the given objects and arrows; identities "id_<obj>" are
/// added, unit laws inferred, and `composites` lists the remaining entries
/// as {g, f, g∘f}.
Category build(const std::vector<std::string>& objects, const std::vector<RawArrow>& arrows,
               const std::vector<RawComposite>& composites = {});

}  // namespace fincat::fixtures
