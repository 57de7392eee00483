#pragma once

// Small builders shared by the unit tests.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fincat/error.hpp"
#include "fincat/set_functor.hpp"

namespace support {

using Sets = std::map<std::string, std::vector<std::string>>;
using Maps = std::map<std::string, std::map<std::string, std::string>>;

/// Covariant functor on `base` from named sets and maps; identities may be
/// omitted.
inline fincat::SetFunctor functor(const fincat::Category& base, const Sets& sets, const Maps& maps) {
  std::vector<std::vector<std::string>> s(base.object_count());
  for (std::size_t c = 0; c < base.object_count(); ++c) {
    auto it = sets.find(base.object_name(c));
    if (it != sets.end()) s[c] = it->second;
  }
  auto index = [&](std::size_t c, const std::string& e) {
    for (std::size_t k = 0; k < s[c].size(); ++k) {
      if (s[c][k] == e) return k;
    }
    throw std::runtime_error("no element " + e);
  };
  std::vector<std::vector<std::size_t>> m(base.arrow_count());
  for (std::size_t f = 0; f < base.arrow_count(); ++f) {
    auto it = maps.find(base.arrow_name(f));
    for (std::size_t x = 0; x < s[base.dom(f)].size(); ++x) {
      m[f].push_back(it == maps.end() ? x : index(base.cod(f), it->second.at(s[base.dom(f)][x])));
    }
  }
  return fincat::SetFunctor(base, s, m);
}

/// Presheaf on c: maps of f: a -> b send elements of b to elements of a.
inline fincat::SetFunctor presheaf(const fincat::Category& c, const Sets& sets, const Maps& maps) {
  return functor(fincat::opposite(c), sets, maps);
}

/// The kind of the Error thrown by `f`, or fails when nothing is thrown.
inline fincat::ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const fincat::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected an Error");
}

}  // namespace support
