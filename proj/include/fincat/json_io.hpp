#pragma once

// JSON formats for every value the command line reads or writes.
//
//   category:   {"objects":[..], "arrows":[{"id","dom","cod"}..],
//                "identity":{obj:arrow}, "compose":[{"g","f","gf"}..]}
//               unit compositions may be omitted.
//   functor:    {"source":cat, "target":cat, "objects":{..}, "arrows":{..}}
//   setfunctor: {"base":cat, "variance":"covariant"|"presheaf",
//                "sets":{obj:[..]}, "maps":{arrow:{elem:elem}}}
//               for a presheaf, f: c -> d maps sets[d] into sets[c].
//   profunctor: {"source":cat, "target":cat,
//                "values":{c:{"sets":{..},"maps":{..}}},
//                "actions":{f:{d:{elem:elem}}}}
//   topology:   {"covers":{obj:[[arrow ids]..]}}, sieves given by
//               generators.
//   quotient:   {"classes":[[[part,elem]..]..], "injections":{part:{elem:k}}}
//
// A "cat" field is an inline category or a string naming one, resolved
// through the caller's resolver. Maps of identity arrows may be omitted.
// Shape errors raise ParseError.

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "fincat/adjoint.hpp"
#include "fincat/karoubi.hpp"
#include "fincat/sites.hpp"

namespace fincat::json_io {

using Json = nlohmann::json;

using CategoryResolver = std::function<std::optional<Category>(const std::string&)>;

/// Parses text; ParseError with the parser's message.
Json parse(const std::string& text);

RawCategory raw_category_from_json(const Json& j);
/// add_unit_laws, then validate_category.
Category category_from_json(const Json& j, const CategoryResolver& resolve = {});
Json to_json(const Category& c);

Functor functor_from_json(const Json& j, const CategoryResolver& resolve = {});
Json to_json(const Functor& f);

struct LoadedSetFunctor {
  SetFunctor functor;  // base is opposite(category) for presheaves
  Category category;   // the category named in the file
  bool presheaf = false;
};

LoadedSetFunctor set_functor_from_json(const Json& j, const CategoryResolver& resolve = {});
/// For a presheaf, `f.base()` is opposite(C) and the file names C.
Json to_json(const SetFunctor& f, bool presheaf);

Profunctor profunctor_from_json(const Json& j, const CategoryResolver& resolve = {});
Json to_json(const Profunctor& p);

/// Covers on `base` with each sieve closed under precomposition. No other
/// axiom is enforced here.
Topology topology_from_json(const Category& base, const Json& j);
Json to_json(const Topology& t);

Json to_json(const QuotientSet& q);
Json to_json(const NatTransformation& t);
Json to_json(const Category& c, const Sieve& s);

}  // namespace fincat::json_io
