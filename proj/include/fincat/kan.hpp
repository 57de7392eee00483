#pragma once

// Pointwise Kan extensions of set-valued functors, and extension of
// presheaves along full embeddings through the comma categories A_c.

#include <vector>

#include "fincat/colimit.hpp"

namespace fincat {

struct LeftKanExtension {
  SetFunctor functor;                // on C
  std::vector<CommaCategory> index;  // (f ↓ c) for each object c
  std::vector<QuotientSet> values;   // colimit over index[c]
};

/// Lan_f F for f: D -> C and covariant F on D. The value at c is the
/// colimit of F over (f ↓ c); g: c -> c' sends the class of ((d, h), x) to
/// the class of ((d, g∘h), x). Elements are named by class
/// representatives.
LeftKanExtension lan(const Functor& f, const SetFunctor& functor);

struct RightKanExtension {
  SetFunctor functor;                // on C
  std::vector<CommaCategory> index;  // (c ↓ f) for each object c
  std::vector<LimitSet> values;      // limit over index[c]
};

/// Ran_f F for f: D -> C and covariant F on D. The value at c is the limit
/// of F over (c ↓ f); g: c -> c' sends a family x to the family y with
/// y_(d, h) = x_(d, h∘g).
RightKanExtension ran(const Functor& f, const SetFunctor& functor,
                      std::uint64_t budget = kDefaultBudget);

/// An object (d, h: c -> j d) of A_c.
struct IndexPair {
  ObjectIndex d;
  ArrowIndex h;
};

struct FlatExtension {
  SetFunctor extension;                           // presheaf on C
  std::vector<Category> index;                    // A_c
  std::vector<std::vector<IndexPair>> index_objects;
  std::vector<QuotientSet> values;                // colimit of F over A_c
  /// chi[d][x]: element index in extension(j d) of the class of
  /// ((d, id), x).
  std::vector<std::vector<std::size_t>> chi;
};

/// Throws NotAnEmbedding unless j is injective on objects and arrows and
/// full.
void require_embedding(const Functor& j);

/// F̃ for a presheaf F on D and a full embedding j: D -> C. A_c has objects
/// (d, h: c -> j d) and arrows k: (d, h) -> (d', h') for k: d' -> d with
/// j(k)∘h' = h; F̃(c) is the colimit of F over A_c and g: c' -> c acts by
/// ((d, h), x) |-> ((d, h∘g), x).
FlatExtension flat_extend(const Functor& j, const SetFunctor& presheaf);

/// The partition of the carrier of A_c (same part order as flat_extend)
/// by the single-span relation: ((a, z), x) ~ ((a', z'), x') iff some
/// f: a -> b, g: a' -> b in D and y in F(b) have j(f)∘z = j(g)∘z',
/// F(f)(y) = x, F(g)(y) = x'. FlatnessRequired if F is not flat;
/// RelationNotTransitive if the relation fails to be an equivalence.
QuotientSet flat_extend_quotient(const Functor& j, const SetFunctor& presheaf, ObjectIndex c);

/// The isomorphism flat_extend(j, Hom(-, d)) -> Hom(-, j d) sending the
/// class of ((d', h), k) to j(k)∘h. Throws SelfTestFailure if the map is
/// not well defined or not bijective.
NatTransformation extension_of_representable(const Functor& j, ObjectIndex d);

}  // namespace fincat
