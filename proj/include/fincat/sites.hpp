#pragma once

// Sieves, Grothendieck topologies, rigidity and sheaves on finite
// categories.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fincat/kan.hpp"

namespace fincat {

/// A set of arrows into `codomain`, closed under precomposition. `arrows`
/// is kept sorted.
struct Sieve {
  ObjectIndex codomain = 0;
  std::vector<ArrowIndex> arrows;

  bool contains(ArrowIndex f) const;
  friend bool operator==(const Sieve&, const Sieve&) = default;
  friend auto operator<=>(const Sieve&, const Sieve&) = default;
};

/// Renders "{f,g}" with arrow ids in index order.
std::string sieve_name(const Category& c, const Sieve& s);

/// Smallest sieve on c containing the generators. CodMismatch if some
/// generator does not end at c.
Sieve sieve_generate(const Category& c, ObjectIndex object, const std::vector<ArrowIndex>& generators);

Sieve maximal_sieve(const Category& c, ObjectIndex object);

/// {g : cod g = dom f, f∘g in S}. CodMismatch unless cod f is the
/// codomain of S.
Sieve pullback_sieve(const Category& c, const Sieve& s, ArrowIndex f);

/// Every sieve on c, in increasing order. TooLarge beyond 20 arrows into c.
std::vector<Sieve> all_sieves(const Category& c, ObjectIndex object);

struct Topology {
  Category base;
  std::vector<std::set<Sieve>> covers;  // per object
};

/// Only the maximal sieves cover.
Topology trivial_topology(const Category& c);

struct TopologyReport {
  bool ok = false;
  std::string axiom;   // "sieve", "maximality", "stability" or "transitivity"
  std::string object;
  std::string detail;
};

TopologyReport is_topology(const Topology& j);

/// Smallest topology containing the coverage (sieves per object, closed
/// under precomposition). Saturation alternates a stability pass over
/// every covering sieve and every arrow into its codomain with a
/// transitivity pass over every sieve of every object, in object order,
/// until nothing changes.
Topology generate_topology(const Category& c, const std::vector<std::vector<Sieve>>& coverage);

/// Objects whose only covering sieve is the maximal one. NotATopology.
std::vector<ObjectIndex> irreducibles(const Topology& j);

struct RigidityReport {
  bool rigid = false;
  std::vector<ObjectIndex> irreducibles;
  std::vector<Sieve> generated;  // per object: arrows from irreducibles
  std::vector<bool> covering;
};

RigidityReport is_rigid(const Topology& j);

/// Matching families for S: one element x_f of F(dom f) per f in S (in
/// the order of S.arrows) with F(g)(x_f) = x_(f∘g).
std::vector<std::vector<std::size_t>> matching_families(const Category& c, const SetFunctor& presheaf,
                                                        const Sieve& s,
                                                        std::uint64_t budget = kDefaultBudget);

struct SheafReport {
  bool sheaf = false;
  std::string object;
  std::optional<Sieve> sieve;
  std::size_t sections = 0;
  std::size_t families = 0;
  bool injective = false;
};

/// F is a presheaf on the base. NotATopology.
SheafReport is_sheaf(const SetFunctor& presheaf, const Topology& j,
                     std::uint64_t budget = kDefaultBudget);

struct DenseRestrictionReport {
  std::vector<ObjectIndex> irreducibles;
  Subcategory irreducible_part;
  SetFunctor restricted;  // F on the irreducibles
  SetFunctor extended;    // Ran of the restriction, a presheaf on the base
  /// F -> Ran(F|irr), x |-> (F(h)(x)) for h: d -> c with d irreducible.
  std::optional<NatTransformation> comparison;
  bool comparison_bijective = false;
  /// is_sheaf(Ran(G)) for each supplied G on the irreducibles.
  std::vector<bool> extensions_are_sheaves;
};

/// For rigid J and a J-sheaf F: restricts F to the irreducibles, takes Ran
/// back along the inclusion and compares. Each G in `others` (presheaves
/// on the irreducible subcategory) is extended the same way and checked
/// to be a sheaf. NotRigid, NotASheaf.
DenseRestrictionReport dense_restriction_equivalence(const Topology& j, const SetFunctor& sheaf,
                                                     const std::vector<SetFunctor>& others = {},
                                                     std::uint64_t budget = kDefaultBudget);

/// The full subcategory of irreducibles, for building presheaves on it.
Subcategory irreducible_subcategory(const Topology& j);

}  // namespace fincat
