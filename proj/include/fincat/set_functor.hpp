#pragma once

// Finite-set-valued functors, natural transformations between them, and
// the element / fibration constructions built from them.
//
// A SetFunctor is always covariant on its base. A presheaf on C is a
// SetFunctor whose base is opposite(C); its map for an arrow f: c -> d of
// C goes F(d) -> F(c).
//
// Variance conventions for categories of elements (everything projects to
// C after at most one dualization):
//
//   functor                  construction           arrow (c,x) -> (d,y)
//   P: C -> Set              elements_covariant(P)  f: c -> d, P(f)(x) = y
//   F: C^op -> Set           elements_presheaf(F)   f: c -> d, F(f)(y) = x
//
// elements_covariant(P) is the discrete opfibration of P, and the opposite
// of elements_presheaf(F) is the discrete fibration of F. The projection
// "∫P -> C^op" used in tensor-product formulas is
// opposite(elements_covariant(P)) -> opposite(C).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class SetFunctor {
 public:
  /// sets[c] lists the element ids of F(c); maps[f][i] is the index in
  /// sets[cod f] of the image of element i of sets[dom f]. Validates
  /// identities and composition (FunctorViolation) and element-id
  /// uniqueness (DuplicateId).
  SetFunctor(Category base, std::vector<std::vector<std::string>> sets,
             std::vector<std::vector<std::size_t>> maps);

  /// The constant functor with value `elements` and identity actions.
  static SetFunctor constant(const Category& base, const std::vector<std::string>& elements);

  const Category& base() const { return base_; }
  std::size_t size(ObjectIndex c) const { return d_->sets[c].size(); }
  std::size_t total_size() const;
  const std::vector<std::string>& set(ObjectIndex c) const { return d_->sets[c]; }
  const std::string& element(ObjectIndex c, std::size_t x) const { return d_->sets[c][x]; }
  std::optional<std::size_t> find_element(ObjectIndex c, const std::string& id) const;
  std::size_t element_index(ObjectIndex c, const std::string& id) const;  // throws UnknownElement

  const std::vector<std::size_t>& map(ArrowIndex f) const { return d_->maps[f]; }
  std::size_t apply(ArrowIndex f, std::size_t x) const { return d_->maps[f][x]; }

  const std::vector<std::vector<std::string>>& sets() const { return d_->sets; }
  const std::vector<std::vector<std::size_t>>& maps() const { return d_->maps; }

  /// this∘along, a functor on along.source().
  SetFunctor restrict(const Functor& along) const;

 private:
  struct Data {
    std::vector<std::vector<std::string>> sets;
    std::vector<std::vector<std::size_t>> maps;
    std::vector<std::map<std::string, std::size_t>> index;
  };
  Category base_;
  std::shared_ptr<const Data> d_;
};

bool operator==(const SetFunctor& a, const SetFunctor& b);

/// Throws BaseMismatch unless both functors live on equal bases.
void require_same_base(const SetFunctor& a, const SetFunctor& b, const char* context);

class NatTransformation {
 public:
  /// components[c][x] is the index in target(c) of the image of element x
  /// of source(c). Checks every naturality square (NaturalityViolation).
  NatTransformation(SetFunctor source, SetFunctor target,
                    std::vector<std::vector<std::size_t>> components);

  static NatTransformation identity(const SetFunctor& f);

  const SetFunctor& source() const { return source_; }
  const SetFunctor& target() const { return target_; }
  const std::vector<std::size_t>& component(ObjectIndex c) const { return components_[c]; }
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  std::size_t apply(ObjectIndex c, std::size_t x) const { return components_[c][x]; }

  bool pointwise_injective() const;
  bool pointwise_bijective() const;

  /// Canonical rendering "{c:[x>y,...];...}" in object order; two
  /// transformations between the same functors are equal iff their labels
  /// are.
  std::string label() const;

 private:
  SetFunctor source_;
  SetFunctor target_;
  std::vector<std::vector<std::size_t>> components_;
};

bool operator==(const NatTransformation& a, const NatTransformation& b);

/// second∘first.
NatTransformation vertical_compose(const NatTransformation& second, const NatTransformation& first);

/// Hom(-, c) as a presheaf on C: sets(d) are the arrows d -> c (by id).
SetFunctor yoneda(const Category& c, ObjectIndex object);

/// Hom(c, -) as a covariant functor on C.
SetFunctor corepresentable(const Category& c, ObjectIndex object);

/// For covariant F on D and x in F(d): the transformation Hom(d, -) -> F
/// sending h to F(h)(x).
NatTransformation yoneda_element(const SetFunctor& f, ObjectIndex d, std::size_t x);

struct Elements {
  Category category;
  Functor projection;  // to C (the base, or its opposite for presheaves)
  std::vector<ObjectIndex> base_object;
  std::vector<std::size_t> element;

  std::optional<ObjectIndex> find(ObjectIndex c, std::size_t x) const;
  ObjectIndex at(ObjectIndex c, std::size_t x) const;

  std::vector<std::vector<ObjectIndex>> lookup;  // lookup[c][x]
};

/// Category of elements of a presheaf F on C (F.base() == opposite(C)).
/// Object ids "(c,x)"; the arrow f: c -> d from (c, F(f)(y)) to (d, y)
/// has id "(f,(d,y))".
Elements elements_presheaf(const SetFunctor& presheaf);

/// Category of elements of a covariant P on C. The arrow f: c -> d from
/// (c, x) to (d, P(f)(x)) has id "(f,(c,x))".
Elements elements_covariant(const SetFunctor& functor);

struct DiscreteOpfibration {
  Category total;        // objects ⨿_c G(c), arrows ⨿_f G(dom f)
  Functor projection;    // p: total -> C
  Functor to_elements;   // isomorphism over C onto elements_covariant(G)
  Elements elements;
};

/// The discrete opfibration of G assembled from coproducts: object
/// "<c|x>" for x in G(c), arrow "<f|x>" for x in G(dom f) with domain
/// <dom f|x> and codomain <cod f|G(f)(x)>. The comparison with
/// elements_covariant(G) is built and verified arrow by arrow.
DiscreteOpfibration discrete_opfibration(const SetFunctor& g);

/// All natural transformations F -> G, duplicate-free, in lexicographic
/// order of components. SearchBudgetExceeded when the raw product of
/// component spaces exceeds `budget`.
std::vector<NatTransformation> nat_transformations(const SetFunctor& source,
                                                   const SetFunctor& target,
                                                   std::uint64_t budget = kDefaultBudget);

/// Some natural isomorphism source -> target, if one exists.
std::optional<NatTransformation> find_isomorphism(const SetFunctor& source,
                                                  const SetFunctor& target,
                                                  std::uint64_t budget = kDefaultBudget);

/// Every SetFunctor on `base` with |F(c)| <= max_size, elements named
/// "0", "1", ... . `visit` returns false to stop.
void enumerate_set_functors(const Category& base, std::size_t max_size,
                            const std::function<bool(const SetFunctor&)>& visit);

}  // namespace fincat
