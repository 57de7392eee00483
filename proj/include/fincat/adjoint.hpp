#pragma once

// The adjunction induced by a functor P: C -> [D^op, Set].
//
// For covariant F on D, tilde(F)(c) is the colimit of F over the elements
// of P(c), and f: c -> c' sends the class of ((d, z), x) to the class of
// ((d, P(f)_d(z)), x). For covariant G on C, G_r(d) is the set of natural
// transformations tilde(Hom_D(d, -)) -> G, and g: d -> d' acts by
// precomposition with tilde(y_g), y_g: Hom(d', -) -> Hom(d, -), h |-> h∘g.
//
// When P(c) = Hom_C(f(-), c) for f: D -> C, tilde is Lan_f and (-)_r is
// restriction along f.

#include <map>
#include <memory>
#include <vector>

#include "fincat/colimit.hpp"

namespace fincat {

struct Tilde {
  SetFunctor functor;              // on C
  std::vector<QuotientSet> values; // colimit over the elements of P(c)
};

class Profunctor {
 public:
  /// values[c] is a presheaf on `target` (base opposite(target));
  /// actions[f] maps values[dom f] to values[cod f]. Checks identities and
  /// composition (FunctorViolation) and bases (BaseMismatch).
  Profunctor(Category source, Category target, std::vector<SetFunctor> values,
             std::vector<NatTransformation> actions);

  const Category& source() const { return d_->source; }
  const Category& target() const { return d_->target; }
  const SetFunctor& value(ObjectIndex c) const { return d_->values[c]; }
  const NatTransformation& action(ArrowIndex f) const { return d_->actions[f]; }
  const Elements& elements(ObjectIndex c) const { return d_->elements[c]; }

  /// Hom_D(d, -), its image under tilde, and tilde(y_g) for g: d -> d'
  /// (from tilde(Hom(d', -)) to tilde(Hom(d, -))).
  const SetFunctor& representable(ObjectIndex d) const { return d_->representables[d]; }
  const Tilde& tilde_representable(ObjectIndex d) const { return d_->tilde_representables[d]; }
  const NatTransformation& tilde_yoneda_arrow(ArrowIndex g) const { return d_->tilde_arrows[g]; }

 private:
  struct Data {
    Category source;
    Category target;
    std::vector<SetFunctor> values;
    std::vector<NatTransformation> actions;
    std::vector<Elements> elements;
    std::vector<SetFunctor> representables;
    std::vector<Tilde> tilde_representables;
    std::vector<NatTransformation> tilde_arrows;
  };
  std::shared_ptr<Data> d_;
};

/// P(c) = Hom_C(f(-), c) for f: D -> C, acting by postcomposition.
Profunctor profunctor_from_functor(const Functor& f);

/// Curries H on product_category(C, opposite(D)): P(c)(d) = H(c, d).
Profunctor profunctor_from_product(const Category& c, const Category& d, const SetFunctor& h);

Tilde tilde(const Profunctor& p, const SetFunctor& f);

/// tilde(a): tilde(F) -> tilde(F'), ((d, z), x) |-> ((d, z), a_d(x)).
NatTransformation tilde_map(const Profunctor& p, const NatTransformation& a, const Tilde& from,
                            const Tilde& to);
NatTransformation tilde_map(const Profunctor& p, const NatTransformation& a);

struct RightAdjoint {
  SetFunctor functor;  // on D
  /// elements[d][k] is the transformation named functor.element(d, k);
  /// listed in lexicographic order of components.
  std::vector<std::vector<NatTransformation>> elements;
  std::vector<std::map<std::vector<std::vector<std::size_t>>, std::size_t>> index;

  std::size_t find(ObjectIndex d, const NatTransformation& t) const;
};

/// G_r. SearchBudgetExceeded from the hom-set enumeration.
RightAdjoint r(const Profunctor& p, const SetFunctor& g, std::uint64_t budget = kDefaultBudget);

/// gamma_r: G_r -> G'_r, beta |-> gamma∘beta.
NatTransformation r_map(const Profunctor& p, const NatTransformation& gamma, const RightAdjoint& from,
                        const RightAdjoint& to);

struct AdjunctionBijection {
  std::vector<NatTransformation> tilde_side;  // Nat(tilde F, G)
  std::vector<NatTransformation> r_side;      // Nat(F, G_r)
  /// tau[k]: index in tilde_side of the image of r_side[k]
  std::vector<std::size_t> tau;
  /// chi[k]: index in r_side of the image of tilde_side[k]
  std::vector<std::size_t> chi;
  bool mutually_inverse = false;
};

/// tau(beta)(c)(class of ((d, z), x)) = beta(d)(x)(c)(class of ((d, z), id_d));
/// chi(alpha)(d)(x) = alpha∘tilde(a_x) with a_x: Hom(d, -) -> F, h |-> F(h)(x).
AdjunctionBijection adjunction_bijection(const Profunctor& p, const SetFunctor& f,
                                         const SetFunctor& g, std::uint64_t budget = kDefaultBudget);

/// eta: F -> (tilde F)_r, eta(d)(x) = tilde(a_x).
NatTransformation unit(const Profunctor& p, const SetFunctor& f, const Tilde& tf,
                       const RightAdjoint& rtf);
NatTransformation unit(const Profunctor& p, const SetFunctor& f,
                       std::uint64_t budget = kDefaultBudget);

/// epsilon: tilde(G_r) -> G, class of ((d, z), beta) |-> beta(c)(class of ((d, z), id_d)).
NatTransformation counit(const Profunctor& p, const SetFunctor& g, const RightAdjoint& rg,
                         const Tilde& trg);
NatTransformation counit(const Profunctor& p, const SetFunctor& g,
                         std::uint64_t budget = kDefaultBudget);

struct TriangleReport {
  bool tilde_side = false;  // epsilon_{tilde F} ∘ tilde(eta_F) = id
  bool r_side = false;      // (epsilon_G)_r ∘ eta_{G_r} = id
};

TriangleReport triangle_identities(const Profunctor& p, const SetFunctor& f, const SetFunctor& g,
                                   std::uint64_t budget = kDefaultBudget);

/// Whether eta(b): F(b) -> (tilde F)_r(b) is injective. Also enumerates
/// Nat(Hom(b, -), F) directly and looks for distinct pairs with equal
/// images under tilde; the two answers must agree (SelfTestFailure).
bool unit_monic_check(const Profunctor& p, const SetFunctor& f, ObjectIndex b,
                      std::uint64_t budget = kDefaultBudget);

}  // namespace fincat
