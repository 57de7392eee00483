#include "fincat/adjoint.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::vector<std::vector<std::size_t>> identity_components(const SetFunctor& f) {
  std::vector<std::vector<std::size_t>> comps(f.base().object_count());
  for (ObjectIndex c = 0; c < comps.size(); ++c) {
    for (std::size_t x = 0; x < f.size(c); ++x) comps[c].push_back(x);
  }
  return comps;
}

std::size_t index_in(const std::vector<ArrowIndex>& arrows, ArrowIndex a) {
  return static_cast<std::size_t>(std::find(arrows.begin(), arrows.end(), a) - arrows.begin());
}

}  // namespace

// ------------------------------------------------------------- Profunctor

Profunctor::Profunctor(Category source, Category target, std::vector<SetFunctor> values,
                       std::vector<NatTransformation> actions)
    : d_(std::make_shared<Data>()) {
  const Category op = opposite(target);
  if (values.size() != source.object_count() || actions.size() != source.arrow_count()) {
    throw Error(ErrorKind::kFunctorViolation, "profunctor does not cover its source");
  }
  for (const auto& v : values) {
    if (!identical(v.base(), op)) {
      throw Error(ErrorKind::kBaseMismatch, "profunctor values must be presheaves on the target");
    }
  }
  for (ArrowIndex f = 0; f < source.arrow_count(); ++f) {
    if (!(actions[f].source() == values[source.dom(f)]) ||
        !(actions[f].target() == values[source.cod(f)])) {
      throw Error(ErrorKind::kFunctorViolation,
                  "action of '" + source.arrow_name(f) + "' has the wrong endpoints");
    }
  }
  for (ObjectIndex c = 0; c < source.object_count(); ++c) {
    if (actions[source.identity(c)].components() != identity_components(values[c])) {
      throw Error(ErrorKind::kFunctorViolation,
                  "identity of '" + source.object_name(c) + "' does not act as the identity");
    }
  }
  for (ArrowIndex f = 0; f < source.arrow_count(); ++f) {
    for (ArrowIndex g : source.arrows_from(source.cod(f))) {
      if (vertical_compose(actions[g], actions[f]).components() !=
          actions[source.compose(g, f)].components()) {
        throw Error(ErrorKind::kFunctorViolation, "composite '" + source.arrow_name(g) + "'∘'" +
                                                      source.arrow_name(f) + "' is not preserved");
      }
    }
  }
  d_->source = std::move(source);
  d_->target = std::move(target);
  d_->values = std::move(values);
  d_->actions = std::move(actions);
  for (const auto& v : d_->values) d_->elements.push_back(elements_presheaf(v));

  const Category& dc = d_->target;
  for (ObjectIndex d = 0; d < dc.object_count(); ++d) {
    d_->representables.push_back(corepresentable(dc, d));
    d_->tilde_representables.push_back(tilde(*this, d_->representables.back()));
  }
  for (ArrowIndex g = 0; g < dc.arrow_count(); ++g) {
    // y_g: Hom(d', -) -> Hom(d, -), h |-> h∘g
    const ObjectIndex d = dc.dom(g);
    const ObjectIndex d2 = dc.cod(g);
    std::vector<std::vector<std::size_t>> comps(dc.object_count());
    for (ObjectIndex e = 0; e < dc.object_count(); ++e) {
      for (ArrowIndex h : dc.hom(d2, e)) comps[e].push_back(index_in(dc.hom(d, e), dc.compose(h, g)));
    }
    NatTransformation yg(d_->representables[d2], d_->representables[d], std::move(comps));
    d_->tilde_arrows.push_back(
        tilde_map(*this, yg, d_->tilde_representables[d2], d_->tilde_representables[d]));
  }
}

Profunctor profunctor_from_functor(const Functor& f) {
  const Category& d = f.source();
  const Category& c = f.target();
  const Category op = opposite(d);
  std::vector<SetFunctor> values;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    std::vector<std::vector<std::string>> sets(d.object_count());
    for (ObjectIndex e = 0; e < d.object_count(); ++e) {
      for (ArrowIndex h : c.hom(f.on_object(e), x)) sets[e].push_back(c.arrow_name(h));
    }
    // k: e' -> e acts Hom(f e, x) -> Hom(f e', x) by h |-> h∘f(k)
    std::vector<std::vector<std::size_t>> maps(d.arrow_count());
    for (ArrowIndex k = 0; k < d.arrow_count(); ++k) {
      const auto& to = c.hom(f.on_object(d.dom(k)), x);
      for (ArrowIndex h : c.hom(f.on_object(d.cod(k)), x)) {
        maps[k].push_back(index_in(to, c.compose(h, f.on_arrow(k))));
      }
    }
    values.emplace_back(op, std::move(sets), std::move(maps));
  }
  std::vector<NatTransformation> actions;
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    std::vector<std::vector<std::size_t>> comps(d.object_count());
    for (ObjectIndex e = 0; e < d.object_count(); ++e) {
      const auto& to = c.hom(f.on_object(e), c.cod(g));
      for (ArrowIndex h : c.hom(f.on_object(e), c.dom(g))) {
        comps[e].push_back(index_in(to, c.compose(g, h)));
      }
    }
    actions.emplace_back(values[c.dom(g)], values[c.cod(g)], std::move(comps));
  }
  return Profunctor(c, d, std::move(values), std::move(actions));
}

Profunctor profunctor_from_product(const Category& c, const Category& d, const SetFunctor& h) {
  const Category op = opposite(d);
  if (!identical(h.base(), product_category(c, op))) {
    throw Error(ErrorKind::kBaseMismatch, "expected a functor on C x D^op");
  }
  auto obj = [&](ObjectIndex x, ObjectIndex e) { return x * d.object_count() + e; };
  auto arr = [&](ArrowIndex f, ArrowIndex k) { return f * d.arrow_count() + k; };
  std::vector<SetFunctor> values;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    std::vector<std::vector<std::string>> sets(d.object_count());
    std::vector<std::vector<std::size_t>> maps(d.arrow_count());
    for (ObjectIndex e = 0; e < d.object_count(); ++e) sets[e] = h.set(obj(x, e));
    for (ArrowIndex k = 0; k < d.arrow_count(); ++k) maps[k] = h.map(arr(c.identity(x), k));
    values.emplace_back(op, std::move(sets), std::move(maps));
  }
  std::vector<NatTransformation> actions;
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    std::vector<std::vector<std::size_t>> comps(d.object_count());
    for (ObjectIndex e = 0; e < d.object_count(); ++e) comps[e] = h.map(arr(f, d.identity(e)));
    actions.emplace_back(values[c.dom(f)], values[c.cod(f)], std::move(comps));
  }
  return Profunctor(c, d, std::move(values), std::move(actions));
}

// ------------------------------------------------------------------ tilde

Tilde tilde(const Profunctor& p, const SetFunctor& f) {
  if (!identical(f.base(), p.target())) {
    throw Error(ErrorKind::kBaseMismatch, "tilde needs a functor on the profunctor's target");
  }
  const Category& c = p.source();
  Tilde out{SetFunctor::constant(Category(), {}), {}};
  std::vector<std::vector<std::string>> sets;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    out.values.push_back(colimit(f.restrict(p.elements(x).projection)));
    sets.emplace_back();
    for (std::size_t k = 0; k < out.values.back().size(); ++k) {
      sets.back().push_back(out.values.back().class_name(k));
    }
  }
  std::vector<std::vector<std::size_t>> maps(c.arrow_count());
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    const Elements& from = p.elements(c.dom(g));
    const Elements& to = p.elements(c.cod(g));
    const NatTransformation& pg = p.action(g);
    const QuotientSet& q = out.values[c.dom(g)];
    const QuotientSet& q2 = out.values[c.cod(g)];
    for (std::size_t k = 0; k < q.size(); ++k) {
      std::size_t image = q2.size();
      for (const Member& m : q.members(k)) {
        const ObjectIndex d = from.base_object[m.part];
        const std::size_t z = pg.apply(d, from.element[m.part]);
        const std::size_t t = q2.class_of(to.at(d, z), m.element);
        if (image != q2.size() && image != t) {
          throw Error(ErrorKind::kSelfTestFailure, "tilde action is not well defined on classes");
        }
        image = t;
      }
      maps[g].push_back(image);
    }
  }
  out.functor = SetFunctor(c, std::move(sets), std::move(maps));
  return out;
}

NatTransformation tilde_map(const Profunctor& p, const NatTransformation& a, const Tilde& from,
                            const Tilde& to) {
  const Category& c = p.source();
  std::vector<std::vector<std::size_t>> comps(c.object_count());
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    const Elements& el = p.elements(x);
    const QuotientSet& q = from.values[x];
    const QuotientSet& q2 = to.values[x];
    for (std::size_t k = 0; k < q.size(); ++k) {
      std::size_t image = q2.size();
      for (const Member& m : q.members(k)) {
        const std::size_t t = q2.class_of(m.part, a.apply(el.base_object[m.part], m.element));
        if (image != q2.size() && image != t) {
          throw Error(ErrorKind::kSelfTestFailure, "tilde of a transformation is not well defined");
        }
        image = t;
      }
      comps[x].push_back(image);
    }
  }
  return NatTransformation(from.functor, to.functor, std::move(comps));
}

NatTransformation tilde_map(const Profunctor& p, const NatTransformation& a) {
  return tilde_map(p, a, tilde(p, a.source()), tilde(p, a.target()));
}

// ---------------------------------------------------------------------- r

std::size_t RightAdjoint::find(ObjectIndex d, const NatTransformation& t) const {
  auto it = index[d].find(t.components());
  if (it == index[d].end()) {
    throw Error(ErrorKind::kSelfTestFailure, "transformation missing from G_r");
  }
  return it->second;
}

RightAdjoint r(const Profunctor& p, const SetFunctor& g, std::uint64_t budget) {
  if (!identical(g.base(), p.source())) {
    throw Error(ErrorKind::kBaseMismatch, "r needs a functor on the profunctor's source");
  }
  const Category& dc = p.target();
  RightAdjoint out{SetFunctor::constant(Category(), {}), {}, {}};
  std::vector<std::vector<std::string>> sets(dc.object_count());
  for (ObjectIndex d = 0; d < dc.object_count(); ++d) {
    out.elements.push_back(nat_transformations(p.tilde_representable(d).functor, g, budget));
    out.index.emplace_back();
    for (std::size_t k = 0; k < out.elements[d].size(); ++k) {
      out.index[d][out.elements[d][k].components()] = k;
      sets[d].push_back(out.elements[d][k].label());
    }
  }
  std::vector<std::vector<std::size_t>> maps(dc.arrow_count());
  for (ArrowIndex a = 0; a < dc.arrow_count(); ++a) {
    for (const auto& beta : out.elements[dc.dom(a)]) {
      maps[a].push_back(out.find(dc.cod(a), vertical_compose(beta, p.tilde_yoneda_arrow(a))));
    }
  }
  out.functor = SetFunctor(dc, std::move(sets), std::move(maps));
  return out;
}

NatTransformation r_map(const Profunctor& p, const NatTransformation& gamma, const RightAdjoint& from,
                        const RightAdjoint& to) {
  const Category& dc = p.target();
  std::vector<std::vector<std::size_t>> comps(dc.object_count());
  for (ObjectIndex d = 0; d < dc.object_count(); ++d) {
    for (const auto& beta : from.elements[d]) {
      comps[d].push_back(to.find(d, vertical_compose(gamma, beta)));
    }
  }
  return NatTransformation(from.functor, to.functor, std::move(comps));
}

// ---------------------------------------------------------- the bijection

namespace {

// alpha∘tilde(a_x) for every d, x: the components of chi(alpha).
std::vector<std::vector<std::size_t>> chi_components(const Profunctor& p, const SetFunctor& f,
                                                     const Tilde& tf, const NatTransformation& alpha,
                                                     const RightAdjoint& rg) {
  const Category& dc = p.target();
  std::vector<std::vector<std::size_t>> comps(dc.object_count());
  for (ObjectIndex d = 0; d < dc.object_count(); ++d) {
    for (std::size_t x = 0; x < f.size(d); ++x) {
      const NatTransformation ax = yoneda_element(f, d, x);
      const NatTransformation tilde_ax = tilde_map(p, ax, p.tilde_representable(d), tf);
      comps[d].push_back(rg.find(d, vertical_compose(alpha, tilde_ax)));
    }
  }
  return comps;
}

// beta(d)(x)(c)(class of ((d, z), id_d)) on every class of tilde(F)(c),
// where pick(d, x) names the transformation beta(d)(x).
std::vector<std::vector<std::size_t>> tau_components(
    const Profunctor& p, const Tilde& tf,
    const std::function<const NatTransformation&(ObjectIndex, std::size_t)>& pick) {
  const Category& c = p.source();
  const Category& dc = p.target();
  std::vector<std::vector<std::size_t>> comps(c.object_count());
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    const Elements& el = p.elements(x);
    const QuotientSet& q = tf.values[x];
    for (std::size_t k = 0; k < q.size(); ++k) {
      std::size_t image = 0;
      bool first = true;
      for (const Member& m : q.members(k)) {
        const ObjectIndex d = el.base_object[m.part];
        const std::size_t id_pos = index_in(dc.hom(d, d), dc.identity(d));
        const std::size_t cls = p.tilde_representable(d).values[x].class_of(m.part, id_pos);
        const std::size_t t = pick(d, m.element).apply(x, cls);
        if (!first && t != image) {
          throw Error(ErrorKind::kSelfTestFailure, "tau is not well defined on classes");
        }
        image = t;
        first = false;
      }
      comps[x].push_back(image);
    }
  }
  return comps;
}

}  // namespace

AdjunctionBijection adjunction_bijection(const Profunctor& p, const SetFunctor& f,
                                         const SetFunctor& g, std::uint64_t budget) {
  const Tilde tf = tilde(p, f);
  const RightAdjoint rg = r(p, g, budget);
  AdjunctionBijection out;
  out.tilde_side = nat_transformations(tf.functor, g, budget);
  out.r_side = nat_transformations(f, rg.functor, budget);

  std::map<std::vector<std::vector<std::size_t>>, std::size_t> tilde_index, r_index;
  for (std::size_t k = 0; k < out.tilde_side.size(); ++k) tilde_index[out.tilde_side[k].components()] = k;
  for (std::size_t k = 0; k < out.r_side.size(); ++k) r_index[out.r_side[k].components()] = k;

  auto lookup = [](const auto& index, const std::vector<std::vector<std::size_t>>& comps) {
    auto it = index.find(comps);
    if (it == index.end()) {
      throw Error(ErrorKind::kSelfTestFailure, "image missing from the enumerated hom-set");
    }
    return it->second;
  };
  for (const auto& alpha : out.tilde_side) {
    out.chi.push_back(lookup(r_index, chi_components(p, f, tf, alpha, rg)));
  }
  for (const auto& beta : out.r_side) {
    auto comps = tau_components(p, tf, [&](ObjectIndex d, std::size_t x) -> const NatTransformation& {
      return rg.elements[d][beta.apply(d, x)];
    });
    // constructing the transformation checks naturality
    NatTransformation tau(tf.functor, g, std::move(comps));
    out.tau.push_back(lookup(tilde_index, tau.components()));
  }
  out.mutually_inverse = out.tau.size() == out.r_side.size() && out.chi.size() == out.tilde_side.size();
  for (std::size_t k = 0; k < out.chi.size() && out.mutually_inverse; ++k) {
    out.mutually_inverse = out.tau[out.chi[k]] == k;
  }
  for (std::size_t k = 0; k < out.tau.size() && out.mutually_inverse; ++k) {
    out.mutually_inverse = out.chi[out.tau[k]] == k;
  }
  return out;
}

NatTransformation unit(const Profunctor& p, const SetFunctor& f, const Tilde& tf,
                       const RightAdjoint& rtf) {
  return NatTransformation(f, rtf.functor,
                           chi_components(p, f, tf, NatTransformation::identity(tf.functor), rtf));
}

NatTransformation unit(const Profunctor& p, const SetFunctor& f, std::uint64_t budget) {
  const Tilde tf = tilde(p, f);
  return unit(p, f, tf, r(p, tf.functor, budget));
}

NatTransformation counit(const Profunctor& p, const SetFunctor& g, const RightAdjoint& rg,
                         const Tilde& trg) {
  auto comps = tau_components(p, trg, [&](ObjectIndex d, std::size_t k) -> const NatTransformation& {
    return rg.elements[d][k];
  });
  return NatTransformation(trg.functor, g, std::move(comps));
}

NatTransformation counit(const Profunctor& p, const SetFunctor& g, std::uint64_t budget) {
  const RightAdjoint rg = r(p, g, budget);
  return counit(p, g, rg, tilde(p, rg.functor));
}

TriangleReport triangle_identities(const Profunctor& p, const SetFunctor& f, const SetFunctor& g,
                                   std::uint64_t budget) {
  TriangleReport report;
  {
    const Tilde tf = tilde(p, f);
    const RightAdjoint rtf = r(p, tf.functor, budget);
    const NatTransformation eta = unit(p, f, tf, rtf);
    const Tilde trtf = tilde(p, rtf.functor);
    const NatTransformation tilde_eta = tilde_map(p, eta, tf, trtf);
    const NatTransformation eps = counit(p, tf.functor, rtf, trtf);
    report.tilde_side =
        vertical_compose(eps, tilde_eta).components() == identity_components(tf.functor);
  }
  {
    const RightAdjoint rg = r(p, g, budget);
    const Tilde trg = tilde(p, rg.functor);
    const NatTransformation eps = counit(p, g, rg, trg);
    const RightAdjoint rtrg = r(p, trg.functor, budget);
    const NatTransformation eta = unit(p, rg.functor, trg, rtrg);
    const NatTransformation eps_r = r_map(p, eps, rtrg, rg);
    report.r_side = vertical_compose(eps_r, eta).components() == identity_components(rg.functor);
  }
  return report;
}

bool unit_monic_check(const Profunctor& p, const SetFunctor& f, ObjectIndex b, std::uint64_t budget) {
  const Tilde tf = tilde(p, f);
  const RightAdjoint rtf = r(p, tf.functor, budget);
  const NatTransformation eta = unit(p, f, tf, rtf);
  const auto& eb = eta.component(b);
  std::vector<std::size_t> sorted = eb;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  // Nat(Hom(b, -), F) by brute force, compared through tilde
  const auto transformations = nat_transformations(p.representable(b), f, budget);
  std::vector<std::vector<std::vector<std::size_t>>> images;
  for (const auto& a : transformations) {
    images.push_back(tilde_map(p, a, p.tilde_representable(b), tf).components());
  }
  bool faithful = true;
  for (std::size_t i = 0; i < images.size() && faithful; ++i) {
    for (std::size_t k = i + 1; k < images.size() && faithful; ++k) {
      faithful = images[i] != images[k];
    }
  }
  if (faithful != injective) {
    throw Error(ErrorKind::kSelfTestFailure,
                "injectivity of the unit and faithfulness of tilde on Hom(b, -) disagree");
  }
  return injective;
}

}  // namespace fincat
