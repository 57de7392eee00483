#include "fincat/set_functor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fincat {

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

// Composition constraints g∘f = gf among non-identity arrows, bucketed by
// the position (1-based, in `order`) at which the last of them is assigned.
struct CompositionSchedule {
  std::vector<ArrowIndex> order;
  struct Constraint {
    ArrowIndex g, f, gf;
  };
  std::vector<std::vector<Constraint>> ready;

  explicit CompositionSchedule(const Category& c) {
    std::vector<std::size_t> position(c.arrow_count(), 0);
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
      if (!c.is_identity(f)) {
        position[f] = order.size() + 1;
        order.push_back(f);
      }
    }
    ready.resize(order.size() + 1);
    for (ArrowIndex f : order) {
      for (ArrowIndex g : c.arrows_from(c.cod(f))) {
        if (c.is_identity(g)) continue;
        const ArrowIndex gf = c.compose(g, f);
        ready[std::max({position[f], position[g], position[gf]})].push_back({g, f, gf});
      }
    }
  }
};

bool advance(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------- SetFunctor

SetFunctor::SetFunctor(Category base, std::vector<std::vector<std::string>> sets,
                       std::vector<std::vector<std::size_t>> maps)
    : base_(std::move(base)) {
  const Category& c = base_;
  if (sets.size() != c.object_count() || maps.size() != c.arrow_count()) {
    throw Error(ErrorKind::kFunctorViolation, "set functor does not cover its base");
  }
  auto data = std::make_shared<Data>();
  data->index.resize(sets.size());
  for (ObjectIndex x = 0; x < sets.size(); ++x) {
    for (std::size_t i = 0; i < sets[x].size(); ++i) {
      if (!data->index[x].emplace(sets[x][i], i).second) {
        throw Error(ErrorKind::kDuplicateId,
                    "element '" + sets[x][i] + "' repeated at object '" + c.object_name(x) + "'");
      }
    }
  }
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    if (maps[f].size() != sets[c.dom(f)].size()) {
      throw Error(ErrorKind::kFunctorViolation, "map of '" + c.arrow_name(f) + "' has the wrong domain");
    }
    for (std::size_t y : maps[f]) {
      if (y >= sets[c.cod(f)].size()) {
        throw Error(ErrorKind::kFunctorViolation,
                    "map of '" + c.arrow_name(f) + "' leaves its codomain");
      }
    }
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    const auto& m = maps[c.identity(x)];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != i) {
        throw Error(ErrorKind::kFunctorViolation,
                    "identity of '" + c.object_name(x) + "' does not act as the identity");
      }
    }
  }
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    for (ArrowIndex g : c.arrows_from(c.cod(f))) {
      const auto& gf = maps[c.compose(g, f)];
      for (std::size_t i = 0; i < maps[f].size(); ++i) {
        if (maps[g][maps[f][i]] != gf[i]) {
          throw Error(ErrorKind::kFunctorViolation, "composite '" + c.arrow_name(g) + "'∘'" +
                                                        c.arrow_name(f) + "' is not preserved");
        }
      }
    }
  }
  data->sets = std::move(sets);
  data->maps = std::move(maps);
  d_ = std::move(data);
}

SetFunctor SetFunctor::constant(const Category& base, const std::vector<std::string>& elements) {
  std::vector<std::vector<std::string>> sets(base.object_count(), elements);
  std::vector<std::size_t> identity(elements.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  std::vector<std::vector<std::size_t>> maps(base.arrow_count(), identity);
  return SetFunctor(base, std::move(sets), std::move(maps));
}

std::size_t SetFunctor::total_size() const {
  std::size_t n = 0;
  for (const auto& s : d_->sets) n += s.size();
  return n;
}

std::optional<std::size_t> SetFunctor::find_element(ObjectIndex c, const std::string& id) const {
  auto it = d_->index[c].find(id);
  if (it == d_->index[c].end()) return std::nullopt;
  return it->second;
}

std::size_t SetFunctor::element_index(ObjectIndex c, const std::string& id) const {
  if (auto x = find_element(c, id)) return *x;
  throw Error(ErrorKind::kUnknownElement, "'" + id + "' at object '" + base_.object_name(c) + "'");
}

SetFunctor SetFunctor::restrict(const Functor& along) const {
  if (!identical(along.target(), base_)) {
    throw Error(ErrorKind::kBaseMismatch, "restriction along a functor into a different category");
  }
  const Category& s = along.source();
  std::vector<std::vector<std::string>> sets(s.object_count());
  std::vector<std::vector<std::size_t>> maps(s.arrow_count());
  for (ObjectIndex c = 0; c < s.object_count(); ++c) sets[c] = set(along.on_object(c));
  for (ArrowIndex f = 0; f < s.arrow_count(); ++f) maps[f] = map(along.on_arrow(f));
  return SetFunctor(s, std::move(sets), std::move(maps));
}

bool operator==(const SetFunctor& a, const SetFunctor& b) {
  return a.base() == b.base() && a.sets() == b.sets() && a.maps() == b.maps();
}

void require_same_base(const SetFunctor& a, const SetFunctor& b, const char* context) {
  if (!identical(a.base(), b.base())) {
    throw Error(ErrorKind::kBaseMismatch, std::string(context) + ": functors on different bases");
  }
}

// ------------------------------------------------------ NatTransformation

NatTransformation::NatTransformation(SetFunctor source, SetFunctor target,
                                     std::vector<std::vector<std::size_t>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_base(source_, target_, "natural transformation");
  const Category& c = source_.base();
  if (components_.size() != c.object_count()) {
    throw Error(ErrorKind::kNaturalityViolation, "components do not cover the base");
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (components_[x].size() != source_.size(x)) {
      throw Error(ErrorKind::kNaturalityViolation,
                  "component at '" + c.object_name(x) + "' has the wrong domain");
    }
    for (std::size_t y : components_[x]) {
      if (y >= target_.size(x)) {
        throw Error(ErrorKind::kNaturalityViolation,
                    "component at '" + c.object_name(x) + "' leaves its codomain");
      }
    }
  }
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    for (std::size_t i = 0; i < source_.size(c.dom(f)); ++i) {
      if (target_.apply(f, components_[c.dom(f)][i]) !=
          components_[c.cod(f)][source_.apply(f, i)]) {
        throw Error(ErrorKind::kNaturalityViolation, "square for '" + c.arrow_name(f) +
                                                         "' fails at element '" +
                                                         source_.element(c.dom(f), i) + "'");
      }
    }
  }
}

NatTransformation NatTransformation::identity(const SetFunctor& f) {
  std::vector<std::vector<std::size_t>> comps(f.base().object_count());
  for (ObjectIndex c = 0; c < comps.size(); ++c) {
    comps[c].resize(f.size(c));
    for (std::size_t i = 0; i < f.size(c); ++i) comps[c][i] = i;
  }
  return NatTransformation(f, f, std::move(comps));
}

bool NatTransformation::pointwise_injective() const {
  for (const auto& comp : components_) {
    std::vector<std::size_t> sorted = comp;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  return true;
}

bool NatTransformation::pointwise_bijective() const {
  for (ObjectIndex c = 0; c < components_.size(); ++c) {
    if (source_.size(c) != target_.size(c)) return false;
  }
  return pointwise_injective();
}

std::string NatTransformation::label() const {
  std::string out = "{";
  const Category& c = source_.base();
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (x > 0) out += ";";
    out += c.object_name(x) + ":[";
    for (std::size_t i = 0; i < components_[x].size(); ++i) {
      if (i > 0) out += ",";
      out += source_.element(x, i) + ">" + target_.element(x, components_[x][i]);
    }
    out += "]";
  }
  return out + "}";
}

bool operator==(const NatTransformation& a, const NatTransformation& b) {
  return a.source() == b.source() && a.target() == b.target() && a.components() == b.components();
}

NatTransformation vertical_compose(const NatTransformation& second, const NatTransformation& first) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorKind::kBaseMismatch, "transformations are not composable");
  }
  auto comps = first.components();
  for (ObjectIndex c = 0; c < comps.size(); ++c) {
    for (auto& y : comps[c]) y = second.apply(c, y);
  }
  return NatTransformation(first.source(), second.target(), std::move(comps));
}

// --------------------------------------------------------- representables

SetFunctor yoneda(const Category& c, ObjectIndex object) {
  if (object >= c.object_count()) throw Error(ErrorKind::kUnknownObject, "yoneda: object index");
  Category op = opposite(c);
  std::vector<std::vector<std::string>> sets(c.object_count());
  std::vector<std::size_t> position(c.arrow_count(), 0);
  for (ObjectIndex d = 0; d < c.object_count(); ++d) {
    const auto& hom = c.hom(d, object);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      sets[d].push_back(c.arrow_name(hom[i]));
      position[hom[i]] = i;
    }
  }
  // g: d' -> d in C acts Hom(d, c) -> Hom(d', c) by h |-> h∘g.
  std::vector<std::vector<std::size_t>> maps(c.arrow_count());
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    for (ArrowIndex h : c.hom(c.cod(g), object)) maps[g].push_back(position[c.compose(h, g)]);
  }
  return SetFunctor(std::move(op), std::move(sets), std::move(maps));
}

SetFunctor corepresentable(const Category& c, ObjectIndex object) {
  if (object >= c.object_count()) {
    throw Error(ErrorKind::kUnknownObject, "corepresentable: object index");
  }
  std::vector<std::vector<std::string>> sets(c.object_count());
  std::vector<std::size_t> position(c.arrow_count(), 0);
  for (ObjectIndex d = 0; d < c.object_count(); ++d) {
    const auto& hom = c.hom(object, d);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      sets[d].push_back(c.arrow_name(hom[i]));
      position[hom[i]] = i;
    }
  }
  std::vector<std::vector<std::size_t>> maps(c.arrow_count());
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    for (ArrowIndex h : c.hom(object, c.dom(g))) maps[g].push_back(position[c.compose(g, h)]);
  }
  return SetFunctor(c, std::move(sets), std::move(maps));
}

NatTransformation yoneda_element(const SetFunctor& f, ObjectIndex d, std::size_t x) {
  const Category& c = f.base();
  SetFunctor rep = corepresentable(c, d);
  std::vector<std::vector<std::size_t>> comps(c.object_count());
  for (ObjectIndex e = 0; e < c.object_count(); ++e) {
    for (ArrowIndex h : c.hom(d, e)) comps[e].push_back(f.apply(h, x));
  }
  return NatTransformation(std::move(rep), f, std::move(comps));
}

// ------------------------------------------------------------- elements

std::optional<ObjectIndex> Elements::find(ObjectIndex c, std::size_t x) const {
  if (c >= lookup.size() || x >= lookup[c].size()) return std::nullopt;
  return lookup[c][x];
}

ObjectIndex Elements::at(ObjectIndex c, std::size_t x) const { return lookup[c][x]; }

namespace {

// Shared assembly for both variances. `covariant` selects whether an
// arrow is keyed by its source element (covariant) or its target element
// (presheaf).
Elements build_elements(const Category& c, const SetFunctor& f, bool covariant) {
  Elements out{Category(), Functor::identity(Category()), {}, {}, {}};
  out.lookup.resize(c.object_count());
  std::vector<std::string> object_names;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (std::size_t e = 0; e < f.size(x); ++e) {
      out.lookup[x].push_back(out.base_object.size());
      out.base_object.push_back(x);
      out.element.push_back(e);
      object_names.push_back(pair_name(c.object_name(x), f.element(x, e)));
    }
  }
  // arrow_at[a][e]: the arrow over a keyed by element e of its key object
  std::vector<std::vector<ArrowIndex>> arrow_at(c.arrow_count());
  CategoryTables t;
  std::size_t n_arr = 0;
  for (ArrowIndex a = 0; a < c.arrow_count(); ++a) {
    n_arr += f.size(covariant ? c.dom(a) : c.cod(a));
  }
  t.init(object_names.size(), n_arr);
  t.objects = object_names;
  std::vector<ArrowIndex> over(n_arr);
  std::vector<std::size_t> key(n_arr);
  ArrowIndex k = 0;
  for (ArrowIndex a = 0; a < c.arrow_count(); ++a) {
    const ObjectIndex key_object = covariant ? c.dom(a) : c.cod(a);
    for (std::size_t e = 0; e < f.size(key_object); ++e, ++k) {
      arrow_at[a].push_back(k);
      over[k] = a;
      key[k] = e;
      t.arrows[k] = "(" + c.arrow_name(a) + "," + object_names[out.lookup[key_object][e]] + ")";
      if (covariant) {
        t.dom[k] = out.lookup[c.dom(a)][e];
        t.cod[k] = out.lookup[c.cod(a)][f.apply(a, e)];
      } else {
        t.dom[k] = out.lookup[c.dom(a)][f.apply(a, e)];
        t.cod[k] = out.lookup[c.cod(a)][e];
      }
    }
  }
  for (ObjectIndex o = 0; o < object_names.size(); ++o) {
    t.identity[o] = arrow_at[c.identity(out.base_object[o])][out.element[o]];
  }
  for (ArrowIndex first = 0; first < n_arr; ++first) {
    for (ArrowIndex second = 0; second < n_arr; ++second) {
      if (t.cod[first] != t.dom[second]) continue;
      const ArrowIndex composite = c.compose(over[second], over[first]);
      // covariant arrows are keyed by their source, presheaf arrows by
      // their target
      const std::size_t e = covariant ? key[first] : key[second];
      t.set(second, first, arrow_at[composite][e]);
    }
  }
  out.category = Category::from_tables(std::move(t));
  out.projection = Functor(out.category, c, out.base_object, over);
  return out;
}

}  // namespace

Elements elements_presheaf(const SetFunctor& presheaf) {
  return build_elements(opposite(presheaf.base()), presheaf, false);
}

Elements elements_covariant(const SetFunctor& functor) {
  return build_elements(functor.base(), functor, true);
}

DiscreteOpfibration discrete_opfibration(const SetFunctor& g) {
  const Category& c = g.base();
  // coproduct injections mu_c: G(c) -> F0 and J_f: G(dom f) -> F1
  std::vector<std::size_t> mu(c.object_count() + 1, 0);
  for (ObjectIndex x = 0; x < c.object_count(); ++x) mu[x + 1] = mu[x] + g.size(x);
  std::vector<std::size_t> jf(c.arrow_count() + 1, 0);
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) jf[f + 1] = jf[f] + g.size(c.dom(f));

  CategoryTables t;
  t.init(mu.back(), jf.back());
  std::vector<ObjectIndex> p0(mu.back());
  std::vector<ArrowIndex> p1(jf.back());
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (std::size_t e = 0; e < g.size(x); ++e) {
      t.objects[mu[x] + e] = "<" + c.object_name(x) + "|" + g.element(x, e) + ">";
      t.identity[mu[x] + e] = jf[c.identity(x)] + e;
      p0[mu[x] + e] = x;
    }
  }
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    for (std::size_t e = 0; e < g.size(c.dom(f)); ++e) {
      const ArrowIndex a = jf[f] + e;
      t.arrows[a] = "<" + c.arrow_name(f) + "|" + g.element(c.dom(f), e) + ">";
      t.dom[a] = mu[c.dom(f)] + e;               // d0∘J_f = mu_dom(f)
      t.cod[a] = mu[c.cod(f)] + g.apply(f, e);   // d1∘J_f = mu_cod(f)∘G(f)
      p1[a] = f;
    }
  }
  // J_h(y)∘J_f(x) = J_{h∘f}(x) when y = G(f)(x)
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    for (std::size_t e = 0; e < g.size(c.dom(f)); ++e) {
      const std::size_t y = g.apply(f, e);
      for (ArrowIndex h : c.arrows_from(c.cod(f))) {
        t.set(jf[h] + y, jf[f] + e, jf[c.compose(h, f)] + e);
      }
    }
  }
  Category total = Category::from_tables(std::move(t));
  Functor projection(total, c, p0, p1);

  Elements elements = elements_covariant(g);
  std::vector<ObjectIndex> iso_obj(total.object_count());
  std::vector<ArrowIndex> iso_arr(total.arrow_count());
  for (ObjectIndex o = 0; o < total.object_count(); ++o) {
    const ObjectIndex x = p0[o];
    iso_obj[o] = elements.at(x, o - mu[x]);
  }
  for (ArrowIndex a = 0; a < total.arrow_count(); ++a) {
    const ArrowIndex f = p1[a];
    const std::size_t e = a - jf[f];
    iso_arr[a] = elements.category.arrow(
        "(" + c.arrow_name(f) + "," + pair_name(c.object_name(c.dom(f)), g.element(c.dom(f), e)) + ")");
  }
  Functor to_elements(total, elements.category, std::move(iso_obj), std::move(iso_arr));
  if (!to_elements.injective_on_objects() || !to_elements.injective_on_arrows() ||
      total.object_count() != elements.category.object_count() ||
      total.arrow_count() != elements.category.arrow_count() ||
      !(compose(elements.projection, to_elements) == projection)) {
    throw Error(ErrorKind::kSelfTestFailure,
                "opfibration and category of elements are not isomorphic over the base");
  }
  return DiscreteOpfibration{std::move(total), std::move(projection), std::move(to_elements),
                             std::move(elements)};
}

// ------------------------------------------------------ transformations

std::vector<NatTransformation> nat_transformations(const SetFunctor& source,
                                                   const SetFunctor& target,
                                                   std::uint64_t budget) {
  require_same_base(source, target, "nat_transformations");
  const Category& c = source.base();
  const std::size_t n = c.object_count();
  double raw = 1;
  for (ObjectIndex x = 0; x < n; ++x) {
    raw *= std::pow(static_cast<double>(target.size(x)), static_cast<double>(source.size(x)));
  }
  if (raw > static_cast<double>(budget)) {
    std::ostringstream msg;
    msg << "component space of " << raw << " candidates exceeds the budget of " << budget;
    throw Error(ErrorKind::kSearchBudgetExceeded, msg.str());
  }
  std::vector<NatTransformation> out;
  if (raw == 0) return out;

  // arrows whose naturality square can be checked once object x is set
  std::vector<std::vector<ArrowIndex>> checks(n);
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    checks[std::max(c.dom(f), c.cod(f))].push_back(f);
  }
  std::vector<std::vector<std::size_t>> comps(n);
  std::function<void(ObjectIndex)> search = [&](ObjectIndex x) {
    if (x == n) {
      out.emplace_back(source, target, comps);
      return;
    }
    std::vector<std::size_t> digits(source.size(x), 0);
    do {
      comps[x] = digits;
      bool ok = true;
      for (ArrowIndex f : checks[x]) {
        const auto& from = comps[c.dom(f)];
        const auto& to = comps[c.cod(f)];
        for (std::size_t i = 0; i < from.size() && ok; ++i) {
          ok = target.apply(f, from[i]) == to[source.apply(f, i)];
        }
        if (!ok) break;
      }
      if (ok) search(x + 1);
    } while (advance(digits, target.size(x)));
  };
  search(0);
  return out;
}

std::optional<NatTransformation> find_isomorphism(const SetFunctor& source,
                                                  const SetFunctor& target,
                                                  std::uint64_t budget) {
  require_same_base(source, target, "find_isomorphism");
  const Category& c = source.base();
  const std::size_t n = c.object_count();
  for (ObjectIndex x = 0; x < n; ++x) {
    if (source.size(x) != target.size(x)) return std::nullopt;
  }
  std::vector<std::vector<ArrowIndex>> checks(n);
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) checks[std::max(c.dom(f), c.cod(f))].push_back(f);

  // backtracking over per-object bijections, pruned by naturality squares
  std::vector<std::vector<std::size_t>> comps(n);
  std::uint64_t nodes = 0;
  std::function<bool(ObjectIndex)> search = [&](ObjectIndex x) {
    if (x == n) return true;
    std::vector<std::size_t> perm(source.size(x));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      if (++nodes > budget) {
        throw Error(ErrorKind::kSearchBudgetExceeded,
                    "isomorphism search exceeded " + std::to_string(budget) + " nodes");
      }
      comps[x] = perm;
      bool ok = true;
      for (ArrowIndex f : checks[x]) {
        const auto& from = comps[c.dom(f)];
        const auto& to = comps[c.cod(f)];
        for (std::size_t i = 0; i < from.size() && ok; ++i) {
          ok = target.apply(f, from[i]) == to[source.apply(f, i)];
        }
        if (!ok) break;
      }
      if (ok && search(x + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  if (!search(0)) return std::nullopt;
  return NatTransformation(source, target, comps);
}

void enumerate_set_functors(const Category& base, std::size_t max_size,
                            const std::function<bool(const SetFunctor&)>& visit) {
  const std::size_t n = base.object_count();
  CompositionSchedule schedule(base);
  std::vector<std::size_t> sizes(n, 0);
  bool stop = false;
  do {
    std::vector<std::vector<std::size_t>> maps(base.arrow_count());
    for (ObjectIndex x = 0; x < n; ++x) {
      auto& id = maps[base.identity(x)];
      id.resize(sizes[x]);
      for (std::size_t i = 0; i < sizes[x]; ++i) id[i] = i;
    }
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
      if (stop) return;
      if (k == schedule.order.size()) {
        std::vector<std::vector<std::string>> sets(n);
        for (ObjectIndex x = 0; x < n; ++x) {
          for (std::size_t i = 0; i < sizes[x]; ++i) sets[x].push_back(std::to_string(i));
        }
        if (!visit(SetFunctor(base, std::move(sets), maps))) stop = true;
        return;
      }
      const ArrowIndex f = schedule.order[k];
      const std::size_t from = sizes[base.dom(f)];
      const std::size_t to = sizes[base.cod(f)];
      if (from > 0 && to == 0) return;
      std::vector<std::size_t> digits(from, 0);
      do {
        maps[f] = digits;
        bool ok = true;
        for (const auto& con : schedule.ready[k + 1]) {
          const auto& mf = maps[con.f];
          for (std::size_t i = 0; i < mf.size() && ok; ++i) {
            ok = maps[con.g][mf[i]] == maps[con.gf][i];
          }
          if (!ok) break;
        }
        if (ok) assign(k + 1);
        if (stop) return;
      } while (advance(digits, to));
    };
    assign(0);
  } while (!stop && advance(sizes, max_size + 1));
}

}  // namespace fincat
