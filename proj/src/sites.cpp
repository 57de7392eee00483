#include "fincat/sites.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fincat {

bool Sieve::contains(ArrowIndex f) const {
  return std::binary_search(arrows.begin(), arrows.end(), f);
}

std::string sieve_name(const Category& c, const Sieve& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.arrows.size(); ++k) {
    if (k > 0) out += ",";
    out += c.arrow_name(s.arrows[k]);
  }
  return out + "}";
}

Sieve sieve_generate(const Category& c, ObjectIndex object, const std::vector<ArrowIndex>& generators) {
  std::vector<bool> in(c.arrow_count(), false);
  std::vector<ArrowIndex> queue;
  for (ArrowIndex f : generators) {
    if (c.cod(f) != object) {
      throw Error(ErrorKind::kCodMismatch, "generator '" + c.arrow_name(f) + "' does not end at '" +
                                               c.object_name(object) + "'");
    }
    if (!in[f]) {
      in[f] = true;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    const ArrowIndex f = queue.back();
    queue.pop_back();
    for (ArrowIndex g : c.arrows_into(c.dom(f))) {
      const ArrowIndex fg = c.compose(f, g);
      if (!in[fg]) {
        in[fg] = true;
        queue.push_back(fg);
      }
    }
  }
  Sieve s{object, {}};
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    if (in[f]) s.arrows.push_back(f);
  }
  return s;
}

Sieve maximal_sieve(const Category& c, ObjectIndex object) {
  Sieve s{object, c.arrows_into(object)};
  std::sort(s.arrows.begin(), s.arrows.end());
  return s;
}

Sieve pullback_sieve(const Category& c, const Sieve& s, ArrowIndex f) {
  if (c.cod(f) != s.codomain) {
    throw Error(ErrorKind::kCodMismatch, "arrow '" + c.arrow_name(f) + "' does not end at '" +
                                             c.object_name(s.codomain) + "'");
  }
  Sieve out{c.dom(f), {}};
  for (ArrowIndex g : c.arrows_into(c.dom(f))) {
    if (s.contains(c.compose(f, g))) out.arrows.push_back(g);
  }
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

std::vector<Sieve> all_sieves(const Category& c, ObjectIndex object) {
  const Sieve max = maximal_sieve(c, object);
  const std::size_t k = max.arrows.size();
  if (k > 20) {
    throw Error(ErrorKind::kTooLarge, "more than 20 arrows into '" + c.object_name(object) + "'");
  }
  std::vector<Sieve> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Sieve s{object, {}};
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) s.arrows.push_back(max.arrows[i]);
    }
    bool closed = true;
    for (ArrowIndex f : s.arrows) {
      for (ArrowIndex g : c.arrows_into(c.dom(f))) closed = closed && s.contains(c.compose(f, g));
    }
    if (closed) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Topology trivial_topology(const Category& c) {
  Topology j{c, std::vector<std::set<Sieve>>(c.object_count())};
  for (ObjectIndex x = 0; x < c.object_count(); ++x) j.covers[x].insert(maximal_sieve(c, x));
  return j;
}

TopologyReport is_topology(const Topology& j) {
  const Category& c = j.base;
  TopologyReport r;
  auto fail = [&](const char* axiom, ObjectIndex x, std::string detail) {
    r.axiom = axiom;
    r.object = c.object_name(x);
    r.detail = std::move(detail);
    return r;
  };
  if (j.covers.size() != c.object_count()) {
    r.axiom = "sieve";
    r.detail = "covers do not match the objects of the base";
    return r;
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (const Sieve& s : j.covers[x]) {
      if (s.codomain != x || sieve_generate(c, x, s.arrows) != s) {
        return fail("sieve", x, sieve_name(c, s) + " is not a sieve on this object");
      }
    }
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (!j.covers[x].count(maximal_sieve(c, x))) return fail("maximality", x, "maximal sieve missing");
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (const Sieve& s : j.covers[x]) {
      for (ArrowIndex f : c.arrows_into(x)) {
        const Sieve p = pullback_sieve(c, s, f);
        if (!j.covers[c.dom(f)].count(p)) {
          return fail("stability", x,
                      "pullback of " + sieve_name(c, s) + " along '" + c.arrow_name(f) + "' is " +
                          sieve_name(c, p) + ", not covering");
        }
      }
    }
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (const Sieve& r_sieve : all_sieves(c, x)) {
      if (j.covers[x].count(r_sieve)) continue;
      for (const Sieve& s : j.covers[x]) {
        bool local = true;
        for (ArrowIndex f : s.arrows) {
          local = local && j.covers[c.dom(f)].count(pullback_sieve(c, r_sieve, f)) > 0;
        }
        if (local) {
          return fail("transitivity", x,
                      sieve_name(c, r_sieve) + " is locally covering on " + sieve_name(c, s) +
                          " but not covering");
        }
      }
    }
  }
  r.ok = true;
  return r;
}

Topology generate_topology(const Category& c, const std::vector<std::vector<Sieve>>& coverage) {
  Topology j = trivial_topology(c);
  for (ObjectIndex x = 0; x < coverage.size() && x < c.object_count(); ++x) {
    for (const Sieve& s : coverage[x]) j.covers[x].insert(sieve_generate(c, x, s.arrows));
  }
  std::vector<std::vector<Sieve>> sieves(c.object_count());
  for (ObjectIndex x = 0; x < c.object_count(); ++x) sieves[x] = all_sieves(c, x);
  for (bool changed = true; changed;) {
    changed = false;
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      const std::vector<Sieve> current(j.covers[x].begin(), j.covers[x].end());
      for (const Sieve& s : current) {
        for (ArrowIndex f : c.arrows_into(x)) {
          changed = j.covers[c.dom(f)].insert(pullback_sieve(c, s, f)).second || changed;
        }
      }
    }
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      for (const Sieve& r : sieves[x]) {
        if (j.covers[x].count(r)) continue;
        const std::vector<Sieve> current(j.covers[x].begin(), j.covers[x].end());
        for (const Sieve& s : current) {
          bool local = true;
          for (ArrowIndex f : s.arrows) {
            local = local && j.covers[c.dom(f)].count(pullback_sieve(c, r, f)) > 0;
          }
          if (local) {
            j.covers[x].insert(r);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return j;
}

namespace {

void require_topology(const Topology& j) {
  const TopologyReport r = is_topology(j);
  if (!r.ok) {
    throw Error(ErrorKind::kNotATopology, r.axiom + " fails at '" + r.object + "': " + r.detail);
  }
}

}  // namespace

std::vector<ObjectIndex> irreducibles(const Topology& j) {
  require_topology(j);
  std::vector<ObjectIndex> out;
  for (ObjectIndex x = 0; x < j.base.object_count(); ++x) {
    if (j.covers[x].size() == 1 && *j.covers[x].begin() == maximal_sieve(j.base, x)) out.push_back(x);
  }
  return out;
}

RigidityReport is_rigid(const Topology& j) {
  const Category& c = j.base;
  RigidityReport r;
  r.irreducibles = irreducibles(j);
  std::vector<bool> irreducible(c.object_count(), false);
  for (ObjectIndex x : r.irreducibles) irreducible[x] = true;
  r.rigid = true;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    std::vector<ArrowIndex> generators;
    for (ArrowIndex f : c.arrows_into(x)) {
      if (irreducible[c.dom(f)]) generators.push_back(f);
    }
    r.generated.push_back(sieve_generate(c, x, generators));
    r.covering.push_back(j.covers[x].count(r.generated.back()) > 0);
    r.rigid = r.rigid && r.covering.back();
  }
  return r;
}

std::vector<std::vector<std::size_t>> matching_families(const Category& c, const SetFunctor& presheaf,
                                                        const Sieve& s, std::uint64_t budget) {
  const std::size_t n = s.arrows.size();
  std::map<ArrowIndex, std::size_t> position;
  for (std::size_t k = 0; k < n; ++k) position[s.arrows[k]] = k;
  // constraints (k, g, m): F(g)(x_k) = x_m with s.arrows[k]∘g = s.arrows[m],
  // checked once both k and m are assigned
  struct Constraint {
    std::size_t k;
    ArrowIndex g;
    std::size_t m;
  };
  std::vector<std::vector<Constraint>> ready(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ArrowIndex f = s.arrows[k];
    for (ArrowIndex g : c.arrows_into(c.dom(f))) {
      const std::size_t m = position.at(c.compose(f, g));
      ready[std::max(k, m)].push_back({k, g, m});
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> family(n);
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (k == n) {
      out.push_back(family);
      return;
    }
    for (std::size_t x = 0; x < presheaf.size(c.dom(s.arrows[k])); ++x) {
      if (++nodes > budget) {
        throw Error(ErrorKind::kSearchBudgetExceeded, "matching family search exceeded the budget");
      }
      family[k] = x;
      bool ok = true;
      for (const Constraint& con : ready[k]) {
        if (presheaf.apply(con.g, family[con.k]) != family[con.m]) {
          ok = false;
          break;
        }
      }
      if (ok) search(k + 1);
    }
  };
  search(0);
  return out;
}

SheafReport is_sheaf(const SetFunctor& presheaf, const Topology& j, std::uint64_t budget) {
  require_topology(j);
  const Category& c = j.base;
  if (!identical(presheaf.base(), opposite(c))) {
    throw Error(ErrorKind::kBaseMismatch, "is_sheaf needs a presheaf on the base of the topology");
  }
  SheafReport r;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (const Sieve& s : j.covers[x]) {
      const auto families = matching_families(c, presheaf, s, budget);
      std::map<std::vector<std::size_t>, std::size_t> hits;
      for (std::size_t e = 0; e < presheaf.size(x); ++e) {
        std::vector<std::size_t> restricted;
        for (ArrowIndex f : s.arrows) restricted.push_back(presheaf.apply(f, e));
        ++hits[restricted];
      }
      const bool injective = hits.size() == presheaf.size(x);
      if (!injective || hits.size() != families.size()) {
        r.object = c.object_name(x);
        r.sieve = s;
        r.sections = presheaf.size(x);
        r.families = families.size();
        r.injective = injective;
        return r;
      }
    }
  }
  r.sheaf = true;
  return r;
}

Subcategory irreducible_subcategory(const Topology& j) {
  return full_subcategory(j.base, irreducibles(j));
}

DenseRestrictionReport dense_restriction_equivalence(const Topology& j, const SetFunctor& sheaf,
                                                     const std::vector<SetFunctor>& others,
                                                     std::uint64_t budget) {
  const RigidityReport rigid = is_rigid(j);
  if (!rigid.rigid) throw Error(ErrorKind::kNotRigid, "some object is not covered by irreducibles");
  const SheafReport s = is_sheaf(sheaf, j, budget);
  if (!s.sheaf) {
    throw Error(ErrorKind::kNotASheaf, "sheaf condition fails at '" + s.object + "' for " +
                                           sieve_name(j.base, *s.sieve));
  }
  const Category& c = j.base;
  Subcategory sub = full_subcategory(c, rigid.irreducibles);
  const Functor incl_op = sub.inclusion.opposite();
  SetFunctor restricted = sheaf.restrict(incl_op);
  const RightKanExtension ext = ran(incl_op, restricted, budget);

  // a family over (c ↓ incl^op) is indexed by arrows h: d -> c of C
  std::vector<std::vector<std::size_t>> comps(c.object_count());
  bool bijective = true;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    const CommaCategory& index = ext.index[x];
    std::map<std::vector<std::size_t>, std::size_t> lookup;
    for (std::size_t k = 0; k < ext.values[x].size(); ++k) lookup[ext.values[x].families[k]] = k;
    std::vector<bool> hit(ext.values[x].size(), false);
    for (std::size_t e = 0; e < sheaf.size(x); ++e) {
      std::vector<std::size_t> family;
      for (const CommaObject& o : index.objects) family.push_back(sheaf.apply(o.arrow, e));
      auto it = lookup.find(family);
      if (it == lookup.end()) {
        throw Error(ErrorKind::kSelfTestFailure, "restricted family is not compatible");
      }
      comps[x].push_back(it->second);
      bijective = bijective && !hit[it->second];
      hit[it->second] = true;
    }
    bijective = bijective && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  DenseRestrictionReport report{rigid.irreducibles, sub, restricted, ext.functor, std::nullopt,
                                bijective, {}};
  report.comparison.emplace(sheaf, ext.functor, std::move(comps));
  for (const SetFunctor& g : others) {
    report.extensions_are_sheaves.push_back(is_sheaf(ran(incl_op, g, budget).functor, j, budget).sheaf);
  }
  return report;
}

}  // namespace fincat
