#include "fincat/karoubi.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fincat {

std::vector<Idempotent> idempotents(const Category& c) {
  std::vector<Idempotent> out;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    for (ArrowIndex e : c.hom(x, x)) {
      if (c.compose(e, e) == e) out.push_back({x, e, c.is_identity(e)});
    }
  }
  return out;
}

KaroubiEnvelope karoubi_envelope(const Category& c) {
  const std::vector<Idempotent> objs = idempotents(c);
  auto object_name = [&](const Idempotent& i) {
    return "(" + c.object_name(i.object) + "," + c.arrow_name(i.arrow) + ")";
  };
  struct Entry {
    std::size_t from;
    std::size_t to;
    ArrowIndex f;
  };
  std::vector<Entry> arrows;
  for (std::size_t a = 0; a < objs.size(); ++a) {
    for (std::size_t b = 0; b < objs.size(); ++b) {
      for (ArrowIndex f : c.hom(objs[a].object, objs[b].object)) {
        if (c.compose(objs[b].arrow, f) == f && c.compose(f, objs[a].arrow) == f) {
          arrows.push_back({a, b, f});
        }
      }
    }
  }
  CategoryTables t;
  t.init(objs.size(), arrows.size());
  for (std::size_t a = 0; a < objs.size(); ++a) t.objects[a] = object_name(objs[a]);
  // (from, to, f) -> arrow index
  std::map<std::tuple<std::size_t, std::size_t, ArrowIndex>, ArrowIndex> lookup;
  for (ArrowIndex k = 0; k < arrows.size(); ++k) {
    const Entry& e = arrows[k];
    t.arrows[k] = c.arrow_name(e.f) + ":" + t.objects[e.from] + "->" + t.objects[e.to];
    t.dom[k] = e.from;
    t.cod[k] = e.to;
    lookup[{e.from, e.to, e.f}] = k;
  }
  for (std::size_t a = 0; a < objs.size(); ++a) t.identity[a] = lookup.at({a, a, objs[a].arrow});
  for (ArrowIndex g = 0; g < arrows.size(); ++g) {
    for (ArrowIndex f = 0; f < arrows.size(); ++f) {
      if (arrows[f].to != arrows[g].from) continue;
      t.set(g, f, lookup.at({arrows[f].from, arrows[g].to, c.compose(arrows[g].f, arrows[f].f)}));
    }
  }
  Category env = Category::from_tables(std::move(t));

  std::vector<ObjectIndex> on_objects(c.object_count());
  std::vector<std::size_t> position(c.object_count());
  for (std::size_t a = 0; a < objs.size(); ++a) {
    if (objs[a].is_identity) position[objs[a].object] = a;
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) on_objects[x] = position[x];
  std::vector<ArrowIndex> on_arrows(c.arrow_count());
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    on_arrows[f] = lookup.at({position[c.dom(f)], position[c.cod(f)], f});
  }
  Functor embedding(c, env, std::move(on_objects), std::move(on_arrows));
  return {std::move(env), std::move(embedding), objs};
}

std::optional<Splitting> split(const Category& c, ArrowIndex e) {
  const ObjectIndex x = c.dom(e);
  for (ObjectIndex d = 0; d < c.object_count(); ++d) {
    for (ArrowIndex s : c.hom(d, x)) {
      for (ArrowIndex r : c.hom(x, d)) {
        if (c.compose(s, r) == e && c.compose(r, s) == c.identity(d)) return Splitting{d, s, r};
      }
    }
  }
  return std::nullopt;
}

bool is_cauchy_complete(const Category& c) {
  for (const Idempotent& i : idempotents(c)) {
    if (!i.is_identity && !split(c, i.arrow)) return false;
  }
  return true;
}

std::optional<ArrowIndex> inverse(const Category& c, ArrowIndex f) {
  for (ArrowIndex g : c.hom(c.cod(f), c.dom(f))) {
    if (c.compose(g, f) == c.identity(c.dom(f)) && c.compose(f, g) == c.identity(c.cod(f))) return g;
  }
  return std::nullopt;
}

bool is_natural_isomorphism(const Functor& from, const Functor& to, const std::vector<ArrowIndex>& components) {
  const Category& src = from.source();
  const Category& tgt = from.target();
  if (components.size() != src.object_count()) return false;
  for (ObjectIndex x = 0; x < src.object_count(); ++x) {
    const ArrowIndex a = components[x];
    if (a >= tgt.arrow_count() || tgt.dom(a) != from.on_object(x) || tgt.cod(a) != to.on_object(x)) {
      return false;
    }
    if (!inverse(tgt, a)) return false;
  }
  for (ArrowIndex f = 0; f < src.arrow_count(); ++f) {
    if (tgt.compose(to.on_arrow(f), components[src.dom(f)]) !=
        tgt.compose(components[src.cod(f)], from.on_arrow(f))) {
      return false;
    }
  }
  return true;
}

namespace {

// The unique u: a -> b with f(u) == t, if any.
std::optional<ArrowIndex> lift(const Functor& f, ObjectIndex a, ObjectIndex b, ArrowIndex t) {
  for (ArrowIndex u : f.source().hom(a, b)) {
    if (f.on_arrow(u) == t) return u;
  }
  return std::nullopt;
}

struct Witness {
  ObjectIndex object;
  ArrowIndex iso;  // f(object) -> d
};

// For each d, the first c with an isomorphism f(c) -> d.
std::optional<std::vector<Witness>> essential_images(const Functor& f) {
  const Category& d = f.target();
  std::vector<Witness> out;
  for (ObjectIndex y = 0; y < d.object_count(); ++y) {
    std::optional<Witness> w;
    for (ObjectIndex x = 0; x < f.source().object_count() && !w; ++x) {
      for (ArrowIndex a : d.hom(f.on_object(x), y)) {
        if (inverse(d, a)) {
          w = Witness{x, a};
          break;
        }
      }
    }
    if (!w) return std::nullopt;
    out.push_back(*w);
  }
  return out;
}

Equivalence build_equivalence(const Functor& forward, const std::vector<Witness>& images) {
  const Category& c = forward.source();
  const Category& d = forward.target();
  auto undefined = [] {
    return Error(ErrorKind::kSelfTestFailure, "quasi-inverse is not defined on some arrow");
  };
  std::vector<ObjectIndex> objects;
  for (const Witness& w : images) objects.push_back(w.object);
  std::vector<ArrowIndex> arrows(d.arrow_count());
  for (ArrowIndex g = 0; g < d.arrow_count(); ++g) {
    const Witness& a = images[d.dom(g)];
    const Witness& b = images[d.cod(g)];
    const ArrowIndex t = d.compose(*inverse(d, b.iso), d.compose(g, a.iso));
    const auto u = lift(forward, a.object, b.object, t);
    if (!u) throw undefined();
    arrows[g] = *u;
  }
  Functor backward(d, c, std::move(objects), std::move(arrows));
  std::vector<ArrowIndex> counit;
  for (const Witness& w : images) counit.push_back(w.iso);
  std::vector<ArrowIndex> unit;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    const Witness& w = images[forward.on_object(x)];
    const auto u = lift(forward, x, w.object, *inverse(d, w.iso));
    if (!u) throw undefined();
    unit.push_back(*u);
  }
  Equivalence e{forward, backward, std::move(unit), std::move(counit)};
  if (!is_natural_isomorphism(Functor::identity(c), compose(e.backward, e.forward), e.unit) ||
      !is_natural_isomorphism(compose(e.forward, e.backward), Functor::identity(d), e.counit)) {
    throw Error(ErrorKind::kSelfTestFailure, "constructed unit or counit is not a natural isomorphism");
  }
  return e;
}

}  // namespace

EquivalenceResult equivalent_categories(const Category& c, const Category& d, std::uint64_t budget) {
  EquivalenceResult result;
  FunctorSearch search(c, d, budget);
  // a fully faithful functor preserves the size of every hom-set
  search.set_object_filter([&](ObjectIndex x, const std::vector<ObjectIndex>& obj) {
    for (ObjectIndex y = 0; y <= x; ++y) {
      if (c.hom(x, y).size() != d.hom(obj[x], obj[y]).size()) return false;
      if (c.hom(y, x).size() != d.hom(obj[y], obj[x]).size()) return false;
    }
    return true;
  });
  search.run([&](const Functor& f) {
    ++result.functors_examined;
    if (!f.full() || !f.faithful()) return true;
    const auto images = essential_images(f);
    if (!images) return true;
    result.witness = build_equivalence(f, *images);
    result.equivalent = true;
    return false;
  });
  return result;
}

}  // namespace fincat
