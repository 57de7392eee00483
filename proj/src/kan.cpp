#include "fincat/kan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "fincat/flatness.hpp"

namespace fincat {

namespace {

std::vector<std::string> class_names(const QuotientSet& q) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < q.size(); ++k) names.push_back(q.class_name(k));
  return names;
}

// Induces a map of quotients from a map of carriers and checks it is
// constant on classes.
std::vector<std::size_t> induced_map(const QuotientSet& from, const QuotientSet& to,
                                     const std::function<std::size_t(Member)>& target_part,
                                     const std::string& what) {
  std::vector<std::size_t> out(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    const Member rep = from.representative(k);
    out[k] = to.class_of(target_part(rep), rep.element);
    for (const Member& m : from.members(k)) {
      if (to.class_of(target_part(m), m.element) != out[k]) {
        throw Error(ErrorKind::kSelfTestFailure, what + " is not well defined on classes");
      }
    }
  }
  return out;
}

}  // namespace

LeftKanExtension lan(const Functor& f, const SetFunctor& functor) {
  if (!identical(functor.base(), f.source())) {
    throw Error(ErrorKind::kBaseMismatch, "lan: the functor must live on the source of f");
  }
  const Category& c = f.target();
  const Category term = terminal_category();
  LeftKanExtension out{SetFunctor::constant(Category(), {}), {}, {}};
  std::vector<std::vector<std::string>> sets;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    out.index.push_back(comma_category(f, constant_functor(term, c, x)));
    out.values.push_back(colimit(functor.restrict(out.index.back().left_projection)));
    sets.push_back(class_names(out.values.back()));
  }
  std::vector<std::vector<std::size_t>> maps(c.arrow_count());
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    const CommaCategory& from = out.index[c.dom(g)];
    const CommaCategory& to = out.index[c.cod(g)];
    maps[g] = induced_map(
        out.values[c.dom(g)], out.values[c.cod(g)],
        [&](Member m) {
          const CommaObject& o = from.objects[m.part];
          return *to.find(o.left, o.right, c.compose(g, o.arrow));
        },
        "lan action of '" + c.arrow_name(g) + "'");
  }
  out.functor = SetFunctor(c, std::move(sets), std::move(maps));
  return out;
}

RightKanExtension ran(const Functor& f, const SetFunctor& functor, std::uint64_t budget) {
  if (!identical(functor.base(), f.source())) {
    throw Error(ErrorKind::kBaseMismatch, "ran: the functor must live on the source of f");
  }
  const Category& c = f.target();
  const Category term = terminal_category();
  RightKanExtension out{SetFunctor::constant(Category(), {}), {}, {}};
  std::vector<std::vector<std::string>> sets;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    out.index.push_back(comma_category(constant_functor(term, c, x), f));
    const SetFunctor diagram = functor.restrict(out.index.back().right_projection);
    out.values.push_back(limit(diagram, budget));
    sets.emplace_back();
    lookup.emplace_back();
    for (std::size_t k = 0; k < out.values.back().size(); ++k) {
      sets.back().push_back(out.values.back().family_name(diagram, k));
      lookup.back()[out.values.back().families[k]] = k;
    }
  }
  std::vector<std::vector<std::size_t>> maps(c.arrow_count());
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    const CommaCategory& from = out.index[c.dom(g)];
    const CommaCategory& to = out.index[c.cod(g)];
    for (const auto& family : out.values[c.dom(g)].families) {
      std::vector<std::size_t> moved(to.objects.size());
      for (ObjectIndex k = 0; k < to.objects.size(); ++k) {
        const CommaObject& o = to.objects[k];
        moved[k] = family[*from.find(o.left, o.right, c.compose(o.arrow, g))];
      }
      auto it = lookup[c.cod(g)].find(moved);
      if (it == lookup[c.cod(g)].end()) {
        throw Error(ErrorKind::kSelfTestFailure,
                    "ran action of '" + c.arrow_name(g) + "' leaves the limit");
      }
      maps[g].push_back(it->second);
    }
  }
  out.functor = SetFunctor(c, std::move(sets), std::move(maps));
  return out;
}

// ---------------------------------------------------------- flat extension

void require_embedding(const Functor& j) {
  if (!j.injective_on_objects() || !j.injective_on_arrows() || !j.full()) {
    throw Error(ErrorKind::kNotAnEmbedding,
                "functor must be injective on objects and arrows and full");
  }
}

namespace {

void require_presheaf_on_source(const Functor& j, const SetFunctor& presheaf) {
  if (!identical(presheaf.base(), opposite(j.source()))) {
    throw Error(ErrorKind::kBaseMismatch, "the presheaf must live on the source of j");
  }
}

std::vector<IndexPair> index_pairs(const Functor& j, ObjectIndex c) {
  std::vector<IndexPair> out;
  for (ObjectIndex d = 0; d < j.source().object_count(); ++d) {
    for (ArrowIndex h : j.target().hom(c, j.on_object(d))) out.push_back({d, h});
  }
  return out;
}

std::string pair_name(const Functor& j, const IndexPair& p) {
  return "(" + j.source().object_name(p.d) + "," + j.target().arrow_name(p.h) + ")";
}

std::size_t position_of(const std::vector<IndexPair>& pairs, ObjectIndex d, ArrowIndex h) {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].d == d && pairs[k].h == h) return k;
  }
  throw Error(ErrorKind::kSelfTestFailure, "index pair missing from A_c");
}

}  // namespace

FlatExtension flat_extend(const Functor& j, const SetFunctor& presheaf) {
  require_embedding(j);
  require_presheaf_on_source(j, presheaf);
  const Category& d_cat = j.source();
  const Category& c_cat = j.target();
  FlatExtension out{SetFunctor::constant(Category(), {}), {}, {}, {}, {}};
  std::vector<std::vector<std::string>> sets;

  for (ObjectIndex c = 0; c < c_cat.object_count(); ++c) {
    const std::vector<IndexPair> objs = index_pairs(j, c);
    struct Record {
      std::size_t src, dst;
      ArrowIndex k;
    };
    std::vector<Record> arrows;
    std::map<std::tuple<std::size_t, std::size_t, ArrowIndex>, ArrowIndex> lookup;
    for (std::size_t s = 0; s < objs.size(); ++s) {
      for (std::size_t t = 0; t < objs.size(); ++t) {
        for (ArrowIndex k : d_cat.hom(objs[t].d, objs[s].d)) {
          if (c_cat.compose(j.on_arrow(k), objs[t].h) != objs[s].h) continue;
          lookup[{s, t, k}] = arrows.size();
          arrows.push_back({s, t, k});
        }
      }
    }
    CategoryTables tables;
    tables.init(objs.size(), arrows.size());
    for (std::size_t s = 0; s < objs.size(); ++s) {
      tables.objects[s] = pair_name(j, objs[s]);
      tables.identity[s] = lookup.at({s, s, d_cat.identity(objs[s].d)});
    }
    for (ArrowIndex a = 0; a < arrows.size(); ++a) {
      tables.arrows[a] = d_cat.arrow_name(arrows[a].k) + ":" + tables.objects[arrows[a].src] +
                         "->" + tables.objects[arrows[a].dst];
      tables.dom[a] = arrows[a].src;
      tables.cod[a] = arrows[a].dst;
    }
    for (ArrowIndex first = 0; first < arrows.size(); ++first) {
      for (ArrowIndex second = 0; second < arrows.size(); ++second) {
        if (arrows[first].dst != arrows[second].src) continue;
        const ArrowIndex k = d_cat.compose(arrows[first].k, arrows[second].k);
        tables.set(second, first, lookup.at({arrows[first].src, arrows[second].dst, k}));
      }
    }
    Category index = Category::from_tables(std::move(tables));

    // F∘π_c: (d, h) |-> F(d), k |-> F(k)
    std::vector<std::vector<std::string>> dsets(objs.size());
    std::vector<std::vector<std::size_t>> dmaps(arrows.size());
    for (std::size_t s = 0; s < objs.size(); ++s) dsets[s] = presheaf.set(objs[s].d);
    for (ArrowIndex a = 0; a < arrows.size(); ++a) dmaps[a] = presheaf.map(arrows[a].k);
    out.values.push_back(colimit(SetFunctor(index, std::move(dsets), std::move(dmaps))));
    sets.push_back(class_names(out.values.back()));
    out.index.push_back(std::move(index));
    out.index_objects.push_back(objs);
  }

  // g: c' -> c in C acts F̃(c) -> F̃(c') by ((d, h), x) |-> ((d, h∘g), x)
  std::vector<std::vector<std::size_t>> maps(c_cat.arrow_count());
  for (ArrowIndex g = 0; g < c_cat.arrow_count(); ++g) {
    const ObjectIndex c = c_cat.cod(g);
    const ObjectIndex c2 = c_cat.dom(g);
    maps[g] = induced_map(
        out.values[c], out.values[c2],
        [&](Member m) {
          const IndexPair& p = out.index_objects[c][m.part];
          return position_of(out.index_objects[c2], p.d, c_cat.compose(p.h, g));
        },
        "extension action of '" + c_cat.arrow_name(g) + "'");
  }
  out.extension = SetFunctor(opposite(c_cat), std::move(sets), std::move(maps));

  out.chi.resize(d_cat.object_count());
  for (ObjectIndex d = 0; d < d_cat.object_count(); ++d) {
    const ObjectIndex jd = j.on_object(d);
    const std::size_t part = position_of(out.index_objects[jd], d, c_cat.identity(jd));
    for (std::size_t x = 0; x < presheaf.size(d); ++x) {
      out.chi[d].push_back(out.values[jd].class_of(part, x));
    }
  }
  return out;
}

QuotientSet flat_extend_quotient(const Functor& j, const SetFunctor& presheaf, ObjectIndex c) {
  require_embedding(j);
  require_presheaf_on_source(j, presheaf);
  const FlatnessReport flat = is_flat(presheaf);
  if (!flat.flat) {
    throw Error(ErrorKind::kFlatnessRequired,
                "filtering condition " + std::to_string(flat.condition) + " fails");
  }
  const Category& d_cat = j.source();
  const Category& c_cat = j.target();
  const std::vector<IndexPair> objs = index_pairs(j, c);
  std::vector<std::string> parts;
  std::vector<std::vector<std::string>> elements;
  std::vector<Member> flat_members;
  for (std::size_t s = 0; s < objs.size(); ++s) {
    parts.push_back(pair_name(j, objs[s]));
    elements.push_back(presheaf.set(objs[s].d));
    for (std::size_t x = 0; x < presheaf.size(objs[s].d); ++x) flat_members.push_back({s, x});
  }
  auto spans = [&](Member m1, Member m2) {
    const IndexPair& p = objs[m1.part];
    const IndexPair& q = objs[m2.part];
    for (ObjectIndex b = 0; b < d_cat.object_count(); ++b) {
      for (ArrowIndex f : d_cat.hom(p.d, b)) {
        for (ArrowIndex g : d_cat.hom(q.d, b)) {
          if (c_cat.compose(j.on_arrow(f), p.h) != c_cat.compose(j.on_arrow(g), q.h)) continue;
          for (std::size_t y = 0; y < presheaf.size(b); ++y) {
            if (presheaf.apply(f, y) == m1.element && presheaf.apply(g, y) == m2.element) {
              return true;
            }
          }
        }
      }
    }
    return false;
  };
  PairRelation relation(flat_members.size());
  for (std::size_t a = 0; a < flat_members.size(); ++a) {
    for (std::size_t b = a; b < flat_members.size(); ++b) {
      if (spans(flat_members[a], flat_members[b])) relation.relate(a, b);
    }
  }
  return partition_by(std::move(parts), std::move(elements), relation);
}

NatTransformation extension_of_representable(const Functor& j, ObjectIndex d) {
  const Category& d_cat = j.source();
  const Category& c_cat = j.target();
  const SetFunctor rep = yoneda(d_cat, d);
  const FlatExtension ext = flat_extend(j, rep);
  const ObjectIndex jd = j.on_object(d);
  const SetFunctor target = yoneda(c_cat, jd);
  std::vector<std::vector<std::size_t>> comps(c_cat.object_count());
  for (ObjectIndex c = 0; c < c_cat.object_count(); ++c) {
    const auto& hom = c_cat.hom(c, jd);
    const QuotientSet& q = ext.values[c];
    for (std::size_t k = 0; k < q.size(); ++k) {
      std::size_t image = hom.size();
      for (const Member& m : q.members(k)) {
        const IndexPair& p = ext.index_objects[c][m.part];
        const ArrowIndex arrow = d_cat.hom(p.d, d)[m.element];
        const ArrowIndex composite = c_cat.compose(j.on_arrow(arrow), p.h);
        const std::size_t pos = static_cast<std::size_t>(
            std::find(hom.begin(), hom.end(), composite) - hom.begin());
        if (image != hom.size() && image != pos) {
          throw Error(ErrorKind::kSelfTestFailure,
                      "comparison with the representable is not well defined");
        }
        image = pos;
      }
      comps[c].push_back(image);
    }
  }
  NatTransformation iso(ext.extension, target, std::move(comps));
  if (!iso.pointwise_bijective()) {
    throw Error(ErrorKind::kSelfTestFailure, "extension of a representable is not representable");
  }
  return iso;
}

}  // namespace fincat
