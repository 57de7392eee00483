#include "fincat/colimit.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace fincat {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSet::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

// ------------------------------------------------------------ QuotientSet

QuotientSet::QuotientSet(std::vector<std::string> parts,
                         std::vector<std::vector<std::string>> elements,
                         const std::vector<std::vector<std::size_t>>& label)
    : parts_(std::move(parts)), elements_(std::move(elements)) {
  std::map<std::size_t, std::size_t> renumber;
  injection_.resize(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    injection_[i].resize(elements_[i].size());
    for (std::size_t x = 0; x < elements_[i].size(); ++x) {
      auto [it, fresh] = renumber.emplace(label[i][x], classes_.size());
      if (fresh) classes_.emplace_back();
      injection_[i][x] = it->second;
      classes_[it->second].push_back({i, x});
    }
  }
}

std::size_t QuotientSet::carrier_size() const {
  std::size_t n = 0;
  for (const auto& e : elements_) n += e.size();
  return n;
}

std::string QuotientSet::class_name(std::size_t k) const {
  const Member m = representative(k);
  return "(" + parts_[m.part] + "," + elements_[m.part][m.element] + ")";
}

bool same_partition(const QuotientSet& a, const QuotientSet& b) {
  if (a.part_count() != b.part_count()) return false;
  for (std::size_t i = 0; i < a.part_count(); ++i) {
    if (a.part_size(i) != b.part_size(i)) return false;
  }
  return a.injections() == b.injections();
}

namespace {

std::vector<std::size_t> offsets_of(const SetFunctor& h) {
  std::vector<std::size_t> off(h.base().object_count() + 1, 0);
  for (ObjectIndex i = 0; i < h.base().object_count(); ++i) off[i + 1] = off[i] + h.size(i);
  return off;
}

std::vector<std::vector<std::size_t>> labels_from(DisjointSet& ds,
                                                  const std::vector<std::size_t>& off) {
  std::vector<std::vector<std::size_t>> label(off.size() - 1);
  for (std::size_t i = 0; i + 1 < off.size(); ++i) {
    for (std::size_t k = off[i]; k < off[i + 1]; ++k) label[i].push_back(ds.find(k));
  }
  return label;
}

}  // namespace

QuotientSet colimit(const SetFunctor& h) {
  const Category& c = h.base();
  const auto off = offsets_of(h);
  DisjointSet ds(off.back());
  for (ArrowIndex u = 0; u < c.arrow_count(); ++u) {
    for (std::size_t x = 0; x < h.size(c.dom(u)); ++x) {
      ds.unite(off[c.dom(u)] + x, off[c.cod(u)] + h.apply(u, x));
    }
  }
  return QuotientSet(c.object_names(), h.sets(), labels_from(ds, off));
}

// ---------------------------------------------------------- pairwise path

std::optional<std::array<std::size_t, 3>> PairRelation::transitivity_violation() const {
  for (std::size_t b = 0; b < n_; ++b) {
    for (std::size_t a = 0; a < n_; ++a) {
      if (!related(a, b)) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        if (related(b, c) && !related(a, c)) return std::array<std::size_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

PairRelation cocone_relation(const SetFunctor& h) {
  const Category& c = h.base();
  const auto off = offsets_of(h);
  const std::size_t n = off.back();
  // reach[m] = members hit by pushing m forward along some arrow
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (ObjectIndex i = 0; i < c.object_count(); ++i) {
    for (std::size_t x = 0; x < h.size(i); ++x) {
      for (ArrowIndex u : c.arrows_from(i)) reach[off[i] + x][off[c.cod(u)] + h.apply(u, x)] = true;
    }
  }
  PairRelation rel(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        if (reach[a][k] && reach[b][k]) {
          rel.relate(a, b);
          break;
        }
      }
    }
  }
  return rel;
}

QuotientSet partition_by(std::vector<std::string> parts,
                         std::vector<std::vector<std::string>> elements,
                         const PairRelation& relation) {
  std::vector<std::string> flat;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : elements[i]) flat.push_back("(" + parts[i] + "," + e + ")");
  }
  if (auto bad = relation.transitivity_violation()) {
    throw Error(ErrorKind::kRelationNotTransitive,
                flat[(*bad)[0]] + " ~ " + flat[(*bad)[1]] + " ~ " + flat[(*bad)[2]] +
                    " but the outer pair is unrelated");
  }
  // label each member by its least related member
  std::vector<std::vector<std::size_t>> label(parts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t x = 0; x < elements[i].size(); ++x, ++k) {
      std::size_t least = k;
      for (std::size_t m = 0; m < k; ++m) {
        if (relation.related(m, k)) {
          least = m;
          break;
        }
      }
      label[i].push_back(least);
    }
  }
  return QuotientSet(std::move(parts), std::move(elements), label);
}

QuotientSet colimit_filtered(const SetFunctor& h) {
  if (!is_filtered(h.base())) {
    throw Error(ErrorKind::kNotFiltered, "colimit_filtered needs a filtered index category");
  }
  return partition_by(h.base().object_names(), h.sets(), cocone_relation(h));
}

// ----------------------------------------------------------------- limits

std::string LimitSet::family_name(const SetFunctor& h, std::size_t k) const {
  std::string out = "{";
  const Category& c = h.base();
  for (ObjectIndex i = 0; i < c.object_count(); ++i) {
    if (i > 0) out += ",";
    out += c.object_name(i) + ":" + h.element(i, families[k][i]);
  }
  return out + "}";
}

LimitSet limit(const SetFunctor& h, std::uint64_t budget) {
  const Category& c = h.base();
  const std::size_t n = c.object_count();
  std::vector<std::vector<ArrowIndex>> checks(n);
  for (ArrowIndex u = 0; u < c.arrow_count(); ++u) {
    if (!c.is_identity(u)) checks[std::max(c.dom(u), c.cod(u))].push_back(u);
  }
  LimitSet out;
  std::vector<std::size_t> family(n);
  std::uint64_t nodes = 0;
  std::function<void(ObjectIndex)> search = [&](ObjectIndex i) {
    if (i == n) {
      out.families.push_back(family);
      return;
    }
    for (std::size_t x = 0; x < h.size(i); ++x) {
      if (++nodes > budget) {
        throw Error(ErrorKind::kSearchBudgetExceeded,
                    "limit search exceeded " + std::to_string(budget) + " nodes");
      }
      family[i] = x;
      bool ok = true;
      for (ArrowIndex u : checks[i]) {
        if (h.apply(u, family[c.dom(u)]) != family[c.cod(u)]) {
          ok = false;
          break;
        }
      }
      if (ok) search(i + 1);
    }
  };
  search(0);
  return out;
}

// ----------------------------------------------------------------- tensor

namespace {

void require_tensor_shape(const SetFunctor& presheaf, const SetFunctor& functor) {
  if (!identical(presheaf.base(), opposite(functor.base()))) {
    throw Error(ErrorKind::kBaseMismatch,
                "tensor needs a presheaf on C and a covariant functor on the same C");
  }
}

}  // namespace

QuotientSet tensor(const SetFunctor& presheaf, const SetFunctor& functor) {
  require_tensor_shape(presheaf, functor);
  const Category& c = functor.base();
  const std::size_t n = c.object_count();
  std::vector<std::size_t> off(n + 1, 0);
  std::vector<std::vector<std::string>> elements(n);
  for (ObjectIndex i = 0; i < n; ++i) {
    off[i + 1] = off[i] + presheaf.size(i) * functor.size(i);
    for (std::size_t x = 0; x < presheaf.size(i); ++x) {
      for (std::size_t y = 0; y < functor.size(i); ++y) {
        elements[i].push_back("(" + presheaf.element(i, x) + "," + functor.element(i, y) + ")");
      }
    }
  }
  DisjointSet ds(off.back());
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    const ObjectIndex a = c.dom(f);
    const ObjectIndex b = c.cod(f);
    for (std::size_t xb = 0; xb < presheaf.size(b); ++xb) {
      const std::size_t xa = presheaf.apply(f, xb);
      for (std::size_t y = 0; y < functor.size(a); ++y) {
        ds.unite(off[a] + xa * functor.size(a) + y,
                 off[b] + xb * functor.size(b) + functor.apply(f, y));
      }
    }
  }
  return QuotientSet(c.object_names(), std::move(elements), labels_from(ds, off));
}

TensorComparison tensor_commute_check(const SetFunctor& presheaf, const SetFunctor& functor) {
  require_tensor_shape(presheaf, functor);
  const Category& c = functor.base();
  TensorComparison out;
  out.tensor = tensor(presheaf, functor);

  // F over (∫P)^op: parts (c, y), elements x in F(c)
  const Elements ep = elements_covariant(functor);
  out.over_functor_elements = colimit(presheaf.restrict(ep.projection.opposite()));
  // P over ∫F: parts (c, x), elements y in P(c)
  const Elements ef = elements_presheaf(presheaf);
  out.over_presheaf_elements = colimit(functor.restrict(ef.projection));

  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kCommutationFailure, what);
  };
  auto transport = [&](const QuotientSet& side, auto member_of, std::vector<std::size_t>& map,
                       const char* name) {
    map.assign(side.size(), out.tensor.size());
    std::vector<std::size_t> back(out.tensor.size(), side.size());
    for (std::size_t part = 0; part < side.part_count(); ++part) {
      for (std::size_t e = 0; e < side.part_size(part); ++e) {
        const auto [obj, x, y] = member_of(part, e);
        const std::size_t t = out.tensor.class_of(obj, x * functor.size(obj) + y);
        const std::size_t s = side.class_of(part, e);
        if (map[s] == out.tensor.size()) map[s] = t;
        if (back[t] == side.size()) back[t] = s;
        if (map[s] != t || back[t] != s) {
          fail(std::string(name) + " and the tensor product split the carrier differently at (" +
               c.object_name(obj) + "," + presheaf.element(obj, x) + "," +
               functor.element(obj, y) + ")");
        }
      }
    }
    if (side.size() != out.tensor.size()) fail(std::string(name) + " has a different class count");
  };
  transport(
      out.over_functor_elements,
      [&](std::size_t part, std::size_t e) {
        return std::array<std::size_t, 3>{ep.base_object[part], e, ep.element[part]};
      },
      out.functor_side_to_tensor, "colimit over the elements of P");
  transport(
      out.over_presheaf_elements,
      [&](std::size_t part, std::size_t e) {
        return std::array<std::size_t, 3>{ef.base_object[part], ef.element[part], e};
      },
      out.presheaf_side_to_tensor, "colimit over the elements of F");
  return out;
}

}  // namespace fincat
