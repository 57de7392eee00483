#include "fincat/random.hpp"

#include <algorithm>
#include <functional>

#include "fincat/flatness.hpp"

namespace fincat {

namespace {

constexpr int kUnknown = -1;
constexpr std::size_t kCompositionSteps = 20000;

struct Graph {
  std::size_t objects = 0;
  std::vector<std::pair<ObjectIndex, ObjectIndex>> arrows;  // non-identity
};

// Adds arrows until every composable pair has somewhere to land. Returns
// false if that needs more arrows than allowed.
bool close_graph(Graph& g, std::size_t max_non_identity) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t f = 0; f < g.arrows.size(); ++f) {
      for (std::size_t h = 0; h < g.arrows.size(); ++h) {
        if (g.arrows[f].second != g.arrows[h].first) continue;
        const ObjectIndex from = g.arrows[f].first;
        const ObjectIndex to = g.arrows[h].second;
        if (from == to) continue;  // the identity is available
        bool present = false;
        for (const auto& a : g.arrows) present = present || (a.first == from && a.second == to);
        if (present) continue;
        if (g.arrows.size() >= max_non_identity) return false;
        g.arrows.emplace_back(from, to);
        changed = true;
      }
    }
  }
  return true;
}

// Backtracking search for an associative composition on the non-identity
// arrows of `g`. Arrow k < objects is the identity of object k; arrow
// objects + i is the i-th graph arrow.
std::optional<Category> find_composition(Rng& rng, const Graph& g) {
  const std::size_t n = g.objects;
  const std::size_t m = n + g.arrows.size();
  std::vector<ObjectIndex> dom(m), cod(m);
  for (std::size_t k = 0; k < n; ++k) dom[k] = cod[k] = k;
  for (std::size_t i = 0; i < g.arrows.size(); ++i) {
    dom[n + i] = g.arrows[i].first;
    cod[n + i] = g.arrows[i].second;
  }
  std::vector<int> table(m * m, kUnknown);
  auto comp = [&](std::size_t x, std::size_t y) -> int {  // x∘y
    if (x < n) return static_cast<int>(y);
    if (y < n) return static_cast<int>(x);
    return table[x * m + y];
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t f = n; f < m; ++f) {
    for (std::size_t h = n; h < m; ++h) {
      if (cod[f] == dom[h]) pairs.emplace_back(h, f);
    }
  }
  auto associative_so_far = [&]() {
    for (std::size_t f = n; f < m; ++f) {
      for (std::size_t h = n; h < m; ++h) {
        if (cod[f] != dom[h]) continue;
        const int hf = comp(h, f);
        if (hf == kUnknown) continue;
        for (std::size_t k = n; k < m; ++k) {
          if (cod[h] != dom[k]) continue;
          const int kh = comp(k, h);
          if (kh == kUnknown) continue;
          const int left = comp(k, static_cast<std::size_t>(hf));
          const int right = comp(static_cast<std::size_t>(kh), f);
          if (left != kUnknown && right != kUnknown && left != right) return false;
        }
      }
    }
    return true;
  };
  std::size_t steps = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == pairs.size()) return true;
    const auto [h, f] = pairs[k];
    std::vector<std::size_t> candidates;
    for (std::size_t a = 0; a < m; ++a) {
      if (dom[a] == dom[f] && cod[a] == cod[h]) candidates.push_back(a);
    }
    rng.shuffle(candidates);
    for (std::size_t a : candidates) {
      if (++steps > kCompositionSteps) return false;
      table[h * m + f] = static_cast<int>(a);
      if (associative_so_far() && assign(k + 1)) return true;
    }
    table[h * m + f] = kUnknown;
    return false;
  };
  if (!assign(0)) return std::nullopt;

  CategoryTables t;
  t.init(n, m);
  for (std::size_t k = 0; k < n; ++k) {
    t.objects[k] = "o" + std::to_string(k);
    t.arrows[k] = "id_o" + std::to_string(k);
    t.identity[k] = k;
  }
  for (std::size_t i = 0; i < g.arrows.size(); ++i) t.arrows[n + i] = "m" + std::to_string(i);
  t.dom = dom;
  t.cod = cod;
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t h = 0; h < m; ++h) {
      if (cod[f] == dom[h]) t.set(h, f, static_cast<std::size_t>(comp(h, f)));
    }
  }
  return Category::from_tables(std::move(t));
}

}  // namespace

Category random_category(Rng& rng, CategoryShape shape) {
  const std::size_t max_objects = std::max<std::size_t>(1, std::min(shape.max_objects, shape.max_arrows));
  for (;;) {
    Graph g;
    g.objects = rng.between(1, max_objects);
    const std::size_t room = shape.max_arrows - g.objects;
    const std::size_t extra = rng.between(0, room);
    for (std::size_t i = 0; i < extra; ++i) {
      g.arrows.emplace_back(rng.below(g.objects), rng.below(g.objects));
    }
    if (!close_graph(g, room)) continue;
    if (auto c = find_composition(rng, g)) return *c;
  }
}

Category random_filtered_category(Rng& rng, CategoryShape shape) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    Category c = random_category(rng, shape);
    if (is_filtered(c)) return c;
  }
  // c plus a terminal object needs |objects(c)| + 1 extra arrows
  for (;;) {
    CategoryShape smaller{std::max<std::size_t>(1, shape.max_objects - 1), shape.max_arrows};
    Category c = random_category(rng, smaller);
    if (c.arrow_count() + c.object_count() + 1 <= shape.max_arrows) return adjoin_terminal(c);
    if (shape.max_arrows < 3) return terminal_category();
  }
}

SetFunctor random_set_functor(Rng& rng, const Category& base, std::size_t max_size,
                              std::size_t min_size) {
  const std::size_t n = base.object_count();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::size_t> sizes(n);
    for (auto& s : sizes) s = rng.between(min_size, max_size);
    std::vector<std::vector<std::size_t>> maps(base.arrow_count());
    for (ObjectIndex x = 0; x < n; ++x) {
      auto& id = maps[base.identity(x)];
      for (std::size_t i = 0; i < sizes[x]; ++i) id.push_back(i);
    }
    std::vector<ArrowIndex> order;
    for (ArrowIndex f = 0; f < base.arrow_count(); ++f) {
      if (!base.is_identity(f)) order.push_back(f);
    }
    std::vector<bool> assigned(base.arrow_count(), false);
    for (ObjectIndex x = 0; x < n; ++x) assigned[base.identity(x)] = true;
    auto consistent = [&]() {
      for (ArrowIndex f = 0; f < base.arrow_count(); ++f) {
        if (!assigned[f]) continue;
        for (ArrowIndex g : base.arrows_from(base.cod(f))) {
          const ArrowIndex gf = base.compose(g, f);
          if (!assigned[g] || !assigned[gf]) continue;
          for (std::size_t i = 0; i < maps[f].size(); ++i) {
            if (maps[g][maps[f][i]] != maps[gf][i]) return false;
          }
        }
      }
      return true;
    };
    std::size_t steps = 0;
    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
      if (k == order.size()) return true;
      const ArrowIndex f = order[k];
      const std::size_t from = sizes[base.dom(f)];
      const std::size_t to = sizes[base.cod(f)];
      if (from > 0 && to == 0) return false;
      std::size_t total = 1;
      for (std::size_t i = 0; i < from; ++i) total *= to;
      std::vector<std::size_t> codes(total);
      for (std::size_t i = 0; i < total; ++i) codes[i] = i;
      rng.shuffle(codes);
      assigned[f] = true;
      for (std::size_t code : codes) {
        if (++steps > 5000) break;
        maps[f].assign(from, 0);
        for (std::size_t i = 0; i < from; ++i, code /= to) maps[f][i] = code % to;
        if (consistent() && assign(k + 1)) return true;
      }
      assigned[f] = false;
      return false;
    };
    if (!assign(0)) continue;
    std::vector<std::vector<std::string>> sets(n);
    for (ObjectIndex x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < sizes[x]; ++i) sets[x].push_back(std::to_string(i));
    }
    return SetFunctor(base, std::move(sets), std::move(maps));
  }
  const std::size_t k = std::min(std::max<std::size_t>(min_size, 1), max_size);
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < k; ++i) elements.push_back(std::to_string(i));
  return SetFunctor::constant(base, elements);
}

SetFunctor random_presheaf(Rng& rng, const Category& c, std::size_t max_size,
                           std::size_t min_size) {
  return random_set_functor(rng, opposite(c), max_size, min_size);
}

SetFunctor random_flat_presheaf(Rng& rng, const Category& c, std::size_t max_size) {
  if (rng.chance(0.5)) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      SetFunctor f = random_presheaf(rng, c, max_size, 0);
      if (is_flat(f).flat) return f;
    }
  }
  const ObjectIndex x = rng.below(c.object_count());
  std::vector<ArrowIndex> idempotents;
  for (ArrowIndex e : c.hom(x, x)) {
    if (c.compose(e, e) == e) idempotents.push_back(e);
  }
  const ArrowIndex e = idempotents[rng.below(idempotents.size())];
  // F(d) = {h: d -> x | e∘h = h}, acted on by precomposition
  std::vector<std::vector<std::string>> sets(c.object_count());
  std::vector<std::vector<ArrowIndex>> members(c.object_count());
  for (ObjectIndex d = 0; d < c.object_count(); ++d) {
    for (ArrowIndex h : c.hom(d, x)) {
      if (c.compose(e, h) == h) {
        members[d].push_back(h);
        sets[d].push_back(c.arrow_name(h));
      }
    }
  }
  std::vector<std::vector<std::size_t>> maps(c.arrow_count());
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    for (ArrowIndex h : members[c.cod(g)]) {
      const ArrowIndex hg = c.compose(h, g);
      const auto& target = members[c.dom(g)];
      maps[g].push_back(static_cast<std::size_t>(std::find(target.begin(), target.end(), hg) -
                                                 target.begin()));
    }
  }
  return SetFunctor(opposite(c), std::move(sets), std::move(maps));
}

Functor random_functor(Rng& rng, const Category& source, const Category& target) {
  std::vector<Functor> all = enumerate_functors(source, target);
  if (all.empty()) throw Error(ErrorKind::kSelfTestFailure, "no functor between the categories");
  return all[rng.below(all.size())];
}

Profunctor random_profunctor(Rng& rng, const Category& c, const Category& d, std::size_t max_size) {
  const SetFunctor h = random_set_functor(rng, product_category(c, opposite(d)), max_size);
  return profunctor_from_product(c, d, h);
}

}  // namespace fincat
