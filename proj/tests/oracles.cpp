#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

struct Flat {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  explicit Flat(const SetFunctor& h) {
    for (std::size_t c = 0; c < h.base().object_count(); ++c) {
      offset.push_back(total);
      total += h.size(c);
    }
  }
  std::size_t at(std::size_t c, std::size_t x) const { return offset[c] + x; }
};

// Arrow f of C read through a presheaf on C (base is C^op).
struct OpView {
  const Category& op;
  std::size_t dom(std::size_t f) const { return op.cod(f); }
  std::size_t cod(std::size_t f) const { return op.dom(f); }
  std::size_t compose(std::size_t g, std::size_t f) const { return op.compose(f, g); }
  std::vector<std::size_t> hom(std::size_t a, std::size_t b) const { return op.hom(b, a); }
};

}  // namespace

Labels colimit_labels(const SetFunctor& h) {
  const Category& c = h.base();
  const Flat flat(h);
  std::vector<std::size_t> label(flat.total);
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < c.arrow_count(); ++u) {
      for (std::size_t x = 0; x < h.size(c.dom(u)); ++x) {
        std::size_t& a = label[flat.at(c.dom(u), x)];
        std::size_t& b = label[flat.at(c.cod(u), h.apply(u, x))];
        if (a != b) {
          a = b = std::min(a, b);
          changed = true;
        }
      }
    }
  }
  // min-propagation along edges reaches the component minimum
  Labels out(c.object_count());
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    for (std::size_t x = 0; x < h.size(i); ++x) out[i].push_back(label[flat.at(i, x)]);
  }
  return out;
}

bool same_partition(const QuotientSet& q, const Labels& labels) {
  std::vector<std::pair<std::size_t, std::size_t>> members;
  if (q.part_count() != labels.size()) return false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (q.part_size(i) != labels[i].size()) return false;
    for (std::size_t x = 0; x < labels[i].size(); ++x) members.emplace_back(i, x);
  }
  for (const auto& [i, x] : members) {
    for (const auto& [j, y] : members) {
      const bool same_q = q.class_of(i, x) == q.class_of(j, y);
      if (same_q != (labels[i][x] == labels[j][y])) return false;
    }
  }
  return true;
}

bool colimit_universal(const SetFunctor& h, const QuotientSet& q) {
  const Category& c = h.base();
  const Flat flat(h);
  if (flat.total > 20) throw std::runtime_error("carrier too large for cocone enumeration");
  // q must be a partition whose classes list exactly the members
  std::size_t listed = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q.members(k).empty()) return false;
    for (const auto& m : q.members(k)) {
      if (q.class_of(m.part, m.element) != k) return false;
      ++listed;
    }
  }
  if (listed != flat.total) return false;
  // the injections form a cocone
  for (std::size_t u = 0; u < c.arrow_count(); ++u) {
    for (std::size_t x = 0; x < h.size(c.dom(u)); ++x) {
      if (q.class_of(c.dom(u), x) != q.class_of(c.cod(u), h.apply(u, x))) return false;
    }
  }
  std::vector<std::vector<bool>> separated(q.size(), std::vector<bool>(q.size(), false));
  for (std::uint32_t mask = 0; mask < (1u << flat.total); ++mask) {
    auto bit = [&](std::size_t i, std::size_t x) { return (mask >> flat.at(i, x)) & 1u; };
    bool cocone = true;
    for (std::size_t u = 0; u < c.arrow_count() && cocone; ++u) {
      for (std::size_t x = 0; x < h.size(c.dom(u)) && cocone; ++x) {
        cocone = bit(c.dom(u), x) == bit(c.cod(u), h.apply(u, x));
      }
    }
    if (!cocone) continue;
    // factorization: the cocone must be constant on classes
    std::vector<int> value(q.size(), -1);
    for (std::size_t k = 0; k < q.size(); ++k) {
      for (const auto& m : q.members(k)) {
        const int b = static_cast<int>(bit(m.part, m.element));
        if (value[k] == -1) value[k] = b;
        if (value[k] != b) return false;
      }
    }
    for (std::size_t k = 0; k < q.size(); ++k) {
      for (std::size_t l = 0; l < q.size(); ++l) {
        if (value[k] != value[l]) separated[k][l] = true;
      }
    }
  }
  // uniqueness: distinct classes must be distinguishable
  for (std::size_t k = 0; k < q.size(); ++k) {
    for (std::size_t l = 0; l < q.size(); ++l) {
      if (k != l && !separated[k][l]) return false;
    }
  }
  return true;
}

std::size_t limit_count(const SetFunctor& h) {
  const Category& c = h.base();
  const std::size_t n = c.object_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (h.size(i) == 0) return 0;
  }
  std::vector<std::size_t> family(n, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t u = 0; u < c.arrow_count() && ok; ++u) {
      ok = h.apply(u, family[c.dom(u)]) == family[c.cod(u)];
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < n && ++family[k] == h.size(k)) family[k++] = 0;
    if (k == n) break;
  }
  return count;
}

Labels tensor_labels(const SetFunctor& presheaf, const SetFunctor& functor) {
  const Category& c = functor.base();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    offset.push_back(total);
    total += presheaf.size(i) * functor.size(i);
  }
  auto at = [&](std::size_t i, std::size_t x, std::size_t y) { return offset[i] + x * functor.size(i) + y; };
  std::vector<std::size_t> label(total);
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t f = 0; f < c.arrow_count(); ++f) {
      const std::size_t a = c.dom(f);
      const std::size_t b = c.cod(f);
      for (std::size_t xb = 0; xb < presheaf.size(b); ++xb) {
        for (std::size_t y = 0; y < functor.size(a); ++y) {
          std::size_t& l = label[at(a, presheaf.apply(f, xb), y)];
          std::size_t& r = label[at(b, xb, functor.apply(f, y))];
          if (l != r) {
            l = r = std::min(l, r);
            changed = true;
          }
        }
      }
    }
  }
  Labels out(c.object_count());
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    for (std::size_t k = 0; k < presheaf.size(i) * functor.size(i); ++k) out[i].push_back(label[offset[i] + k]);
  }
  return out;
}

bool filtered(const Category& c) {
  const std::size_t n = c.object_count();
  if (n == 0) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool cocone = false;
      for (std::size_t t = 0; t < n && !cocone; ++t) cocone = !c.hom(a, t).empty() && !c.hom(b, t).empty();
      if (!cocone) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t u : c.hom(a, b)) {
        for (std::size_t v : c.hom(a, b)) {
          bool ok = false;
          for (std::size_t w : c.arrows_from(b)) ok = ok || c.compose(w, u) == c.compose(w, v);
          if (!ok) return false;
        }
      }
    }
  }
  return true;
}

bool flat(const SetFunctor& presheaf) {
  const OpView cv{presheaf.base()};
  const std::size_t n = presheaf.base().object_count();
  bool nonempty = false;
  for (std::size_t c = 0; c < n; ++c) nonempty = nonempty || presheaf.size(c) > 0;
  if (!nonempty) return false;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t x = 0; x < presheaf.size(c); ++x) {
        for (std::size_t y = 0; y < presheaf.size(d); ++y) {
          bool found = false;
          for (std::size_t b = 0; b < n && !found; ++b) {
            for (std::size_t u : cv.hom(c, b)) {
              for (std::size_t v : cv.hom(d, b)) {
                for (std::size_t z = 0; z < presheaf.size(b) && !found; ++z) {
                  found = presheaf.apply(u, z) == x && presheaf.apply(v, z) == y;
                }
              }
            }
          }
          if (!found) return false;
        }
      }
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t u : cv.hom(d, c)) {
        for (std::size_t v : cv.hom(d, c)) {
          for (std::size_t x = 0; x < presheaf.size(c); ++x) {
            if (presheaf.apply(u, x) != presheaf.apply(v, x)) continue;
            bool found = false;
            for (std::size_t b = 0; b < n && !found; ++b) {
              for (std::size_t w : cv.hom(c, b)) {
                if (cv.compose(w, u) != cv.compose(w, v)) continue;
                for (std::size_t y = 0; y < presheaf.size(b) && !found; ++y) found = presheaf.apply(w, y) == x;
              }
            }
            if (!found) return false;
          }
        }
      }
    }
  }
  return true;
}

std::size_t components(const Category& c) {
  std::vector<int> seen(c.object_count(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < c.object_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t f = 0; f < c.arrow_count(); ++f) {
        for (std::size_t b : {c.dom(f), c.cod(f)}) {
          if ((c.dom(f) == a || c.cod(f) == a) && !seen[b]) {
            seen[b] = 1;
            stack.push_back(b);
          }
        }
      }
    }
  }
  return count;
}

std::size_t count_nat(const SetFunctor& f, const SetFunctor& g) {
  const Category& c = f.base();
  const std::size_t n = c.object_count();
  // one odometer digit per (object, element of F)
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < f.size(i); ++x) {
      if (g.size(i) == 0) return 0;
      slots.emplace_back(i, x);
    }
  }
  std::vector<std::vector<std::size_t>> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i].assign(f.size(i), 0);
  std::size_t count = 0;
  while (true) {
    bool natural = true;
    for (std::size_t u = 0; u < c.arrow_count() && natural; ++u) {
      for (std::size_t x = 0; x < f.size(c.dom(u)) && natural; ++x) {
        natural = g.apply(u, comp[c.dom(u)][x]) == comp[c.cod(u)][f.apply(u, x)];
      }
    }
    if (natural) ++count;
    std::size_t k = 0;
    while (k < slots.size()) {
      auto& digit = comp[slots[k].first][slots[k].second];
      if (++digit < g.size(slots[k].first)) break;
      digit = 0;
      ++k;
    }
    if (k == slots.size()) break;
  }
  return count;
}

bool isomorphic(const SetFunctor& f, const SetFunctor& g) {
  const Category& c = f.base();
  const std::size_t n = c.object_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (f.size(i) != g.size(i)) return false;
  }
  std::vector<std::vector<std::size_t>> perm(n);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == n) {
      for (std::size_t u = 0; u < c.arrow_count(); ++u) {
        for (std::size_t x = 0; x < f.size(c.dom(u)); ++x) {
          if (g.apply(u, perm[c.dom(u)][x]) != perm[c.cod(u)][f.apply(u, x)]) return false;
        }
      }
      return true;
    }
    perm[i].resize(f.size(i));
    std::iota(perm[i].begin(), perm[i].end(), 0);
    do {
      if (search(i + 1)) return true;
    } while (std::next_permutation(perm[i].begin(), perm[i].end()));
    return false;
  };
  return search(0);
}

std::size_t sieve_count(const Category& c, std::size_t object) {
  std::vector<std::size_t> into;
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    if (c.cod(f) == object) into.push_back(f);
  }
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << into.size()); ++mask) {
    std::vector<bool> in(c.arrow_count(), false);
    for (std::size_t k = 0; k < into.size(); ++k) in[into[k]] = (mask >> k) & 1u;
    bool closed = true;
    for (std::size_t f = 0; f < c.arrow_count(); ++f) {
      if (!in[f]) continue;
      for (std::size_t g = 0; g < c.arrow_count(); ++g) {
        if (c.cod(g) == c.dom(f) && !in[c.compose(f, g)]) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

bool sheaf(const SetFunctor& presheaf, const fincat::Topology& j) {
  const Category& c = j.base;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    for (const fincat::Sieve& s : j.covers[x]) {
      const std::size_t m = s.arrows.size();
      std::vector<std::size_t> family(m, 0);
      std::size_t families = 0;
      bool empty_domain = false;
      for (std::size_t f : s.arrows) empty_domain = empty_domain || presheaf.size(c.dom(f)) == 0;
      if (!empty_domain) {
        while (true) {
          bool matching = true;
          for (std::size_t k = 0; k < m && matching; ++k) {
            const std::size_t f = s.arrows[k];
            for (std::size_t g = 0; g < c.arrow_count() && matching; ++g) {
              if (c.cod(g) != c.dom(f)) continue;
              const std::size_t fg = c.compose(f, g);
              const std::size_t pos = std::find(s.arrows.begin(), s.arrows.end(), fg) - s.arrows.begin();
              matching = presheaf.apply(g, family[k]) == family[pos];
            }
          }
          if (matching) ++families;
          std::size_t k = 0;
          while (k < m && ++family[k] == presheaf.size(c.dom(s.arrows[k]))) family[k++] = 0;
          if (k == m) break;
        }
      }
      // restriction must be injective and hit every family
      std::vector<std::vector<std::size_t>> images;
      for (std::size_t e = 0; e < presheaf.size(x); ++e) {
        std::vector<std::size_t> r;
        for (std::size_t f : s.arrows) r.push_back(presheaf.apply(f, e));
        images.push_back(r);
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
      if (images.size() != families) return false;
    }
  }
  return true;
}

std::vector<SetFunctor> all_set_functors(const Category& base, std::size_t max_size) {
  const std::size_t n = base.object_count();
  std::vector<SetFunctor> out;
  std::vector<std::size_t> sizes(n, 0);
  std::vector<std::size_t> free_arrows;
  for (std::size_t f = 0; f < base.arrow_count(); ++f) {
    if (!base.is_identity(f)) free_arrows.push_back(f);
  }
  while (true) {
    std::vector<std::vector<std::size_t>> maps(base.arrow_count());
    bool possible = true;
    for (std::size_t f = 0; f < base.arrow_count(); ++f) {
      maps[f].assign(sizes[base.dom(f)], 0);
      if (base.is_identity(f)) std::iota(maps[f].begin(), maps[f].end(), 0);
      if (!base.is_identity(f) && sizes[base.dom(f)] > 0 && sizes[base.cod(f)] == 0) possible = false;
    }
    if (possible) {
      // odometer over every map of every non-identity arrow
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t f : free_arrows) {
        for (std::size_t x = 0; x < sizes[base.dom(f)]; ++x) slots.emplace_back(f, x);
      }
      while (true) {
        bool functorial = true;
        for (std::size_t g = 0; g < base.arrow_count() && functorial; ++g) {
          for (std::size_t f = 0; f < base.arrow_count() && functorial; ++f) {
            if (base.cod(f) != base.dom(g)) continue;
            const std::size_t gf = base.compose(g, f);
            for (std::size_t x = 0; x < sizes[base.dom(f)] && functorial; ++x) {
              functorial = maps[g][maps[f][x]] == maps[gf][x];
            }
          }
        }
        if (functorial) {
          std::vector<std::vector<std::string>> sets(n);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < sizes[i]; ++k) sets[i].push_back(std::to_string(k));
          }
          out.emplace_back(base, sets, maps);
        }
        std::size_t k = 0;
        while (k < slots.size()) {
          auto& digit = maps[slots[k].first][slots[k].second];
          if (++digit < sizes[base.cod(slots[k].first)]) break;
          digit = 0;
          ++k;
        }
        if (k == slots.size()) break;
      }
    }
    std::size_t k = 0;
    while (k < n && ++sizes[k] > max_size) sizes[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace oracle
