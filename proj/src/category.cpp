#include "fincat/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

namespace fincat {

namespace {

constexpr ArrowIndex kMissing = static_cast<ArrowIndex>(-1);

std::string quote(const std::string& s) { return "'" + s + "'"; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

RawCategory& RawCategory::add_unit_laws() {
  std::set<std::pair<std::string, std::string>> present;
  for (const auto& entry : compose) present.emplace(entry.g, entry.f);
  for (const auto& a : arrows) {
    auto id_cod = identity.find(a.cod);
    auto id_dom = identity.find(a.dom);
    if (id_cod != identity.end() && present.emplace(id_cod->second, a.id).second) {
      compose.push_back({id_cod->second, a.id, a.id});
    }
    if (id_dom != identity.end() && present.emplace(a.id, id_dom->second).second) {
      compose.push_back({a.id, id_dom->second, a.id});
    }
  }
  return *this;
}

void CategoryTables::init(std::size_t object_count, std::size_t arrow_count) {
  objects.resize(object_count);
  arrows.resize(arrow_count);
  dom.assign(arrow_count, 0);
  cod.assign(arrow_count, 0);
  identity.assign(object_count, kMissing);
  table.assign(arrow_count * arrow_count, detail::kNoArrow);
}

Category::Category() : d_(std::make_shared<detail::CategoryData>()) {}

Category Category::from_tables(CategoryTables t) {
  const std::size_t n_obj = t.objects.size();
  const std::size_t n_arr = t.arrows.size();
  if (n_arr > kMaxArrows) {
    throw Error(ErrorKind::kTooLarge, std::to_string(n_arr) + " arrows exceeds the cap of " +
                                          std::to_string(kMaxArrows));
  }
  auto data = std::make_shared<detail::CategoryData>();
  for (ObjectIndex c = 0; c < n_obj; ++c) {
    if (!data->object_index.emplace(t.objects[c], c).second) {
      throw Error(ErrorKind::kDuplicateId, "object " + quote(t.objects[c]));
    }
  }
  for (ArrowIndex f = 0; f < n_arr; ++f) {
    if (!data->arrow_index.emplace(t.arrows[f], f).second) {
      throw Error(ErrorKind::kDuplicateId, "arrow " + quote(t.arrows[f]));
    }
    if (t.dom[f] >= n_obj || t.cod[f] >= n_obj) {
      throw Error(ErrorKind::kUnknownObject, "endpoint of arrow " + quote(t.arrows[f]));
    }
  }
  if (t.identity.size() != n_obj) {
    throw Error(ErrorKind::kMissingIdentity, "identity table has wrong size");
  }
  data->is_identity.assign(n_arr, false);
  for (ObjectIndex c = 0; c < n_obj; ++c) {
    ArrowIndex id = t.identity[c];
    if (id == kMissing) throw Error(ErrorKind::kMissingIdentity, "object " + quote(t.objects[c]));
    if (id >= n_arr) throw Error(ErrorKind::kUnknownArrow, "identity of " + quote(t.objects[c]));
    if (t.dom[id] != c || t.cod[id] != c) {
      throw Error(ErrorKind::kDomCodMismatch,
                  "identity " + quote(t.arrows[id]) + " of " + quote(t.objects[c]) +
                      " is not an endo-arrow on it");
    }
    data->is_identity[id] = true;
  }

  auto at = [&](ArrowIndex g, ArrowIndex f) { return t.table[g * n_arr + f]; };
  auto name = [&](ArrowIndex f) { return quote(t.arrows[f]); };

  // Entries: defined exactly on composable pairs, with coherent dom/cod.
  for (ArrowIndex g = 0; g < n_arr; ++g) {
    for (ArrowIndex f = 0; f < n_arr; ++f) {
      const std::uint32_t gf = at(g, f);
      const bool composable = t.cod[f] == t.dom[g];
      if (gf == detail::kNoArrow) continue;
      if (!composable) {
        throw Error(ErrorKind::kDomCodMismatch,
                    "compose(" + name(g) + ", " + name(f) + ") given for a non-composable pair");
      }
      if (gf >= n_arr) throw Error(ErrorKind::kUnknownArrow, "composite index out of range");
      if (t.dom[gf] != t.dom[f] || t.cod[gf] != t.cod[g]) {
        throw Error(ErrorKind::kDomCodMismatch, "compose(" + name(g) + ", " + name(f) +
                                                    ") = " + name(gf) +
                                                    " has the wrong domain or codomain");
      }
    }
  }
  for (ArrowIndex f = 0; f < n_arr; ++f) {
    for (ArrowIndex g = 0; g < n_arr; ++g) {
      if (t.cod[f] == t.dom[g] && at(g, f) == detail::kNoArrow) {
        throw Error(ErrorKind::kIncompleteComposition,
                    "no entry for compose(" + name(g) + ", " + name(f) + ")");
      }
    }
  }
  for (ArrowIndex f = 0; f < n_arr; ++f) {
    ArrowIndex left = at(t.identity[t.cod[f]], f);
    ArrowIndex right = at(f, t.identity[t.dom[f]]);
    if (left != f || right != f) {
      throw Error(ErrorKind::kUnitLawViolation, "identity does not act as a unit on " + name(f));
    }
  }

  data->from.assign(n_obj, {});
  data->into.assign(n_obj, {});
  data->hom.assign(n_obj * n_obj, {});
  for (ArrowIndex f = 0; f < n_arr; ++f) {
    data->from[t.dom[f]].push_back(f);
    data->into[t.cod[f]].push_back(f);
    data->hom[t.dom[f] * n_obj + t.cod[f]].push_back(f);
  }
  for (ArrowIndex f = 0; f < n_arr; ++f) {
    for (ArrowIndex g : data->from[t.cod[f]]) {
      const ArrowIndex gf = at(g, f);
      for (ArrowIndex h : data->from[t.cod[g]]) {
        const ArrowIndex h_gf = at(h, gf);
        const ArrowIndex hg_f = at(at(h, g), f);
        if (h_gf != hg_f) {
          throw Error(ErrorKind::kNonAssociative,
                      "triple (" + name(h) + ", " + name(g) + ", " + name(f) + "): h∘(g∘f) = " +
                          name(h_gf) + " but (h∘g)∘f = " + name(hg_f));
        }
      }
    }
  }

  data->objects = std::move(t.objects);
  data->arrows = std::move(t.arrows);
  data->dom = std::move(t.dom);
  data->cod = std::move(t.cod);
  data->identity = std::move(t.identity);
  data->table = std::move(t.table);
  return Category(std::move(data));
}

std::optional<ObjectIndex> Category::find_object(std::string_view name) const {
  auto it = d_->object_index.find(std::string(name));
  if (it == d_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIndex> Category::find_arrow(std::string_view name) const {
  auto it = d_->arrow_index.find(std::string(name));
  if (it == d_->arrow_index.end()) return std::nullopt;
  return it->second;
}

ObjectIndex Category::object(std::string_view name) const {
  if (auto c = find_object(name)) return *c;
  throw Error(ErrorKind::kUnknownObject, quote(std::string(name)));
}

ArrowIndex Category::arrow(std::string_view name) const {
  if (auto f = find_arrow(name)) return *f;
  throw Error(ErrorKind::kUnknownArrow, quote(std::string(name)));
}

CategoryTables Category::tables() const {
  CategoryTables t;
  t.objects = d_->objects;
  t.arrows = d_->arrows;
  t.dom = d_->dom;
  t.cod = d_->cod;
  t.identity = d_->identity;
  t.table = d_->table;
  return t;
}

RawCategory Category::to_raw() const {
  RawCategory raw;
  raw.objects = d_->objects;
  for (ArrowIndex f = 0; f < arrow_count(); ++f) {
    raw.arrows.push_back({arrow_name(f), object_name(dom(f)), object_name(cod(f))});
  }
  for (ObjectIndex c = 0; c < object_count(); ++c) {
    raw.identity[object_name(c)] = arrow_name(identity(c));
  }
  for (ArrowIndex f = 0; f < arrow_count(); ++f) {
    for (ArrowIndex g : arrows_from(cod(f))) {
      raw.compose.push_back({arrow_name(g), arrow_name(f), arrow_name(compose(g, f))});
    }
  }
  return raw;
}

bool operator==(const Category& a, const Category& b) {
  if (a.same_storage(b)) return true;
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
  std::vector<ObjectIndex> obj(a.object_count());
  for (ObjectIndex c = 0; c < a.object_count(); ++c) {
    auto m = b.find_object(a.object_name(c));
    if (!m) return false;
    obj[c] = *m;
  }
  std::vector<ArrowIndex> arr(a.arrow_count());
  for (ArrowIndex f = 0; f < a.arrow_count(); ++f) {
    auto m = b.find_arrow(a.arrow_name(f));
    if (!m) return false;
    arr[f] = *m;
    if (obj[a.dom(f)] != b.dom(*m) || obj[a.cod(f)] != b.cod(*m)) return false;
  }
  for (ObjectIndex c = 0; c < a.object_count(); ++c) {
    if (arr[a.identity(c)] != b.identity(obj[c])) return false;
  }
  for (ArrowIndex f = 0; f < a.arrow_count(); ++f) {
    for (ArrowIndex g : a.arrows_from(a.cod(f))) {
      if (arr[a.compose(g, f)] != b.compose(arr[g], arr[f])) return false;
    }
  }
  return true;
}

bool identical(const Category& a, const Category& b) {
  if (a.same_storage(b)) return true;
  if (a.object_names() != b.object_names() || a.arrow_names() != b.arrow_names()) return false;
  const CategoryTables ta = a.tables();
  const CategoryTables tb = b.tables();
  return ta.dom == tb.dom && ta.cod == tb.cod && ta.identity == tb.identity && ta.table == tb.table;
}

Category validate_category(const RawCategory& raw) {
  std::unordered_map<std::string, ObjectIndex> objects;
  std::unordered_map<std::string, ArrowIndex> arrows;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) {
    if (!objects.emplace(raw.objects[i], i).second) {
      throw Error(ErrorKind::kDuplicateId, "object " + quote(raw.objects[i]));
    }
  }
  if (raw.arrows.size() > kMaxArrows) {
    throw Error(ErrorKind::kTooLarge, std::to_string(raw.arrows.size()) +
                                          " arrows exceeds the cap of " +
                                          std::to_string(kMaxArrows));
  }
  CategoryTables t;
  t.init(raw.objects.size(), raw.arrows.size());
  t.objects = raw.objects;
  auto lookup_object = [&](const std::string& name, const std::string& context) {
    auto it = objects.find(name);
    if (it == objects.end()) throw Error(ErrorKind::kUnknownObject, quote(name) + " in " + context);
    return it->second;
  };
  for (std::size_t i = 0; i < raw.arrows.size(); ++i) {
    const RawArrow& a = raw.arrows[i];
    if (!arrows.emplace(a.id, i).second) throw Error(ErrorKind::kDuplicateId, "arrow " + quote(a.id));
    t.arrows[i] = a.id;
    t.dom[i] = lookup_object(a.dom, "arrow " + quote(a.id));
    t.cod[i] = lookup_object(a.cod, "arrow " + quote(a.id));
  }
  auto lookup_arrow = [&](const std::string& name, const std::string& context) {
    auto it = arrows.find(name);
    if (it == arrows.end()) throw Error(ErrorKind::kUnknownArrow, quote(name) + " in " + context);
    return it->second;
  };
  for (const auto& [object, arrow] : raw.identity) {
    ObjectIndex c = lookup_object(object, "identity table");
    t.identity[c] = lookup_arrow(arrow, "identity table");
  }
  for (ObjectIndex c = 0; c < raw.objects.size(); ++c) {
    if (t.identity[c] == kMissing) {
      throw Error(ErrorKind::kMissingIdentity, "object " + quote(raw.objects[c]));
    }
  }
  for (const RawComposite& entry : raw.compose) {
    const std::string context = "compose(" + quote(entry.g) + ", " + quote(entry.f) + ")";
    ArrowIndex g = lookup_arrow(entry.g, context);
    ArrowIndex f = lookup_arrow(entry.f, context);
    ArrowIndex gf = lookup_arrow(entry.gf, context);
    if (t.cod[f] != t.dom[g]) {
      throw Error(ErrorKind::kDomCodMismatch, context + ": cod(f) differs from dom(g)");
    }
    std::uint32_t& slot = t.table[g * t.arrows.size() + f];
    if (slot != detail::kNoArrow && slot != gf) {
      throw Error(ErrorKind::kConflictingComposition, context + " given twice with different values");
    }
    slot = static_cast<std::uint32_t>(gf);
  }
  return Category::from_tables(std::move(t));
}

// ---------------------------------------------------------------- Functor

Functor::Functor(Unchecked, Category source, Category target, std::vector<ObjectIndex> on_objects,
                 std::vector<ArrowIndex> on_arrows)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(on_objects)),
      arrows_(std::move(on_arrows)) {}

Functor::Functor(Category source, Category target, std::vector<ObjectIndex> on_objects,
                 std::vector<ArrowIndex> on_arrows)
    : Functor(Unchecked{}, std::move(source), std::move(target), std::move(on_objects),
              std::move(on_arrows)) {
  const Category& s = source_;
  const Category& t = target_;
  if (objects_.size() != s.object_count() || arrows_.size() != s.arrow_count()) {
    throw Error(ErrorKind::kFunctorViolation, "maps do not cover the source category");
  }
  for (ObjectIndex c : objects_) {
    if (c >= t.object_count()) throw Error(ErrorKind::kFunctorViolation, "object image out of range");
  }
  for (ArrowIndex f = 0; f < s.arrow_count(); ++f) {
    ArrowIndex image = arrows_[f];
    if (image >= t.arrow_count()) throw Error(ErrorKind::kFunctorViolation, "arrow image out of range");
    if (t.dom(image) != objects_[s.dom(f)] || t.cod(image) != objects_[s.cod(f)]) {
      throw Error(ErrorKind::kFunctorViolation,
                  "image of " + quote(s.arrow_name(f)) + " has the wrong domain or codomain");
    }
  }
  for (ObjectIndex c = 0; c < s.object_count(); ++c) {
    if (arrows_[s.identity(c)] != t.identity(objects_[c])) {
      throw Error(ErrorKind::kFunctorViolation,
                  "identity of " + quote(s.object_name(c)) + " is not preserved");
    }
  }
  for (ArrowIndex f = 0; f < s.arrow_count(); ++f) {
    for (ArrowIndex g : s.arrows_from(s.cod(f))) {
      if (arrows_[s.compose(g, f)] != t.compose(arrows_[g], arrows_[f])) {
        throw Error(ErrorKind::kFunctorViolation, "composite " + quote(s.arrow_name(g)) + "∘" +
                                                      quote(s.arrow_name(f)) + " is not preserved");
      }
    }
  }
}

Functor Functor::from_names(Category source, Category target,
                            const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& arrows) {
  std::vector<ObjectIndex> obj(source.object_count(), 0);
  std::vector<bool> seen(source.object_count(), false);
  for (const auto& [from, to] : objects) {
    ObjectIndex c = source.object(from);
    obj[c] = target.object(to);
    seen[c] = true;
  }
  for (ObjectIndex c = 0; c < source.object_count(); ++c) {
    if (!seen[c]) {
      throw Error(ErrorKind::kFunctorViolation, "no image for object " + quote(source.object_name(c)));
    }
  }
  std::vector<ArrowIndex> arr(source.arrow_count(), kMissing);
  for (const auto& [from, to] : arrows) arr[source.arrow(from)] = target.arrow(to);
  for (ObjectIndex c = 0; c < source.object_count(); ++c) {
    ArrowIndex& slot = arr[source.identity(c)];
    if (slot == kMissing) slot = target.identity(obj[c]);
  }
  for (ArrowIndex f = 0; f < source.arrow_count(); ++f) {
    if (arr[f] == kMissing) {
      throw Error(ErrorKind::kFunctorViolation, "no image for arrow " + quote(source.arrow_name(f)));
    }
  }
  return Functor(std::move(source), std::move(target), std::move(obj), std::move(arr));
}

Functor Functor::identity(const Category& c) {
  std::vector<ObjectIndex> obj(c.object_count());
  std::vector<ArrowIndex> arr(c.arrow_count());
  std::iota(obj.begin(), obj.end(), 0);
  std::iota(arr.begin(), arr.end(), 0);
  return Functor(Unchecked{}, c, c, std::move(obj), std::move(arr));
}

Functor Functor::opposite() const {
  return Functor(Unchecked{}, fincat::opposite(source_), fincat::opposite(target_), objects_, arrows_);
}

bool Functor::injective_on_objects() const {
  std::unordered_set<ObjectIndex> seen(objects_.begin(), objects_.end());
  return seen.size() == objects_.size();
}

bool Functor::injective_on_arrows() const {
  std::unordered_set<ArrowIndex> seen(arrows_.begin(), arrows_.end());
  return seen.size() == arrows_.size();
}

bool Functor::full() const {
  for (ObjectIndex a = 0; a < source_.object_count(); ++a) {
    for (ObjectIndex b = 0; b < source_.object_count(); ++b) {
      std::set<ArrowIndex> images;
      for (ArrowIndex f : source_.hom(a, b)) images.insert(arrows_[f]);
      if (images.size() != target_.hom(objects_[a], objects_[b]).size()) return false;
    }
  }
  return true;
}

bool Functor::faithful() const {
  for (ObjectIndex a = 0; a < source_.object_count(); ++a) {
    for (ObjectIndex b = 0; b < source_.object_count(); ++b) {
      std::set<ArrowIndex> images;
      for (ArrowIndex f : source_.hom(a, b)) images.insert(arrows_[f]);
      if (images.size() != source_.hom(a, b).size()) return false;
    }
  }
  return true;
}

bool operator==(const Functor& a, const Functor& b) {
  return a.source() == b.source() && a.target() == b.target() && a.object_map() == b.object_map() &&
         a.arrow_map() == b.arrow_map();
}

Functor compose(const Functor& second, const Functor& first) {
  if (!identical(first.target(), second.source())) {
    throw Error(ErrorKind::kBaseMismatch, "functors are not composable");
  }
  std::vector<ObjectIndex> obj(first.source().object_count());
  std::vector<ArrowIndex> arr(first.source().arrow_count());
  for (ObjectIndex c = 0; c < obj.size(); ++c) obj[c] = second.on_object(first.on_object(c));
  for (ArrowIndex f = 0; f < arr.size(); ++f) arr[f] = second.on_arrow(first.on_arrow(f));
  return Functor(first.source(), second.target(), std::move(obj), std::move(arr));
}

// ----------------------------------------------------------- constructions

Category opposite(const Category& c) {
  CategoryTables t = c.tables();
  std::swap(t.dom, t.cod);
  const std::size_t n = c.arrow_count();
  for (ArrowIndex g = 0; g < n; ++g) {
    for (ArrowIndex f = 0; f < n; ++f) {
      t.table[g * n + f] = c.composable(f, g) ? static_cast<std::uint32_t>(c.compose(f, g))
                                              : detail::kNoArrow;
    }
  }
  return Category::from_tables(std::move(t));
}

std::optional<ObjectIndex> CommaCategory::find(ObjectIndex left, ObjectIndex right,
                                               ArrowIndex arrow) const {
  for (ObjectIndex k = 0; k < objects.size(); ++k) {
    const CommaObject& o = objects[k];
    if (o.left == left && o.right == right && o.arrow == arrow) return k;
  }
  return std::nullopt;
}

CommaCategory comma_category(const Functor& left, const Functor& right) {
  if (!identical(left.target(), right.target())) {
    throw Error(ErrorKind::kBaseMismatch, "comma category needs functors with a common target");
  }
  const Category& a = left.source();
  const Category& b = right.source();
  const Category& c = left.target();

  std::vector<CommaObject> objects;
  for (ObjectIndex x = 0; x < a.object_count(); ++x) {
    for (ObjectIndex y = 0; y < b.object_count(); ++y) {
      for (ArrowIndex h : c.hom(left.on_object(x), right.on_object(y))) objects.push_back({x, y, h});
    }
  }
  auto object_name = [&](const CommaObject& o) {
    return "(" + a.object_name(o.left) + "," + b.object_name(o.right) + "," + c.arrow_name(o.arrow) +
           ")";
  };

  struct ArrowRecord {
    ObjectIndex src, dst;
    ArrowIndex u, v;
  };
  std::vector<ArrowRecord> arrows;
  std::map<std::tuple<ObjectIndex, ObjectIndex, ArrowIndex, ArrowIndex>, ArrowIndex> lookup;
  for (ObjectIndex s = 0; s < objects.size(); ++s) {
    for (ObjectIndex d = 0; d < objects.size(); ++d) {
      const CommaObject& os = objects[s];
      const CommaObject& od = objects[d];
      for (ArrowIndex u : a.hom(os.left, od.left)) {
        for (ArrowIndex v : b.hom(os.right, od.right)) {
          if (c.compose(right.on_arrow(v), os.arrow) == c.compose(od.arrow, left.on_arrow(u))) {
            lookup[{s, d, u, v}] = arrows.size();
            arrows.push_back({s, d, u, v});
          }
        }
      }
    }
  }

  CategoryTables t;
  t.init(objects.size(), arrows.size());
  for (ObjectIndex k = 0; k < objects.size(); ++k) t.objects[k] = object_name(objects[k]);
  std::vector<ObjectIndex> proj_left_obj, proj_right_obj;
  std::vector<ArrowIndex> proj_left_arr, proj_right_arr;
  for (ArrowIndex k = 0; k < arrows.size(); ++k) {
    const ArrowRecord& r = arrows[k];
    t.arrows[k] = "(" + a.arrow_name(r.u) + "," + b.arrow_name(r.v) + "):" + t.objects[r.src] +
                  "->" + t.objects[r.dst];
    t.dom[k] = r.src;
    t.cod[k] = r.dst;
    proj_left_arr.push_back(r.u);
    proj_right_arr.push_back(r.v);
  }
  for (ObjectIndex k = 0; k < objects.size(); ++k) {
    const CommaObject& o = objects[k];
    t.identity[k] = lookup.at({k, k, a.identity(o.left), b.identity(o.right)});
    proj_left_obj.push_back(o.left);
    proj_right_obj.push_back(o.right);
  }
  for (ArrowIndex f = 0; f < arrows.size(); ++f) {
    for (ArrowIndex g = 0; g < arrows.size(); ++g) {
      if (arrows[f].dst != arrows[g].src) continue;
      const ArrowIndex u = a.compose(arrows[g].u, arrows[f].u);
      const ArrowIndex v = b.compose(arrows[g].v, arrows[f].v);
      t.set(g, f, lookup.at({arrows[f].src, arrows[g].dst, u, v}));
    }
  }
  Category category = Category::from_tables(std::move(t));
  Functor to_a(category, a, std::move(proj_left_obj), std::move(proj_left_arr));
  Functor to_b(category, b, std::move(proj_right_obj), std::move(proj_right_arr));
  return CommaCategory{std::move(category), std::move(to_a), std::move(to_b), std::move(objects)};
}

std::size_t connected_components(const Category& c) {
  UnionFind uf(c.object_count());
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) uf.unite(c.dom(f), c.cod(f));
  std::size_t count = 0;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) count += uf.find(x) == x ? 1 : 0;
  return count;
}

bool is_connected(const Category& c) { return connected_components(c) == 1; }

bool is_filtered(const Category& c) {
  const std::size_t n = c.object_count();
  if (n == 0) return false;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = a + 1; b < n; ++b) {
      bool cocone = false;
      for (ObjectIndex x = 0; x < n && !cocone; ++x) {
        cocone = !c.hom(a, x).empty() && !c.hom(b, x).empty();
      }
      if (!cocone) return false;
    }
  }
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b) {
      const auto& parallel = c.hom(a, b);
      for (std::size_t i = 0; i < parallel.size(); ++i) {
        for (std::size_t j = i + 1; j < parallel.size(); ++j) {
          bool coequalized = false;
          for (ArrowIndex w : c.arrows_from(b)) {
            if (c.compose(w, parallel[i]) == c.compose(w, parallel[j])) {
              coequalized = true;
              break;
            }
          }
          if (!coequalized) return false;
        }
      }
    }
  }
  return true;
}

Category terminal_category() { return discrete_category({"*"}); }

Category discrete_category(const std::vector<std::string>& objects) {
  CategoryTables t;
  t.init(objects.size(), objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    t.objects[i] = objects[i];
    t.arrows[i] = "id_" + objects[i];
    t.dom[i] = t.cod[i] = i;
    t.identity[i] = i;
    t.set(i, i, i);
  }
  return Category::from_tables(std::move(t));
}

Functor constant_functor(const Category& source, const Category& target, ObjectIndex object) {
  std::vector<ObjectIndex> obj(source.object_count(), object);
  std::vector<ArrowIndex> arr(source.arrow_count(), target.identity(object));
  return Functor(source, target, std::move(obj), std::move(arr));
}

Subcategory full_subcategory(const Category& c, const std::vector<ObjectIndex>& objects) {
  std::vector<ObjectIndex> position(c.object_count(), kMissing);
  for (std::size_t i = 0; i < objects.size(); ++i) position[objects[i]] = i;
  std::vector<ArrowIndex> kept;
  std::vector<ArrowIndex> arrow_position(c.arrow_count(), kMissing);
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    if (position[c.dom(f)] != kMissing && position[c.cod(f)] != kMissing) {
      arrow_position[f] = kept.size();
      kept.push_back(f);
    }
  }
  CategoryTables t;
  t.init(objects.size(), kept.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    t.objects[i] = c.object_name(objects[i]);
    t.identity[i] = arrow_position[c.identity(objects[i])];
  }
  for (std::size_t k = 0; k < kept.size(); ++k) {
    t.arrows[k] = c.arrow_name(kept[k]);
    t.dom[k] = position[c.dom(kept[k])];
    t.cod[k] = position[c.cod(kept[k])];
  }
  for (std::size_t f = 0; f < kept.size(); ++f) {
    for (std::size_t g = 0; g < kept.size(); ++g) {
      if (c.composable(kept[g], kept[f])) t.set(g, f, arrow_position[c.compose(kept[g], kept[f])]);
    }
  }
  Category sub = Category::from_tables(std::move(t));
  Functor inclusion(sub, c, objects, kept);
  return Subcategory{std::move(sub), std::move(inclusion)};
}

Category product_category(const Category& left, const Category& right) {
  const std::size_t n_obj = left.object_count() * right.object_count();
  const std::size_t n_arr = left.arrow_count() * right.arrow_count();
  CategoryTables t;
  t.init(n_obj, n_arr);
  auto obj = [&](ObjectIndex a, ObjectIndex b) { return a * right.object_count() + b; };
  auto arr = [&](ArrowIndex f, ArrowIndex g) { return f * right.arrow_count() + g; };
  for (ObjectIndex a = 0; a < left.object_count(); ++a) {
    for (ObjectIndex b = 0; b < right.object_count(); ++b) {
      t.objects[obj(a, b)] = "(" + left.object_name(a) + "," + right.object_name(b) + ")";
      t.identity[obj(a, b)] = arr(left.identity(a), right.identity(b));
    }
  }
  for (ArrowIndex f = 0; f < left.arrow_count(); ++f) {
    for (ArrowIndex g = 0; g < right.arrow_count(); ++g) {
      t.arrows[arr(f, g)] = "(" + left.arrow_name(f) + "," + right.arrow_name(g) + ")";
      t.dom[arr(f, g)] = obj(left.dom(f), right.dom(g));
      t.cod[arr(f, g)] = obj(left.cod(f), right.cod(g));
    }
  }
  for (ArrowIndex f1 = 0; f1 < left.arrow_count(); ++f1) {
    for (ArrowIndex f2 : left.arrows_from(left.cod(f1))) {
      for (ArrowIndex g1 = 0; g1 < right.arrow_count(); ++g1) {
        for (ArrowIndex g2 : right.arrows_from(right.cod(g1))) {
          t.set(arr(f2, g2), arr(f1, g1), arr(left.compose(f2, f1), right.compose(g2, g1)));
        }
      }
    }
  }
  return Category::from_tables(std::move(t));
}

Category adjoin_terminal(const Category& c, const std::string& name) {
  const std::size_t n_obj = c.object_count();
  const std::size_t n_arr = c.arrow_count();
  CategoryTables t;
  t.init(n_obj + 1, n_arr + n_obj + 1);
  const ObjectIndex top = n_obj;
  const ArrowIndex top_id = n_arr + n_obj;
  for (ObjectIndex x = 0; x < n_obj; ++x) {
    t.objects[x] = c.object_name(x);
    t.identity[x] = c.identity(x);
  }
  t.objects[top] = name;
  t.identity[top] = top_id;
  for (ArrowIndex f = 0; f < n_arr; ++f) {
    t.arrows[f] = c.arrow_name(f);
    t.dom[f] = c.dom(f);
    t.cod[f] = c.cod(f);
    for (ArrowIndex g : c.arrows_from(c.cod(f))) t.set(g, f, c.compose(g, f));
  }
  auto bang = [&](ObjectIndex x) { return x == top ? top_id : n_arr + x; };
  for (ObjectIndex x = 0; x < n_obj; ++x) {
    t.arrows[n_arr + x] = "!" + c.object_name(x);
    t.dom[n_arr + x] = x;
    t.cod[n_arr + x] = top;
  }
  t.arrows[top_id] = "id_" + name;
  t.dom[top_id] = t.cod[top_id] = top;
  for (ObjectIndex x = 0; x <= n_obj; ++x) t.set(top_id, bang(x), bang(x));
  for (ArrowIndex f = 0; f < n_arr; ++f) t.set(bang(c.cod(f)), f, bang(c.dom(f)));
  return Category::from_tables(std::move(t));
}

}  // namespace fincat
