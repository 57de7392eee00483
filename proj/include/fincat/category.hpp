#pragma once

// Finite categories given by explicit tables, and functors between them.
//
// Composition is always written in diagram order "g after f":
// compose(g, f) is defined exactly when cod(f) == dom(g), and then
// dom(compose(g, f)) == dom(f) and cod(compose(g, f)) == cod(g).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fincat/error.hpp"

namespace fincat {

using ObjectIndex = std::size_t;
using ArrowIndex = std::size_t;

/// Largest accepted arrow count; associativity checking is cubic.
inline constexpr std::size_t kMaxArrows = 5000;

struct RawArrow {
  std::string id;
  std::string dom;
  std::string cod;
};

struct RawComposite {
  std::string g;
  std::string f;
  std::string gf;
};

/// An unvalidated category description, shaped like the JSON format.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawArrow> arrows;
  std::map<std::string, std::string> identity;
  std::vector<RawComposite> compose;

  /// Adds the entries id∘f = f and f∘id = f for every arrow f whose
  /// domain and codomain identities are known, unless already present.
  /// The JSON loader calls this; validate_category itself never infers.
  RawCategory& add_unit_laws();
};

namespace detail {

inline constexpr std::uint32_t kNoArrow = 0xffffffffu;

struct CategoryData {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<ObjectIndex> dom;
  std::vector<ObjectIndex> cod;
  std::vector<ArrowIndex> identity;
  std::vector<bool> is_identity;
  // table[g * arrows + f] = g∘f, or kNoArrow when not composable
  std::vector<std::uint32_t> table;
  // hom[a * objects + b] = arrows a -> b, in arrow order
  std::vector<std::vector<ArrowIndex>> hom;
  std::vector<std::vector<ArrowIndex>> from;
  std::vector<std::vector<ArrowIndex>> into;
  std::unordered_map<std::string, ObjectIndex> object_index;
  std::unordered_map<std::string, ArrowIndex> arrow_index;
};

}  // namespace detail

/// Index-level tables for a category; `table` uses detail::kNoArrow for
/// missing entries. Consumed by Category::from_tables.
struct CategoryTables {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<ObjectIndex> dom;
  std::vector<ObjectIndex> cod;
  std::vector<ArrowIndex> identity;
  std::vector<std::uint32_t> table;

  void init(std::size_t object_count, std::size_t arrow_count);
  void set(ArrowIndex g, ArrowIndex f, ArrowIndex gf) {
    table[g * arrows.size() + f] = static_cast<std::uint32_t>(gf);
  }
};

/// A validated finite category. Immutable; copies share storage.
class Category {
 public:
  /// The empty category.
  Category();

  /// Validates the tables (identities, completeness of composition, unit
  /// laws, associativity) and throws Error on the first violation.
  static Category from_tables(CategoryTables tables);

  std::size_t object_count() const { return d_->objects.size(); }
  std::size_t arrow_count() const { return d_->arrows.size(); }
  bool empty() const { return d_->objects.empty(); }

  const std::string& object_name(ObjectIndex c) const { return d_->objects[c]; }
  const std::string& arrow_name(ArrowIndex f) const { return d_->arrows[f]; }
  const std::vector<std::string>& object_names() const { return d_->objects; }
  const std::vector<std::string>& arrow_names() const { return d_->arrows; }

  std::optional<ObjectIndex> find_object(std::string_view name) const;
  std::optional<ArrowIndex> find_arrow(std::string_view name) const;
  /// Throws UnknownObject / UnknownArrow.
  ObjectIndex object(std::string_view name) const;
  ArrowIndex arrow(std::string_view name) const;

  ObjectIndex dom(ArrowIndex f) const { return d_->dom[f]; }
  ObjectIndex cod(ArrowIndex f) const { return d_->cod[f]; }
  ArrowIndex identity(ObjectIndex c) const { return d_->identity[c]; }
  bool is_identity(ArrowIndex f) const { return d_->is_identity[f]; }

  /// g∘f; requires cod(f) == dom(g).
  ArrowIndex compose(ArrowIndex g, ArrowIndex f) const {
    return d_->table[g * d_->arrows.size() + f];
  }
  bool composable(ArrowIndex g, ArrowIndex f) const { return d_->cod[f] == d_->dom[g]; }

  const std::vector<ArrowIndex>& hom(ObjectIndex a, ObjectIndex b) const {
    return d_->hom[a * d_->objects.size() + b];
  }
  const std::vector<ArrowIndex>& arrows_from(ObjectIndex a) const { return d_->from[a]; }
  const std::vector<ArrowIndex>& arrows_into(ObjectIndex b) const { return d_->into[b]; }

  CategoryTables tables() const;
  RawCategory to_raw() const;

  /// True when both handles share storage (cheap identity test).
  bool same_storage(const Category& other) const { return d_ == other.d_; }

 private:
  explicit Category(std::shared_ptr<const detail::CategoryData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::CategoryData> d_;
};

/// Equality means identical identifier sets and identical tables;
/// object and arrow order is irrelevant.
bool operator==(const Category& a, const Category& b);

/// Equal with the same object and arrow order, so index-based data (set
/// functors, functor maps) transfers between the two unchanged.
bool identical(const Category& a, const Category& b);

/// Resolves identifiers and validates. Errors: DuplicateId, UnknownObject,
/// UnknownArrow, MissingIdentity, DomCodMismatch, ConflictingComposition,
/// IncompleteComposition, UnitLawViolation, NonAssociative, TooLarge.
Category validate_category(const RawCategory& raw);

/// A functor between finite categories, stored as index maps.
class Functor {
 public:
  /// Checks dom/cod preservation, identities and composition
  /// (FunctorViolation).
  Functor(Category source, Category target, std::vector<ObjectIndex> on_objects,
          std::vector<ArrowIndex> on_arrows);

  /// Builds from identifier maps; identity arrows may be omitted and are
  /// sent to the identity of the image object.
  static Functor from_names(Category source, Category target,
                            const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& arrows);

  static Functor identity(const Category& c);

  const Category& source() const { return source_; }
  const Category& target() const { return target_; }
  ObjectIndex on_object(ObjectIndex c) const { return objects_[c]; }
  ArrowIndex on_arrow(ArrowIndex f) const { return arrows_[f]; }
  const std::vector<ObjectIndex>& object_map() const { return objects_; }
  const std::vector<ArrowIndex>& arrow_map() const { return arrows_; }

  /// The same maps viewed between the opposite categories.
  Functor opposite() const;

  bool injective_on_objects() const;
  bool injective_on_arrows() const;
  bool full() const;
  bool faithful() const;

 private:
  struct Unchecked {};
  Functor(Unchecked, Category source, Category target, std::vector<ObjectIndex> on_objects,
          std::vector<ArrowIndex> on_arrows);
  friend class FunctorSearch;

  Category source_;
  Category target_;
  std::vector<ObjectIndex> objects_;
  std::vector<ArrowIndex> arrows_;
};

bool operator==(const Functor& a, const Functor& b);

/// second∘first.
Functor compose(const Functor& second, const Functor& first);

/// Same objects and arrow ids, dom/cod swapped, compose reversed.
/// opposite(opposite(C)) == C exactly.
Category opposite(const Category& c);

struct CommaObject {
  ObjectIndex left;   // object of the left functor's source
  ObjectIndex right;  // object of the right functor's source
  ArrowIndex arrow;   // left(a) -> right(b) in the shared target
};

struct CommaCategory {
  Category category;
  Functor left_projection;
  Functor right_projection;
  std::vector<CommaObject> objects;

  std::optional<ObjectIndex> find(ObjectIndex left, ObjectIndex right, ArrowIndex arrow) const;
};

/// (F ↓ G) for F: A -> C and G: B -> C. Objects are triples (a, b, h) with
/// h: F a -> G b; arrows (u, v) with G(v)∘h = h'∘F(u). Object ids render
/// as "(a,b,h)" and arrow ids as "(u,v):(a,b,h)->(a',b',h')".
CommaCategory comma_category(const Functor& left, const Functor& right);

/// Nonempty and connected as an undirected graph. The empty category is
/// not connected.
bool is_connected(const Category& c);

/// Number of connected components (0 for the empty category).
std::size_t connected_components(const Category& c);

/// Nonempty; every pair of objects has a cocone a -> c <- b; every
/// parallel pair u, v: a -> b has some w: b -> c with w∘u == w∘v.
bool is_filtered(const Category& c);

/// The category with one object "*" and its identity "id_*".
Category terminal_category();

Category discrete_category(const std::vector<std::string>& objects);

/// Functor from `source` sending everything to `object` and its identity.
Functor constant_functor(const Category& source, const Category& target, ObjectIndex object);

struct Subcategory {
  Category category;
  Functor inclusion;
};

/// Full subcategory on the given objects (kept in the order given).
Subcategory full_subcategory(const Category& c, const std::vector<ObjectIndex>& objects);

/// Product category; object ids "(c,d)", arrow ids "(f,g)".
Category product_category(const Category& left, const Category& right);

/// Adds a terminal object `name` with a single arrow "!<c>" from each
/// existing object.
Category adjoin_terminal(const Category& c, const std::string& name = "top");

/// Backtracking enumeration of all functors source -> target.
/// `visit` returns false to stop early. Throws SearchBudgetExceeded when
/// more than `budget` search nodes would be expanded; the error detail
/// carries the explored fraction of object maps.
class FunctorSearch {
 public:
  struct Stats {
    std::uint64_t nodes = 0;
    std::uint64_t object_maps_done = 0;
    double object_maps_total = 0;
    bool stopped = false;
  };

  FunctorSearch(Category source, Category target, std::uint64_t budget = 10'000'000);

  /// Called after object c is mapped (obj[0..c] set); false prunes every
  /// object map extending the current prefix.
  using ObjectFilter = std::function<bool(ObjectIndex c, const std::vector<ObjectIndex>& obj)>;
  void set_object_filter(ObjectFilter filter);

  Stats run(const std::function<bool(const Functor&)>& visit);

 private:
  Category source_;
  Category target_;
  std::uint64_t budget_;
  ObjectFilter object_filter_;
};

std::vector<Functor> enumerate_functors(const Category& source, const Category& target,
                                        std::uint64_t budget = 10'000'000);

}  // namespace fincat
