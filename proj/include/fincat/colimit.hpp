#pragma once

// Colimits and limits of finite-set-valued diagrams.
//
// A colimit is returned as a QuotientSet: the tagged disjoint union of the
// value sets, partitioned into classes. Members are ordered by
// (part position, element position); each class is listed in that order,
// so its first member is the canonical representative, and classes are
// numbered by increasing representative. Two QuotientSets over the same
// carrier describe the same partition iff their injection tables agree.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fincat/set_functor.hpp"

namespace fincat {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

struct Member {
  std::size_t part;
  std::size_t element;
  friend bool operator==(const Member&, const Member&) = default;
  friend auto operator<=>(const Member&, const Member&) = default;
};

class QuotientSet {
 public:
  QuotientSet() = default;

  /// `label[i][x]` is an arbitrary class label for member (i, x); equal
  /// labels mean the same class. The result is canonical.
  QuotientSet(std::vector<std::string> parts, std::vector<std::vector<std::string>> elements,
              const std::vector<std::vector<std::size_t>>& label);

  std::size_t size() const { return classes_.size(); }
  std::size_t carrier_size() const;
  std::size_t part_count() const { return parts_.size(); }
  const std::string& part_name(std::size_t i) const { return parts_[i]; }
  std::size_t part_size(std::size_t i) const { return elements_[i].size(); }
  const std::string& element_name(std::size_t i, std::size_t x) const { return elements_[i][x]; }

  /// κ_i(x).
  std::size_t class_of(std::size_t part, std::size_t element) const {
    return injection_[part][element];
  }
  const std::vector<std::vector<std::size_t>>& injections() const { return injection_; }
  const std::vector<Member>& members(std::size_t k) const { return classes_[k]; }
  const std::vector<std::vector<Member>>& classes() const { return classes_; }
  Member representative(std::size_t k) const { return classes_[k].front(); }

  /// "(part,element)" for the representative of class k.
  std::string class_name(std::size_t k) const;

 private:
  std::vector<std::string> parts_;
  std::vector<std::vector<std::string>> elements_;
  std::vector<std::vector<std::size_t>> injection_;
  std::vector<std::vector<Member>> classes_;
};

/// Same carrier shape and the same partition.
bool same_partition(const QuotientSet& a, const QuotientSet& b);

/// Quotient of the carrier of `h` (parts = base objects) by the equivalence
/// closure of (i, x) ~ (j, H(u)(x)) over all arrows u: i -> j.
QuotientSet colimit(const SetFunctor& h);

/// A symmetric, reflexive relation on a flattened carrier.
class PairRelation {
 public:
  explicit PairRelation(std::size_t n) : n_(n), bits_(n * n, false) {}
  std::size_t size() const { return n_; }
  void relate(std::size_t a, std::size_t b) { bits_[a * n_ + b] = bits_[b * n_ + a] = true; }
  bool related(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }

  /// A triple (a, b, c) with a~b, b~c and not a~c, if any.
  std::optional<std::array<std::size_t, 3>> transitivity_violation() const;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

/// The single-cocone relation of a diagram: (i, x) ~ (j, y) iff some
/// u: i -> k, v: j -> k have H(u)(x) == H(v)(y). Carrier is flattened in
/// (object, element) order.
PairRelation cocone_relation(const SetFunctor& h);

/// Partition of a carrier by a relation that must already be an
/// equivalence; throws RelationNotTransitive with the witnessing triple.
QuotientSet partition_by(std::vector<std::string> parts,
                         std::vector<std::vector<std::string>> elements,
                         const PairRelation& relation);

/// Filtered-colimit fast path: classes come from cocone_relation alone,
/// with no closure step. NotFiltered unless base(h) is filtered.
QuotientSet colimit_filtered(const SetFunctor& h);

/// Compatible families (x_i) with H(u)(x_i) = x_j for every u: i -> j, in
/// lexicographic order. The projection to i reads families[k][i].
struct LimitSet {
  std::vector<std::vector<std::size_t>> families;
  std::size_t size() const { return families.size(); }
  /// "{i:x,...}" in object order.
  std::string family_name(const SetFunctor& h, std::size_t k) const;
};

LimitSet limit(const SetFunctor& h, std::uint64_t budget = kDefaultBudget);

/// F ⊗ P for a presheaf F on C (F.base() == opposite(C)) and a covariant
/// P on C. Parts are the objects of C; the element (x, y) of part c stands
/// for x in F(c), y in P(c) at index x * |P(c)| + y and renders "(x,y)".
/// Relation: (c, F(f)(x'), y) ~ (c', x', P(f)(y)) for f: c -> c'.
QuotientSet tensor(const SetFunctor& presheaf, const SetFunctor& functor);

struct TensorComparison {
  QuotientSet tensor;
  QuotientSet over_functor_elements;  // colim of F over the elements of P
  QuotientSet over_presheaf_elements; // colim of P over the elements of F
  /// class of each colimit, in the tensor's numbering
  std::vector<std::size_t> functor_side_to_tensor;
  std::vector<std::size_t> presheaf_side_to_tensor;
};

/// Computes both colimit descriptions and the tensor product, transports
/// them to the common carrier {(c, x, y)} and checks the three partitions
/// coincide. Throws CommutationFailure otherwise.
TensorComparison tensor_commute_check(const SetFunctor& presheaf, const SetFunctor& functor);

}  // namespace fincat
