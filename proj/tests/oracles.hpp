#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls the library's algorithms; inputs are read through the plain
// accessors of Category and SetFunctor.

#include <cstddef>
#include <vector>

#include "fincat/colimit.hpp"
#include "fincat/sites.hpp"

namespace oracle {

using fincat::Category;
using fincat::QuotientSet;
using fincat::SetFunctor;

/// labels[i][x]: a class label for member (i, x); equal labels = same class.
using Labels = std::vector<std::vector<std::size_t>>;

/// Colimit classes by repeated min-label propagation to a fixpoint.
Labels colimit_labels(const SetFunctor& h);

/// The quotient and the labels describe the same partition.
bool same_partition(const QuotientSet& q, const Labels& labels);

/// Checks the universal property against every cocone into a two-element
/// set: each cocone factors through q (it is constant on classes) and any
/// two distinct classes are separated by some cocone.
bool colimit_universal(const SetFunctor& h, const QuotientSet& q);

/// Compatible families by enumerating the whole product.
std::size_t limit_count(const SetFunctor& h);

/// Tensor classes over the carrier (c, x, y) at index x * |P(c)| + y.
Labels tensor_labels(const SetFunctor& presheaf, const SetFunctor& functor);

/// Filteredness straight from the three conditions.
bool filtered(const Category& c);

/// Flatness of a presheaf straight from the three filtering conditions.
bool flat(const SetFunctor& presheaf);

/// Connected components by depth-first search.
std::size_t components(const Category& c);

/// |Nat(F, G)| by enumerating every family of functions.
std::size_t count_nat(const SetFunctor& f, const SetFunctor& g);

/// Isomorphic as functors: searches per-object bijections, then checks
/// naturality. Both functors must have index-aligned bases.
bool isomorphic(const SetFunctor& f, const SetFunctor& g);

/// All precomposition-closed subsets of arrows into c, by brute force.
std::size_t sieve_count(const Category& c, std::size_t object);

/// Sheaf condition by enumerating every assignment on each covering sieve.
bool sheaf(const SetFunctor& presheaf, const fincat::Topology& j);

/// All set functors on `base` with value sets of size <= max_size, up to
/// naming (elements "0", "1", ...); exhaustive.
std::vector<SetFunctor> all_set_functors(const Category& base, std::size_t max_size);

}  // namespace oracle
