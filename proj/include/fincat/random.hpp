#pragma once

// Seeded generators for property tests and the CLI self-test suites.
// Every generator is a pure function of the Rng state.

#include <cstdint>
#include <random>
#include <vector>

#include "fincat/adjoint.hpp"
#include "fincat/category.hpp"
#include "fincat/set_functor.hpp"

namespace fincat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), engine_);
  }

 private:
  std::mt19937_64 engine_;
};

struct CategoryShape {
  std::size_t max_objects = 4;
  std::size_t max_arrows = 8;  // identities included
};

/// A random finite category: a random graph closed under the arrows
/// composition needs, then a random associative composition table found by
/// backtracking. Objects "o0", "o1", ...; identities "id_o<i>"; other
/// arrows "m0", "m1", ... .
Category random_category(Rng& rng, CategoryShape shape = {});

/// A random filtered category within the shape: rejection sampling, then
/// a terminal object adjoined to a smaller random category as fallback.
Category random_filtered_category(Rng& rng, CategoryShape shape = {});

/// A random covariant functor base -> FinSet with |F(c)| in
/// [min_size, max_size]; elements "0", "1", ... .
SetFunctor random_set_functor(Rng& rng, const Category& base, std::size_t max_size,
                              std::size_t min_size = 0);

/// A random presheaf on c (a SetFunctor on opposite(c)).
SetFunctor random_presheaf(Rng& rng, const Category& c, std::size_t max_size,
                           std::size_t min_size = 0);

/// A random flat presheaf on c: either a random presheaf that passes the
/// filtering conditions, or the retract of a representable Hom(-, x)
/// cut out by a random idempotent on x.
SetFunctor random_flat_presheaf(Rng& rng, const Category& c, std::size_t max_size);

/// A uniformly chosen functor source -> target (by full enumeration).
Functor random_functor(Rng& rng, const Category& source, const Category& target);

/// P: c -> presheaves on d, curried from a random functor on c x d^op.
Profunctor random_profunctor(Rng& rng, const Category& c, const Category& d, std::size_t max_size);

}  // namespace fincat
