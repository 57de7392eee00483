#pragma once

// Idempotent splitting and brute-force equivalence of finite categories.

#include <optional>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

struct Idempotent {
  ObjectIndex object = 0;
  ArrowIndex arrow = 0;
  bool is_identity = false;
};

/// Every e with dom e = cod e and e∘e = e, by object then arrow index.
std::vector<Idempotent> idempotents(const Category& c);

struct KaroubiEnvelope {
  Category category;
  Functor embedding;  // c |-> (c, id_c)
  std::vector<Idempotent> objects;
};

/// Objects "(c,e)", one per idempotent. Arrows (c,e) -> (d,e') are the
/// f: c -> d with e'∘f = f = f∘e, named "f:(c,e)->(d,e')"; the identity
/// of (c,e) is e.
KaroubiEnvelope karoubi_envelope(const Category& c);

struct Splitting {
  ObjectIndex object = 0;  // d
  ArrowIndex section = 0;  // s: d -> c
  ArrowIndex retraction = 0;  // r: c -> d
};

/// s, r with s∘r = e and r∘s = id_d, if any.
std::optional<Splitting> split(const Category& c, ArrowIndex e);

bool is_cauchy_complete(const Category& c);

/// f: a -> b invertible? Returns the inverse.
std::optional<ArrowIndex> inverse(const Category& c, ArrowIndex f);

struct Equivalence {
  Functor forward;   // C -> D
  Functor backward;  // D -> C
  std::vector<ArrowIndex> unit;    // per c: c -> backward(forward(c)), invertible
  std::vector<ArrowIndex> counit;  // per d: forward(backward(d)) -> d, invertible
};

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Equivalence> witness;
  std::uint64_t functors_examined = 0;
};

/// Enumerates functors C -> D until one is full, faithful and essentially
/// surjective, then builds a quasi-inverse with unit and counit and
/// verifies naturality and invertibility (SelfTestFailure otherwise).
/// SearchBudgetExceeded carries the explored fraction.
EquivalenceResult equivalent_categories(const Category& c, const Category& d,
                                        std::uint64_t budget = 10'000'000);

/// Components from(c) -> to(c), natural and each invertible. The two
/// functors must share source and target.
bool is_natural_isomorphism(const Functor& from, const Functor& to, const std::vector<ArrowIndex>& components);

}  // namespace fincat
