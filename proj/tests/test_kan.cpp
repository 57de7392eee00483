#include <catch_amalgamated.hpp>

#include "fincat/fixtures.hpp"
#include "fincat/flatness.hpp"
#include "fincat/kan.hpp"
#include "fincat/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fincat;
using support::error_kind;

namespace {

const std::vector<std::string> kS = {"s0", "s1", "s2"};

bool injective(const std::vector<std::size_t>& m) {
  std::vector<bool> seen;
  for (std::size_t y : m) {
    if (y >= seen.size()) seen.resize(y + 1, false);
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Subcategory random_full_subcategory(Rng& rng, const Category& c) {
  std::vector<ObjectIndex> keep;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (rng.chance(0.6)) keep.push_back(x);
  }
  if (keep.empty()) keep.push_back(rng.below(c.object_count()));
  return full_subcategory(c, keep);
}

}  // namespace

TEST_CASE("lan along the identity is the functor") {
  Rng rng(51);
  for (const auto& [name, c] : fixtures::all()) {
    const SetFunctor f = random_set_functor(rng, c, 3);
    const SetFunctor l = lan(Functor::identity(c), f).functor;
    CHECK(find_isomorphism(l, f).has_value());
  }
}

TEST_CASE("lan along the two points of ARROW2") {
  const Category term = fixtures::term();
  const Category a2 = fixtures::arrow2();
  const SetFunctor f = SetFunctor::constant(term, kS);
  const ObjectIndex a = a2.object("a");
  const ObjectIndex b = a2.object("b");

  const LeftKanExtension la = lan(constant_functor(term, a2, a), f);
  CHECK(la.functor.size(a) == 3);
  CHECK(la.functor.size(b) == 3);
  CHECK(injective(la.functor.map(a2.arrow("f"))));

  const LeftKanExtension lb = lan(constant_functor(term, a2, b), f);
  CHECK(lb.functor.size(a) == 0);
  CHECK(lb.index[a].category.empty());
  CHECK(lb.functor.size(b) == 3);
}

TEST_CASE("ran along the identity is the functor") {
  Rng rng(52);
  for (const auto& [name, c] : fixtures::all()) {
    const SetFunctor f = random_set_functor(rng, c, 3);
    CHECK(find_isomorphism(ran(Functor::identity(c), f).functor, f).has_value());
  }
}

TEST_CASE("ran along the two points of ARROW2") {
  // Values follow the limit over (c ↓ f): objects of (c ↓ const_x) are the
  // arrows c -> x.
  const Category term = fixtures::term();
  const Category a2 = fixtures::arrow2();
  const SetFunctor f = SetFunctor::constant(term, kS);
  const ObjectIndex a = a2.object("a");
  const ObjectIndex b = a2.object("b");

  const RightKanExtension ra = ran(constant_functor(term, a2, a), f);
  CHECK(ra.functor.size(a) == 3);
  CHECK(ra.index[b].category.empty());
  CHECK(ra.functor.size(b) == 1);

  const RightKanExtension rb = ran(constant_functor(term, a2, b), f);
  CHECK(rb.functor.size(a) == 3);
  CHECK(rb.functor.size(b) == 3);
  CHECK(injective(rb.functor.map(a2.arrow("f"))));
}

TEST_CASE("Kan extensions are adjoint to restriction, by counting", "[property]") {
  Rng rng(53);
  for (int k = 0; k < 60; ++k) {
    INFO("case " << k);
    const Category d = random_category(rng, {3, 5});
    const Category c = random_category(rng, {3, 5});
    const Functor f = random_functor(rng, d, c);
    const SetFunctor fd = random_set_functor(rng, d, 2);
    const SetFunctor gc = random_set_functor(rng, c, 2);
    const SetFunctor restricted = gc.restrict(f);
    CHECK(nat_transformations(lan(f, fd).functor, gc).size() == oracle::count_nat(fd, restricted));
    CHECK(nat_transformations(gc, ran(f, fd).functor).size() == oracle::count_nat(restricted, fd));
  }
}

TEST_CASE("flat_extend of a representable is representable") {
  for (const auto& [name, c] : fixtures::all()) {
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      const Subcategory s = full_subcategory(c, {x});
      INFO(name << " at " << c.object_name(x));
      const NatTransformation iso = extension_of_representable(s.inclusion, 0);
      CHECK(iso.pointwise_bijective());
      CHECK(iso.target() == yoneda(c, x));
    }
    const Functor id = Functor::identity(c);
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      CHECK(extension_of_representable(id, x).pointwise_bijective());
    }
  }
}

TEST_CASE("flat_extend along the identity and along a point") {
  Rng rng(54);
  for (const auto& [name, c] : fixtures::all()) {
    const SetFunctor f = random_presheaf(rng, c, 3);
    const FlatExtension e = flat_extend(Functor::identity(c), f);
    CHECK(find_isomorphism(e.extension, f).has_value());
  }
  const Category term = fixtures::term();
  const Category a2 = fixtures::arrow2();
  const Functor j = constant_functor(term, a2, a2.object("a"));
  const FlatExtension e = flat_extend(j, SetFunctor::constant(opposite(term), kS));
  CHECK(e.extension.size(a2.object("a")) == 3);
  CHECK(e.extension.size(a2.object("b")) == 0);
  CHECK(e.index[a2.object("b")].empty());
  CHECK(injective(e.chi[0]));
}

TEST_CASE("flat_extend preconditions") {
  const Category a2 = fixtures::arrow2();
  const Functor collapse = constant_functor(a2, fixtures::term(), 0);
  CHECK(error_kind([&] { flat_extend(collapse, yoneda(a2, 0)); }) == ErrorKind::kNotAnEmbedding);
  // f, g: a -> b sent to the single f of ARROW2: not injective on arrows
  const Functor squash = Functor::from_names(fixtures::pair(), a2, {{"a", "a"}, {"b", "b"}}, {{"f", "f"}, {"g", "f"}});
  CHECK(error_kind([&] { require_embedding(squash); }) == ErrorKind::kNotAnEmbedding);
  // DISCRETE2 into ARROW2 is injective but not full
  const Functor notfull = Functor::from_names(fixtures::discrete2(), a2, {{"a", "a"}, {"b", "b"}}, {});
  CHECK(error_kind([&] { require_embedding(notfull); }) == ErrorKind::kNotAnEmbedding);

  const Category pair = fixtures::pair();
  const SetFunctor bad = support::presheaf(pair, {{"a", {"p"}}, {"b", {"*"}}}, {{"f", {{"*", "p"}}}, {"g", {{"*", "p"}}}});
  CHECK(error_kind([&] { flat_extend_quotient(Functor::identity(pair), bad, 0); }) ==
        ErrorKind::kFlatnessRequired);
}

TEST_CASE("flat_extend_quotient on representables counts arrows") {
  for (const auto& [name, c] : fixtures::all()) {
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      const Subcategory s = full_subcategory(c, {x});
      const SetFunctor y = yoneda(s.category, 0);
      for (ObjectIndex t = 0; t < c.object_count(); ++t) {
        INFO(name << " " << x << " " << t);
        CHECK(flat_extend_quotient(s.inclusion, y, t).size() == c.hom(t, x).size());
      }
    }
  }
}

TEST_CASE("flat extension properties", "[property]") {
  Rng rng(55);
  for (int k = 0; k < 100; ++k) {
    INFO("case " << k);
    const Category c = random_category(rng, {4, 8});
    const Subcategory s = random_full_subcategory(rng, c);
    const SetFunctor f = random_flat_presheaf(rng, s.category, 3);
    REQUIRE(is_flat(f).flat);
    const FlatExtension e = flat_extend(s.inclusion, f);
    CHECK(is_flat(e.extension).flat);
    CHECK(oracle::flat(e.extension));
    for (ObjectIndex d = 0; d < s.category.object_count(); ++d) CHECK(injective(e.chi[d]));
    for (ObjectIndex t = 0; t < c.object_count(); ++t) {
      CHECK(same_partition(flat_extend_quotient(s.inclusion, f, t), e.values[t]));
    }
    // the same extension computed as a left Kan extension of the dual
    const SetFunctor l = lan(s.inclusion.opposite(), f).functor;
    CHECK(find_isomorphism(l, e.extension).has_value());
  }
}
