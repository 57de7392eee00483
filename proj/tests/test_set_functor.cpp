#include <catch_amalgamated.hpp>

#include "fincat/fixtures.hpp"
#include "fincat/random.hpp"
#include "fincat/set_functor.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fincat;
using support::error_kind;

TEST_CASE("elements of Hom(-, b) on ARROW2") {
  const Category a2 = fixtures::arrow2();
  const Elements e = elements_presheaf(yoneda(a2, a2.object("b")));
  REQUIRE(e.category.object_count() == 2);
  CHECK(e.category.arrow_count() == 3);
  CHECK(e.category.find_object("(a,f)"));
  CHECK(e.category.find_object("(b,id_b)"));
  CHECK(e.category.hom(e.category.object("(a,f)"), e.category.object("(b,id_b)")).size() == 1);
}

TEST_CASE("elements of the empty presheaf on TERM is empty") {
  const SetFunctor empty = SetFunctor::constant(opposite(fixtures::term()), {});
  CHECK(elements_presheaf(empty).category.empty());
}

TEST_CASE("(c, id_c) is terminal in the elements of Hom(-, c)") {
  for (const Category& c : {fixtures::arrow2(), fixtures::pair(), fixtures::span(), fixtures::cospan(),
                            fixtures::idem()}) {
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      const Elements e = elements_presheaf(yoneda(c, x));
      const ObjectIndex top = e.at(x, *yoneda(c, x).find_element(x, c.arrow_name(c.identity(x))));
      for (ObjectIndex o = 0; o < e.category.object_count(); ++o) {
        CHECK(e.category.hom(o, top).size() == 1);
      }
    }
  }
}

TEST_CASE("elements of covariant functors") {
  const Category a2 = fixtures::arrow2();
  SECTION("constant singleton reproduces the base") {
    const Elements e = elements_covariant(SetFunctor::constant(a2, {"*"}));
    CHECK(e.category.object_count() == a2.object_count());
    CHECK(e.category.arrow_count() == a2.arrow_count());
  }
  SECTION("two points over a collapsing onto one over b") {
    const SetFunctor p = support::functor(a2, {{"a", {"0", "1"}}, {"b", {"*"}}}, {{"f", {{"0", "*"}, {"1", "*"}}}});
    const Elements e = elements_covariant(p);
    CHECK(e.category.object_count() == 3);
    CHECK(e.category.arrow_count() == 5);
    const ObjectIndex top = e.category.object("(b,*)");
    CHECK(e.category.hom(e.category.object("(a,0)"), top).size() == 1);
    CHECK(e.category.hom(e.category.object("(a,1)"), top).size() == 1);
  }
  SECTION("empty values contribute nothing") {
    const SetFunctor p = support::functor(a2, {{"a", {}}, {"b", {"u"}}}, {});
    CHECK(elements_covariant(p).category.object_count() == 1);
  }
}

TEST_CASE("discrete opfibrations") {
  SECTION("constant singleton") {
    const Category a2 = fixtures::arrow2();
    const DiscreteOpfibration d = discrete_opfibration(SetFunctor::constant(a2, {"*"}));
    CHECK(d.total.object_count() == 2);
    CHECK(d.total.arrow_count() == 3);
  }
  SECTION("two points on TERM give a discrete category") {
    const DiscreteOpfibration d = discrete_opfibration(SetFunctor::constant(fixtures::term(), {"0", "1"}));
    CHECK(d.total.object_count() == 2);
    CHECK(d.total.arrow_count() == 2);
    CHECK(connected_components(d.total) == 2);
  }
  SECTION("ARROW2 with both points sent to u") {
    const Category a2 = fixtures::arrow2();
    const SetFunctor g =
        support::functor(a2, {{"a", {"0", "1"}}, {"b", {"u", "v"}}}, {{"f", {{"0", "u"}, {"1", "u"}}}});
    const DiscreteOpfibration d = discrete_opfibration(g);
    std::size_t non_identity = 0;
    for (ArrowIndex k = 0; k < d.total.arrow_count(); ++k) {
      if (d.total.is_identity(k)) continue;
      ++non_identity;
      CHECK(d.total.object_name(d.total.cod(k)) == "<b|u>");
    }
    CHECK(non_identity == 2);
  }
}

TEST_CASE("representables") {
  const SetFunctor t = yoneda(fixtures::term(), 0);
  CHECK(t.size(0) == 1);
  const Category a2 = fixtures::arrow2();
  const SetFunctor hb = yoneda(a2, a2.object("b"));
  CHECK(hb.set(a2.object("a")) == std::vector<std::string>{"f"});
  CHECK(hb.set(a2.object("b")) == std::vector<std::string>{"id_b"});
  const Category pair = fixtures::pair();
  const SetFunctor pb = yoneda(pair, pair.object("b"));
  CHECK(pb.set(pair.object("a")) == std::vector<std::string>{"f", "g"});
  CHECK(error_kind([&] { pair.object("z"); }) == ErrorKind::kUnknownObject);
}

TEST_CASE("natural transformation counts") {
  const Category a2 = fixtures::arrow2();
  const SetFunctor one = SetFunctor::constant(a2, {"*"});
  CHECK(nat_transformations(one, one).size() == 1);
  const Category pair = fixtures::pair();
  const SetFunctor pb = yoneda(pair, pair.object("b"));
  CHECK(nat_transformations(pb, pb).size() == 1);
}

TEST_CASE("validation of functors and transformations") {
  const Category a2 = fixtures::arrow2();
  CHECK(error_kind([&] {
          support::functor(a2, {{"a", {"0", "1"}}, {"b", {"0"}}},
                           {{"id_a", {{"0", "1"}, {"1", "0"}}}, {"f", {{"0", "0"}, {"1", "0"}}}});
        }) == ErrorKind::kFunctorViolation);
  const SetFunctor f = support::functor(a2, {{"a", {"0", "1"}}, {"b", {"0", "1"}}}, {{"f", {{"0", "0"}, {"1", "1"}}}});
  const SetFunctor g = support::functor(a2, {{"a", {"0", "1"}}, {"b", {"0", "1"}}}, {{"f", {{"0", "1"}, {"1", "0"}}}});
  CHECK(error_kind([&] { NatTransformation(f, g, {{0, 1}, {0, 1}}); }) == ErrorKind::kNaturalityViolation);
  CHECK_NOTHROW(NatTransformation(f, g, {{0, 1}, {1, 0}}));
  CHECK(error_kind([&] { nat_transformations(f, g, 3); }) == ErrorKind::kSearchBudgetExceeded);
}

TEST_CASE("Yoneda: Nat(Hom(-, c), F) has |F(c)| elements, bijectively", "[property]") {
  Rng rng(5);
  for (int k = 0; k < 120; ++k) {
    INFO("case " << k);
    const Category c = random_category(rng, {4, 8});
    const SetFunctor f = random_presheaf(rng, c, 3);
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      const SetFunctor y = yoneda(c, x);
      const auto all = nat_transformations(y, f);
      REQUIRE(all.size() == f.size(x));
      const std::size_t id = *y.find_element(x, c.arrow_name(c.identity(x)));
      std::vector<bool> hit(f.size(x), false);
      for (const auto& t : all) {
        CHECK_FALSE(hit[t.apply(x, id)]);
        hit[t.apply(x, id)] = true;
      }
    }
  }
}

TEST_CASE("nat_transformations matches a product-space count", "[property]") {
  Rng rng(6);
  for (int k = 0; k < 150; ++k) {
    INFO("case " << k);
    const Category c = random_category(rng, {3, 6});
    const SetFunctor f = random_set_functor(rng, c, 2);
    const SetFunctor g = random_set_functor(rng, c, 3);
    const auto all = nat_transformations(f, g);
    CHECK(all.size() == oracle::count_nat(f, g));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].components() < all[i].components());
  }
}

TEST_CASE("discrete opfibration matches elements for random functors", "[property]") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const Category c = random_category(rng, {4, 8});
    const SetFunctor g = random_set_functor(rng, c, 3);
    const DiscreteOpfibration d = discrete_opfibration(g);
    CHECK(d.total.object_count() == g.total_size());
    CHECK(d.to_elements.injective_on_objects());
    CHECK(d.to_elements.injective_on_arrows());
    CHECK(d.elements.category.arrow_count() == d.total.arrow_count());
  }
}

TEST_CASE("restriction and isomorphism search") {
  Rng rng(8);
  for (int k = 0; k < 60; ++k) {
    const Category c = random_category(rng, {3, 6});
    const SetFunctor f = random_set_functor(rng, c, 3);
    CHECK(f.restrict(Functor::identity(c)) == f);
    const auto iso = find_isomorphism(f, f);
    REQUIRE(iso);
    CHECK(iso->pointwise_bijective());
    const SetFunctor g = random_set_functor(rng, c, 2);
    CHECK(find_isomorphism(f, g).has_value() == oracle::isomorphic(f, g));
  }
}
