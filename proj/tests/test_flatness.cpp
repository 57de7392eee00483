#include <catch_amalgamated.hpp>

#include "fincat/fixtures.hpp"
#include "fincat/flatness.hpp"
#include "fincat/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fincat;

TEST_CASE("representables are flat on every fixture") {
  for (const auto& [name, c] : fixtures::all()) {
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      INFO(name << " " << c.object_name(x));
      const FlatnessReport r = is_flat(yoneda(c, x));
      CHECK(r.flat);
      CHECK(r.condition == 0);
      CHECK(r.witness.empty());
      CHECK(is_flat_via_elements(yoneda(c, x)));
    }
  }
}

TEST_CASE("the PAIR presheaf identifying f and g fails condition iii") {
  const Category pair = fixtures::pair();
  const SetFunctor f = support::presheaf(pair, {{"a", {"p"}}, {"b", {"*"}}}, {{"f", {{"*", "p"}}}, {"g", {{"*", "p"}}}});
  const FlatnessReport r = is_flat(f);
  CHECK_FALSE(r.flat);
  CHECK(r.condition == 3);
  CHECK(r.witness.at("u") == "f");
  CHECK(r.witness.at("v") == "g");
  CHECK(r.witness.at("c") == "b");
  CHECK(r.witness.at("x") == "*");
  CHECK_FALSE(is_flat_via_elements(f));
  CHECK_FALSE(oracle::flat(f));
}

TEST_CASE("the empty presheaf fails condition i") {
  for (const auto& [name, c] : fixtures::all()) {
    const SetFunctor empty = SetFunctor::constant(opposite(c), {});
    CHECK(is_flat(empty).condition == 1);
    CHECK_FALSE(is_flat_via_elements(empty));
  }
}

TEST_CASE("two disjoint points on DISCRETE2 fail condition ii") {
  const SetFunctor f = support::presheaf(fixtures::discrete2(), {{"a", {"x"}}, {"b", {"y"}}}, {});
  const FlatnessReport r = is_flat(f);
  CHECK(r.condition == 2);
  CHECK(r.witness.at("c") == "a");
  CHECK(r.witness.at("d") == "b");
  CHECK_FALSE(is_flat_via_elements(f));
}

TEST_CASE("both flatness criteria agree with the oracle", "[property]") {
  Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    INFO("case " << k);
    const Category c = random_category(rng, {4, 8});
    const SetFunctor f = random_presheaf(rng, c, 3);
    const FlatnessReport r = is_flat(f);
    CHECK(r.flat == is_flat_via_elements(f));
    CHECK(r.flat == oracle::flat(f));
    CHECK(r.flat == (r.condition == 0));
  }
}

TEST_CASE("random flat presheaves are flat", "[property]") {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    const Category c = random_category(rng, {4, 8});
    const SetFunctor f = random_flat_presheaf(rng, c, 3);
    CHECK(oracle::flat(f));
    CHECK(is_flat(f).flat);
  }
}

TEST_CASE("exhaustive agreement on small fixtures") {
  for (const char* name : {"ARROW2", "PAIR", "IDEM", "Z2", "DISCRETE2"}) {
    for (const auto& [n, c] : fixtures::all()) {
      if (n != name) continue;
      for (const SetFunctor& f : oracle::all_set_functors(opposite(c), 2)) {
        CHECK(is_flat(f).flat == oracle::flat(f));
        CHECK(is_flat_via_elements(f) == oracle::flat(f));
      }
    }
  }
}
