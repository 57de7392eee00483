#include <catch_amalgamated.hpp>

#include "fincat/adjoint.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/kan.hpp"
#include "fincat/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fincat;

namespace {

bool is_identity_transformation(const NatTransformation& t) {
  for (ObjectIndex c = 0; c < t.source().base().object_count(); ++c) {
    for (std::size_t x = 0; x < t.source().size(c); ++x) {
      if (t.apply(c, x) != x) return false;
    }
  }
  return true;
}

bool injective(const std::vector<std::size_t>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] == m[j]) return false;
    }
  }
  return true;
}

Profunctor empty_profunctor(const Category& c, const Category& d) {
  const SetFunctor empty = SetFunctor::constant(opposite(d), {});
  std::vector<SetFunctor> values(c.object_count(), empty);
  std::vector<NatTransformation> actions(c.arrow_count(), NatTransformation::identity(empty));
  return Profunctor(c, d, values, actions);
}

}  // namespace

TEST_CASE("the terminal profunctor gives identities") {
  const Category term = fixtures::term();
  const Profunctor p = profunctor_from_functor(Functor::identity(term));
  CHECK(p.value(0).size(0) == 1);
  const SetFunctor f = SetFunctor::constant(term, {"x", "y", "z"});
  const Tilde t = tilde(p, f);
  CHECK(t.functor.size(0) == 3);
  CHECK(find_isomorphism(t.functor, f).has_value());
  const RightAdjoint g = r(p, f);
  CHECK(g.functor.size(0) == 3);
  const NatTransformation eta = unit(p, f);
  CHECK(eta.pointwise_bijective());
  CHECK(is_identity_transformation(eta));
  CHECK(is_identity_transformation(counit(p, f)));
  CHECK(unit_monic_check(p, f, 0));
}

TEST_CASE("the empty profunctor has constant empty tilde") {
  Rng rng(71);
  const Category a2 = fixtures::arrow2();
  const Category pair = fixtures::pair();
  const Profunctor p = empty_profunctor(a2, pair);
  const SetFunctor f = random_set_functor(rng, pair, 3, 1);
  const Tilde t = tilde(p, f);
  for (ObjectIndex c = 0; c < a2.object_count(); ++c) CHECK(t.functor.size(c) == 0);
}

TEST_CASE("for P = Hom(f(-), -): tilde is Lan_f and (-)_r is restriction") {
  Rng rng(72);
  const auto all = fixtures::all();
  for (const auto& [dn, d] : all) {
    for (const auto& [cn, c] : all) {
      if (c.arrow_count() > 3 || d.arrow_count() > 3) continue;
      for (const Functor& f : enumerate_functors(d, c)) {
        INFO(dn << " -> " << cn);
        const Profunctor p = profunctor_from_functor(f);
        const SetFunctor fd = random_set_functor(rng, d, 2);
        const SetFunctor gc = random_set_functor(rng, c, 2);
        CHECK(find_isomorphism(tilde(p, fd).functor, lan(f, fd).functor).has_value());
        CHECK(find_isomorphism(r(p, gc).functor, gc.restrict(f)).has_value());
        const AdjunctionBijection b = adjunction_bijection(p, fd, gc);
        CHECK(b.mutually_inverse);
        CHECK(b.tilde_side.size() == oracle::count_nat(lan(f, fd).functor, gc));
        CHECK(b.r_side.size() == oracle::count_nat(fd, gc.restrict(f)));
      }
    }
  }
}

TEST_CASE("constant singleton G has constant singleton G_r") {
  Rng rng(73);
  for (int k = 0; k < 20; ++k) {
    const Category c = random_category(rng, {2, 4});
    const Category d = random_category(rng, {2, 4});
    const Profunctor p = random_profunctor(rng, c, d, 2);
    const RightAdjoint g = r(p, SetFunctor::constant(c, {"*"}));
    for (ObjectIndex x = 0; x < d.object_count(); ++x) CHECK(g.functor.size(x) == 1);
  }
}

TEST_CASE("an empty F gives singleton hom-sets on both sides") {
  Rng rng(74);
  const Category a2 = fixtures::arrow2();
  const Profunctor p = random_profunctor(rng, a2, a2, 2);
  const SetFunctor empty = SetFunctor::constant(a2, {});
  const SetFunctor g = random_set_functor(rng, a2, 2);
  const AdjunctionBijection b = adjunction_bijection(p, empty, g);
  CHECK(b.tilde_side.size() == 1);
  CHECK(b.r_side.size() == 1);
  CHECK(b.mutually_inverse);
}

TEST_CASE("the unit along the identity profunctor is invertible") {
  Rng rng(75);
  for (const auto& [name, c] : fixtures::all()) {
    const Profunctor p = profunctor_from_functor(Functor::identity(c));
    const SetFunctor f = random_set_functor(rng, c, 2);
    CHECK(unit(p, f).pointwise_bijective());
    CHECK(counit(p, f).pointwise_bijective());
  }
}

TEST_CASE("the unit is monic along the point a of ARROW2") {
  const Category term = fixtures::term();
  const Category a2 = fixtures::arrow2();
  const Profunctor p = profunctor_from_functor(constant_functor(term, a2, a2.object("a")));
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::string> s;
    for (std::size_t k = 0; k < n; ++k) s.push_back(std::to_string(k));
    CHECK(unit_monic_check(p, SetFunctor::constant(term, s), 0));
  }
}

TEST_CASE("adjunction laws on random triples", "[property]") {
  Rng rng(76);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    INFO("case " << k);
    const Category c = random_category(rng, {2, 4});
    const Category d = random_category(rng, {2, 4});
    const Profunctor p = random_profunctor(rng, c, d, 2);
    const SetFunctor f = random_set_functor(rng, d, 2);
    const SetFunctor g = random_set_functor(rng, c, 2);
    try {
      const AdjunctionBijection b = adjunction_bijection(p, f, g, 200000);
      CHECK(b.tilde_side.size() == b.r_side.size());
      CHECK(b.mutually_inverse);
      const TriangleReport t = triangle_identities(p, f, g, 200000);
      CHECK(t.tilde_side);
      CHECK(t.r_side);
      const NatTransformation eta = unit(p, f, 200000);
      for (ObjectIndex x = 0; x < d.object_count(); ++x) {
        CHECK(unit_monic_check(p, f, x, 200000) == injective(eta.component(x)));
      }
      ++checked;
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::kSearchBudgetExceeded);
    }
  }
  CHECK(checked >= 40);
}
