#include <catch_amalgamated.hpp>

#include <set>

#include "fincat/fixtures.hpp"
#include "fincat/karoubi.hpp"
#include "fincat/random.hpp"
#include "support.hpp"

using namespace fincat;

namespace {

void check_full_faithful(const Functor& f) {
  const Category& c = f.source();
  const Category& d = f.target();
  for (ObjectIndex a = 0; a < c.object_count(); ++a) {
    for (ObjectIndex b = 0; b < c.object_count(); ++b) {
      std::set<ArrowIndex> image;
      for (ArrowIndex u : c.hom(a, b)) image.insert(f.on_arrow(u));
      CHECK(image.size() == c.hom(a, b).size());
      CHECK(image.size() == d.hom(f.on_object(a), f.on_object(b)).size());
    }
  }
}

}  // namespace

TEST_CASE("idempotents of fixtures") {
  const auto t = idempotents(fixtures::term());
  REQUIRE(t.size() == 1);
  CHECK(t[0].is_identity);
  const Category idem = fixtures::idem();
  const auto i = idempotents(idem);
  REQUIRE(i.size() == 2);
  CHECK(i[0].arrow == idem.arrow("id_x"));
  CHECK(i[0].is_identity);
  CHECK(i[1].arrow == idem.arrow("e"));
  CHECK_FALSE(i[1].is_identity);
  for (const Idempotent& e : idempotents(fixtures::arrow2())) CHECK(e.is_identity);
  CHECK(idempotents(fixtures::z2()).size() == 1);
}

TEST_CASE("Karoubi envelopes of fixtures") {
  const Category term = fixtures::term();
  CHECK(equivalent_categories(karoubi_envelope(term).category, term).equivalent);
  const Category a2 = fixtures::arrow2();
  const KaroubiEnvelope ka = karoubi_envelope(a2);
  CHECK(ka.category.object_count() == 2);
  CHECK(ka.category.arrow_count() == 3);
  CHECK(equivalent_categories(ka.category, a2).equivalent);

  const Category idem = fixtures::idem();
  const KaroubiEnvelope k = karoubi_envelope(idem);
  REQUIRE(k.category.object_count() == 2);
  CHECK(k.category.object_name(0) == "(x,id_x)");
  CHECK(k.category.object_name(1) == "(x,e)");
  CHECK(k.category.arrow_name(k.category.identity(1)) == "e:(x,e)->(x,e)");
  const ObjectIndex split_object = 1;
  const auto s = k.category.hom(split_object, 0);
  const auto r = k.category.hom(0, split_object);
  REQUIRE(s.size() == 1);
  REQUIRE(r.size() == 1);
  CHECK(k.category.compose(r[0], s[0]) == k.category.identity(split_object));
  CHECK(k.category.compose(s[0], r[0]) == k.embedding.on_arrow(idem.arrow("e")));
  const auto sp = split(k.category, k.embedding.on_arrow(idem.arrow("e")));
  REQUIRE(sp.has_value());
  CHECK(sp->object == split_object);
}

TEST_CASE("Cauchy completeness") {
  CHECK_FALSE(is_cauchy_complete(fixtures::idem()));
  CHECK_FALSE(split(fixtures::idem(), fixtures::idem().arrow("e")).has_value());
  CHECK(is_cauchy_complete(karoubi_envelope(fixtures::idem()).category));
  for (const char* name : {"TERM", "ARROW2", "POSET_AB", "DISCRETE2", "PAIR", "SPAN", "COSPAN", "Z2"}) {
    for (const auto& [n, c] : fixtures::all()) {
      if (n == name) CHECK(is_cauchy_complete(c));
    }
  }
}

TEST_CASE("equivalence search") {
  const EquivalenceResult t = equivalent_categories(fixtures::term(), fixtures::term());
  REQUIRE(t.equivalent);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->forward == Functor::identity(fixtures::term()));
  CHECK_FALSE(equivalent_categories(karoubi_envelope(fixtures::idem()).category, fixtures::discrete2()).equivalent);
  CHECK_FALSE(equivalent_categories(fixtures::idem(), fixtures::z2()).equivalent);
  // a two-object category with an isomorphism is equivalent to TERM
  const Category iso = fixtures::build({"a", "b"}, {{"u", "a", "b"}, {"v", "b", "a"}},
                                       {{"v", "u", "id_a"}, {"u", "v", "id_b"}});
  const EquivalenceResult r = equivalent_categories(iso, fixtures::term());
  REQUIRE(r.equivalent);
  CHECK(is_natural_isomorphism(Functor::identity(iso), compose(r.witness->backward, r.witness->forward),
                               r.witness->unit));
  CHECK(inverse(iso, iso.arrow("u")) == iso.arrow("v"));
  try {
    equivalent_categories(fixtures::span(), fixtures::span(), 3);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSearchBudgetExceeded);
  }
}

TEST_CASE("envelope invariants on fixtures and random categories", "[property]") {
  std::vector<Category> cats;
  for (const auto& [name, c] : fixtures::all()) cats.push_back(c);
  Rng rng(91);
  for (int k = 0; k < 60; ++k) cats.push_back(random_category(rng, {4, 10}));
  for (std::size_t k = 0; k < cats.size(); ++k) {
    INFO("case " << k);
    const Category& c = cats[k];
    const KaroubiEnvelope e = karoubi_envelope(c);
    CHECK(e.category.object_count() == idempotents(c).size());
    CHECK(is_cauchy_complete(e.category));
    check_full_faithful(e.embedding);
    if (is_cauchy_complete(c)) CHECK(equivalent_categories(c, e.category).equivalent);
  }
}

TEST_CASE("the envelope is idempotent up to equivalence") {
  for (const auto& [name, c] : fixtures::all()) {
    INFO(name);
    const Category k1 = karoubi_envelope(c).category;
    const Category k2 = karoubi_envelope(k1).category;
    const EquivalenceResult r = equivalent_categories(k1, k2);
    CHECK(r.equivalent);
  }
}
