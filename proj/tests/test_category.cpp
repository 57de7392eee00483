#include <catch_amalgamated.hpp>

#include "fincat/category.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fincat;
using support::error_kind;

namespace {

RawCategory arrow2_raw() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}};
  raw.identity = {{"a", "id_a"}, {"b", "id_b"}};
  raw.compose = {{"id_a", "id_a", "id_a"}, {"id_b", "id_b", "id_b"}, {"id_b", "f", "f"}, {"f", "id_a", "f"}};
  return raw;
}

RawCategory one_object(const std::string& ee) {
  RawCategory raw;
  raw.objects = {"x"};
  raw.arrows = {{"id", "x", "x"}, {"e", "x", "x"}};
  raw.identity = {{"x", "id"}};
  raw.compose = {{"e", "e", ee}};
  return raw;
}

}  // namespace

TEST_CASE("validate_category accepts the terminal category") {
  RawCategory raw;
  raw.objects = {"*"};
  raw.arrows = {{"id_*", "*", "*"}};
  raw.identity = {{"*", "id_*"}};
  raw.compose = {{"id_*", "id_*", "id_*"}};
  const Category c = validate_category(raw);
  CHECK(c == fixtures::term());
  CHECK(c.object_count() == 1);
  CHECK(c.arrow_count() == 1);
}

TEST_CASE("omitting a unit composite is IncompleteComposition") {
  RawCategory raw = arrow2_raw();
  CHECK_NOTHROW(validate_category(raw));
  raw.compose.pop_back();  // f∘id_a
  CHECK(error_kind([&] { validate_category(raw); }) == ErrorKind::kIncompleteComposition);
  // the loader-side inference restores it
  CHECK(validate_category(raw.add_unit_laws()) == fixtures::arrow2());
}

TEST_CASE("e∘e = id gives Z/2 and e∘e = e gives IDEM, both valid") {
  const Category z2 = validate_category(one_object("id").add_unit_laws());
  const Category idem = validate_category(one_object("e").add_unit_laws());
  CHECK(z2.compose(z2.arrow("e"), z2.arrow("e")) == z2.arrow("id"));
  CHECK(idem.compose(idem.arrow("e"), idem.arrow("e")) == idem.arrow("e"));
  CHECK_FALSE(z2 == idem);
}

TEST_CASE("validation errors") {
  SECTION("missing identity") {
    RawCategory raw = arrow2_raw();
    raw.identity.erase("b");
    CHECK(error_kind([&] { validate_category(raw); }) == ErrorKind::kMissingIdentity);
  }
  SECTION("dom/cod mismatch in the table") {
    RawCategory raw = arrow2_raw();
    raw.compose.push_back({"f", "f", "f"});
    CHECK(error_kind([&] { validate_category(raw); }) == ErrorKind::kDomCodMismatch);
  }
  SECTION("non-associative table") {
    // x with e, k: e∘e = k, e∘k = e, k∘e = k, k∘k = k
    RawCategory raw;
    raw.objects = {"x"};
    raw.arrows = {{"id", "x", "x"}, {"e", "x", "x"}, {"k", "x", "x"}};
    raw.identity = {{"x", "id"}};
    raw.compose = {{"e", "e", "k"}, {"e", "k", "e"}, {"k", "e", "k"}, {"k", "k", "k"}};
    CHECK(error_kind([&] { validate_category(raw.add_unit_laws()); }) == ErrorKind::kNonAssociative);
  }
  SECTION("unknown ids and duplicates") {
    RawCategory raw = arrow2_raw();
    raw.arrows.push_back({"g", "a", "c"});
    CHECK(error_kind([&] { validate_category(raw); }) == ErrorKind::kUnknownObject);
    raw = arrow2_raw();
    raw.arrows.push_back({"f", "a", "b"});
    CHECK(error_kind([&] { validate_category(raw); }) == ErrorKind::kDuplicateId);
  }
  SECTION("arrow cap") {
    RawCategory raw;
    for (int k = 0; k <= static_cast<int>(kMaxArrows); ++k) {
      raw.objects.push_back("o" + std::to_string(k));
      raw.arrows.push_back({"i" + std::to_string(k), raw.objects.back(), raw.objects.back()});
      raw.identity[raw.objects.back()] = raw.arrows.back().id;
    }
    CHECK(error_kind([&] { validate_category(raw); }) == ErrorKind::kTooLarge);
  }
}

TEST_CASE("opposite") {
  CHECK(opposite(fixtures::term()) == fixtures::term());
  CHECK(identical(opposite(opposite(fixtures::arrow2())), fixtures::arrow2()));
  CHECK(opposite(fixtures::span()) == fixtures::cospan());
  const Category op = opposite(fixtures::arrow2());
  CHECK(op.dom(op.arrow("f")) == op.object("b"));
}

TEST_CASE("comma categories") {
  const Category term = fixtures::term();
  const Category a2 = fixtures::arrow2();
  SECTION("identity on TERM") {
    const CommaCategory k = comma_category(Functor::identity(term), Functor::identity(term));
    CHECK(k.category.object_count() == 1);
    CHECK(k.category.arrow_count() == 1);
  }
  SECTION("const_a over the identity of ARROW2") {
    const CommaCategory k = comma_category(constant_functor(term, a2, a2.object("a")), Functor::identity(a2));
    REQUIRE(k.category.object_count() == 2);
    CHECK(k.category.arrow_count() == 3);
    CHECK(k.category.object_name(0) == "(*,a,id_a)");
    CHECK(k.category.object_name(1) == "(*,b,f)");
    CHECK(k.category.hom(0, 1).size() == 1);
    CHECK(k.category.hom(1, 0).empty());
  }
  SECTION("const_b against const_a is empty") {
    const CommaCategory k = comma_category(constant_functor(term, a2, a2.object("b")),
                                           constant_functor(term, a2, a2.object("a")));
    CHECK(k.category.empty());
  }
}

TEST_CASE("connectedness") {
  CHECK(is_connected(fixtures::term()));
  CHECK_FALSE(is_connected(Category()));
  CHECK_FALSE(is_connected(fixtures::discrete2()));
  CHECK(connected_components(fixtures::discrete2()) == 2);
  CHECK(connected_components(Category()) == 0);
}

TEST_CASE("filteredness") {
  CHECK(is_filtered(fixtures::term()));
  CHECK_FALSE(is_filtered(fixtures::pair()));
  CHECK(is_filtered(fixtures::cospan()));
  CHECK_FALSE(is_filtered(fixtures::span()));
  CHECK_FALSE(is_filtered(Category()));
  CHECK(is_filtered(fixtures::idem()));
  CHECK(is_filtered(adjoin_terminal(fixtures::pair())));
}

TEST_CASE("functor validation") {
  const Category a2 = fixtures::arrow2();
  const Category pair = fixtures::pair();
  CHECK(error_kind([&] {
          Functor::from_names(a2, pair, {{"a", "b"}, {"b", "a"}}, {{"f", "f"}});
        }) == ErrorKind::kFunctorViolation);
  const Functor f = Functor::from_names(a2, pair, {{"a", "a"}, {"b", "b"}}, {{"f", "g"}});
  CHECK(f.faithful());
  CHECK_FALSE(f.full());
  CHECK(enumerate_functors(a2, pair).size() == 4);  // two constants and f, g
}

TEST_CASE("random categories: structural properties", "[property]") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Category c = random_category(rng, {4, 8});
    INFO("case " << k);
    CHECK(identical(opposite(opposite(c)), c));
    CHECK(is_filtered(c) == oracle::filtered(c));
    CHECK(connected_components(c) == oracle::components(c));
    if (is_filtered(c)) CHECK(is_connected(c));
    // every output category revalidates from its own description
    CHECK(validate_category(c.to_raw()) == c);
    const Functor id = Functor::identity(c);
    const CommaCategory k2 = comma_category(id, id);
    CHECK(k2.category.object_count() == c.arrow_count());
  }
}

TEST_CASE("functor search budget reports the explored fraction") {
  const Category c = fixtures::span();
  try {
    enumerate_functors(c, c, 2);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSearchBudgetExceeded);
    CHECK(e.detail().find("fraction") != std::string::npos);
  }
}
