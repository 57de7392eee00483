#include "fincat/fixtures.hpp"

namespace fincat::fixtures {

Category build(const std::vector<std::string>& objects, const std::vector<RawArrow>& arrows,
               const std::vector<RawComposite>& composites) {
  RawCategory raw;
  raw.objects = objects;
  for (const auto& o : objects) {
    raw.arrows.push_back({"id_" + o, o, o});
    raw.identity[o] = "id_" + o;
  }
  raw.arrows.insert(raw.arrows.end(), arrows.begin(), arrows.end());
  raw.compose = composites;
  raw.add_unit_laws();
  return validate_category(raw);
}

Category term() { return build({"*"}, {}); }

Category arrow2() { return build({"a", "b"}, {{"f", "a", "b"}}); }

Category pair() { return build({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}}); }

Category span() { return build({"a", "b", "c"}, {{"s", "c", "a"}, {"t", "c", "b"}}); }

Category cospan() { return build({"a", "b", "c"}, {{"s", "a", "c"}, {"t", "b", "c"}}); }

Category idem() { return build({"x"}, {{"e", "x", "x"}}, {{"e", "e", "e"}}); }

Category z2() { return build({"x"}, {{"e", "x", "x"}}, {{"e", "e", "id_x"}}); }

Category discrete2() { return build({"a", "b"}, {}); }

Category poset_ab() { return arrow2(); }

std::vector<std::pair<std::string, Category>> all() {
  return {{"TERM", term()},   {"ARROW2", arrow2()},       {"PAIR", pair()},
          {"SPAN", span()},   {"COSPAN", cospan()},       {"IDEM", idem()},
          {"Z2", z2()},       {"DISCRETE2", discrete2()}, {"POSET_AB", poset_ab()}};
}

}  // namespace fincat::fixtures
