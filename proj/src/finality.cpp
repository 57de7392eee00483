#include "fincat/finality.hpp"

namespace fincat {

FinalityReport is_final(const Functor& i) {
  const Category& a = i.target();
  const Category term = terminal_category();
  FinalityReport report;
  for (ObjectIndex x = 0; x < a.object_count(); ++x) {
    const CommaCategory comma = comma_category(constant_functor(term, a, x), i);
    const std::size_t components = connected_components(comma.category);
    if (components != 1) {
      report.object = a.object_name(x);
      report.empty = components == 0;
      report.components = components;
      return report;
    }
  }
  report.final = true;
  return report;
}

bool check_finality_theorem(const Functor& i, const SetFunctor& diagram) {
  const FinalityReport final = is_final(i);
  if (!final.final) {
    throw Error(ErrorKind::kNotFinal, "comma category at '" + final.object + "' is " +
                                          (final.empty ? "empty" : "disconnected"));
  }
  const QuotientSet whole = colimit(diagram);
  const QuotientSet restricted = colimit(diagram.restrict(i));
  std::vector<std::size_t> image(restricted.size(), whole.size());
  std::vector<bool> hit(whole.size(), false);
  for (std::size_t k = 0; k < restricted.size(); ++k) {
    for (const Member& m : restricted.members(k)) {
      const std::size_t t = whole.class_of(i.on_object(m.part), m.element);
      if (image[k] != whole.size() && image[k] != t) return false;
      image[k] = t;
    }
    if (hit[image[k]]) return false;
    hit[image[k]] = true;
  }
  for (bool h : hit) {
    if (!h) return false;
  }
  return true;
}

std::optional<SetFunctor> find_distinguishing_diagram(const Functor& i, std::size_t max_size) {
  std::optional<SetFunctor> found;
  enumerate_set_functors(i.target(), max_size, [&](const SetFunctor& d) {
    if (colimit(d).size() != colimit(d.restrict(i)).size()) {
      found = d;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace fincat
