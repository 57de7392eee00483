#include "fincat/flatness.hpp"

namespace fincat {

FlatnessReport is_flat(const SetFunctor& f) {
  const Category c = opposite(f.base());
  FlatnessReport report;

  bool inhabited = false;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) inhabited = inhabited || f.size(x) > 0;
  if (!inhabited) {
    report.condition = 1;
    return report;
  }

  for (ObjectIndex a = 0; a < c.object_count(); ++a) {
    for (ObjectIndex d = 0; d < c.object_count(); ++d) {
      for (std::size_t x = 0; x < f.size(a); ++x) {
        for (std::size_t y = 0; y < f.size(d); ++y) {
          bool found = false;
          for (ObjectIndex b = 0; b < c.object_count() && !found; ++b) {
            for (std::size_t z = 0; z < f.size(b) && !found; ++z) {
              bool hits_x = false;
              bool hits_y = false;
              for (ArrowIndex u : c.hom(a, b)) hits_x = hits_x || f.apply(u, z) == x;
              for (ArrowIndex v : c.hom(d, b)) hits_y = hits_y || f.apply(v, z) == y;
              found = hits_x && hits_y;
            }
          }
          if (!found) {
            report.condition = 2;
            report.witness = {{"c", c.object_name(a)},
                              {"x", f.element(a, x)},
                              {"d", c.object_name(d)},
                              {"y", f.element(d, y)}};
            return report;
          }
        }
      }
    }
  }

  for (ObjectIndex d = 0; d < c.object_count(); ++d) {
    for (ObjectIndex a = 0; a < c.object_count(); ++a) {
      const auto& parallel = c.hom(d, a);
      for (std::size_t i = 0; i < parallel.size(); ++i) {
        for (std::size_t j = i + 1; j < parallel.size(); ++j) {
          const ArrowIndex u = parallel[i];
          const ArrowIndex v = parallel[j];
          for (std::size_t x = 0; x < f.size(a); ++x) {
            if (f.apply(u, x) != f.apply(v, x)) continue;
            bool found = false;
            for (ArrowIndex w : c.arrows_from(a)) {
              if (c.compose(w, u) != c.compose(w, v)) continue;
              for (std::size_t y = 0; y < f.size(c.cod(w)) && !found; ++y) {
                found = f.apply(w, y) == x;
              }
              if (found) break;
            }
            if (!found) {
              report.condition = 3;
              report.witness = {{"u", c.arrow_name(u)},
                                {"v", c.arrow_name(v)},
                                {"d", c.object_name(d)},
                                {"c", c.object_name(a)},
                                {"x", f.element(a, x)}};
              return report;
            }
          }
        }
      }
    }
  }
  report.flat = true;
  return report;
}

bool is_flat_via_elements(const SetFunctor& presheaf) {
  return is_filtered(elements_presheaf(presheaf).category);
}

}  // namespace fincat
