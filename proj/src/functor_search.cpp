#include <cmath>
#include <sstream>

#include "fincat/category.hpp"

namespace fincat {

FunctorSearch::FunctorSearch(Category source, Category target, std::uint64_t budget)
    : source_(std::move(source)), target_(std::move(target)), budget_(budget) {}

void FunctorSearch::set_object_filter(ObjectFilter filter) { object_filter_ = std::move(filter); }

FunctorSearch::Stats FunctorSearch::run(const std::function<bool(const Functor&)>& visit) {
  const Category& s = source_;
  const Category& t = target_;
  Stats stats;
  stats.object_maps_total = std::pow(static_cast<double>(t.object_count()),
                                     static_cast<double>(s.object_count()));
  if (s.object_count() > 0 && t.object_count() == 0) return stats;

  // Non-identity arrows are assigned in index order; a composition
  // constraint g∘f = h is checked once the last of its non-identity
  // members has been assigned.
  std::vector<ArrowIndex> order;
  std::vector<std::size_t> position(s.arrow_count(), 0);
  for (ArrowIndex f = 0; f < s.arrow_count(); ++f) {
    if (!s.is_identity(f)) {
      position[f] = order.size() + 1;
      order.push_back(f);
    }
  }
  struct Constraint {
    ArrowIndex g, f, gf;
  };
  std::vector<std::vector<Constraint>> ready(order.size() + 1);
  for (ArrowIndex f : order) {
    for (ArrowIndex g : s.arrows_from(s.cod(f))) {
      if (s.is_identity(g)) continue;
      const ArrowIndex gf = s.compose(g, f);
      const std::size_t when = std::max({position[f], position[g], position[gf]});
      ready[when].push_back({g, f, gf});
    }
  }

  std::vector<ObjectIndex> obj(s.object_count(), 0);
  std::vector<ArrowIndex> arr(s.arrow_count(), 0);
  bool stop = false;

  auto report_budget = [&]() {
    std::ostringstream msg;
    msg << "functor search over " << s.object_count() << " -> " << t.object_count()
        << " objects exceeded " << budget_ << " nodes; explored fraction "
        << (stats.object_maps_total > 0 ? stats.object_maps_done / stats.object_maps_total : 1.0);
    throw Error(ErrorKind::kSearchBudgetExceeded, msg.str());
  };

  std::function<void(std::size_t)> assign_arrow = [&](std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      Functor found(Functor::Unchecked{}, s, t, obj, arr);
      if (!visit(found)) stop = true;
      return;
    }
    const ArrowIndex u = order[k];
    for (ArrowIndex candidate : t.hom(obj[s.dom(u)], obj[s.cod(u)])) {
      if (++stats.nodes > budget_) report_budget();
      arr[u] = candidate;
      bool ok = true;
      for (const Constraint& c : ready[k + 1]) {
        if (t.compose(arr[c.g], arr[c.f]) != arr[c.gf]) {
          ok = false;
          break;
        }
      }
      if (ok) assign_arrow(k + 1);
      if (stop) return;
    }
  };

  std::function<void(std::size_t)> assign_object = [&](std::size_t c) {
    if (stop) return;
    if (c == s.object_count()) {
      for (ObjectIndex x = 0; x < s.object_count(); ++x) arr[s.identity(x)] = t.identity(obj[x]);
      // identity-only constraints (e.g. g∘f = id) are checked at position 0
      bool ok = true;
      for (const Constraint& con : ready[0]) {
        if (t.compose(arr[con.g], arr[con.f]) != arr[con.gf]) ok = false;
      }
      if (ok) assign_arrow(0);
      ++stats.object_maps_done;
      return;
    }
    for (ObjectIndex x = 0; x < t.object_count(); ++x) {
      if (++stats.nodes > budget_) report_budget();
      obj[c] = x;
      if (object_filter_ && !object_filter_(c, obj)) {
        // the whole subtree of object maps is skipped
        stats.object_maps_done += std::pow(static_cast<double>(t.object_count()),
                                           static_cast<double>(s.object_count() - c - 1));
        continue;
      }
      assign_object(c + 1);
      if (stop) return;
    }
  };

  assign_object(0);
  stats.stopped = stop;
  return stats;
}

std::vector<Functor> enumerate_functors(const Category& source, const Category& target,
                                        std::uint64_t budget) {
  std::vector<Functor> out;
  FunctorSearch(source, target, budget).run([&](const Functor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace fincat
