#include "fincat/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fincat/finality.hpp"
#include "fincat/flatness.hpp"
#include "fincat/json_io.hpp"
#include "fincat/random.hpp"
#include "fincat/workspace.hpp"

namespace fincat::cli {

using json_io::Json;
using json_io::to_json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSearchBudgetExceeded:
      return kBudgetExceeded;
    case ErrorKind::kCommutationFailure:
    case ErrorKind::kRelationNotTransitive:
    case ErrorKind::kSelfTestFailure:
      return kNegative;
    default:
      return kInputError;
  }
}

namespace {

struct Options {
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::string object;
  std::size_t max = 2;
};

struct Report {
  Json body;
  bool positive = true;
};

struct Context {
  Workspace& ws;
  std::vector<std::string> files;
  Options options;

  const std::string& file(std::size_t k) const {
    if (k >= files.size()) throw Error(ErrorKind::kUsage, "missing input file " + std::to_string(k + 1));
    return files[k];
  }
  std::string object() const {
    if (options.object.empty()) throw Error(ErrorKind::kUsage, "--object is required");
    return options.object;
  }
  json_io::LoadedSetFunctor presheaf(std::size_t k) {
    auto f = ws.set_functor(file(k));
    if (!f.presheaf) throw Error(ErrorKind::kUsage, "'" + file(k) + "' must be a presheaf");
    return f;
  }
  json_io::LoadedSetFunctor covariant(std::size_t k) {
    auto f = ws.set_functor(file(k));
    if (f.presheaf) throw Error(ErrorKind::kUsage, "'" + file(k) + "' must be covariant");
    return f;
  }
};

using Handler = std::function<Report(Context&)>;

Json names(const Category& c, const std::vector<ObjectIndex>& objects) {
  Json out = Json::array();
  for (ObjectIndex x : objects) out.push_back(c.object_name(x));
  return out;
}

Json quotient_values(const Category& base, const std::vector<QuotientSet>& values) {
  Json out = Json::object();
  for (ObjectIndex c = 0; c < base.object_count(); ++c) out[base.object_name(c)] = to_json(values[c]);
  return out;
}

const char* roman(int condition) {
  switch (condition) {
    case 1: return "i";
    case 2: return "ii";
    case 3: return "iii";
    default: return "";
  }
}

Topology generated(const Topology& t) {
  std::vector<std::vector<Sieve>> coverage(t.base.object_count());
  for (ObjectIndex x = 0; x < t.base.object_count(); ++x) {
    coverage[x].assign(t.covers[x].begin(), t.covers[x].end());
  }
  return generate_topology(t.base, coverage);
}

Topology load_site(Context& ctx) {
  ctx.ws.category(ctx.file(0));
  return generated(ctx.ws.topology(ctx.file(1)));
}

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  // ---------------------------------------------------------------- cat
  h["cat validate"] = [](Context& ctx) {
    const Category c = ctx.ws.category(ctx.file(0));
    return Report{{{"valid", true}, {"objects", c.object_count()}, {"arrows", c.arrow_count()}}};
  };
  h["cat opposite"] = [](Context& ctx) {
    return Report{to_json(opposite(ctx.ws.category(ctx.file(0))))};
  };
  h["cat connected"] = [](Context& ctx) {
    const Category c = ctx.ws.category(ctx.file(0));
    const bool ok = is_connected(c);
    return Report{{{"connected", ok}, {"components", connected_components(c)}}, ok};
  };
  h["cat filtered"] = [](Context& ctx) {
    const bool ok = is_filtered(ctx.ws.category(ctx.file(0)));
    return Report{{{"filtered", ok}}, ok};
  };
  h["cat comma"] = [](Context& ctx) {
    const CommaCategory k = comma_category(ctx.ws.functor(ctx.file(0)), ctx.ws.functor(ctx.file(1)));
    return Report{{{"category", to_json(k.category)}}};
  };
  h["cat product"] = [](Context& ctx) {
    return Report{to_json(product_category(ctx.ws.category(ctx.file(0)), ctx.ws.category(ctx.file(1))))};
  };

  // ---------------------------------------------------------------- fun
  h["fun validate"] = [](Context& ctx) {
    const Functor f = ctx.ws.functor(ctx.file(0));
    return Report{{{"valid", true},
                   {"full", f.full()},
                   {"faithful", f.faithful()},
                   {"injective_on_objects", f.injective_on_objects()},
                   {"injective_on_arrows", f.injective_on_arrows()}}};
  };
  h["fun compose"] = [](Context& ctx) {
    // first file applied first
    return Report{to_json(compose(ctx.ws.functor(ctx.file(1)), ctx.ws.functor(ctx.file(0))))};
  };
  h["fun enumerate"] = [](Context& ctx) {
    const Category a = ctx.ws.category(ctx.file(0));
    const Category b = ctx.ws.category(ctx.file(1));
    Json maps = Json::array();
    FunctorSearch(a, b, ctx.options.budget).run([&](const Functor& f) {
      Json m = Json::object();
      for (ObjectIndex x = 0; x < a.object_count(); ++x) m[a.object_name(x)] = b.object_name(f.on_object(x));
      Json arrows = Json::object();
      for (ArrowIndex g = 0; g < a.arrow_count(); ++g) arrows[a.arrow_name(g)] = b.arrow_name(f.on_arrow(g));
      maps.push_back({{"objects", m}, {"arrows", arrows}});
      return true;
    });
    return Report{{{"count", maps.size()}, {"functors", maps}}};
  };

  // ------------------------------------------------------------- setfun
  h["setfun validate"] = [](Context& ctx) {
    const auto f = ctx.ws.set_functor(ctx.file(0));
    return Report{{{"valid", true}, {"variance", f.presheaf ? "presheaf" : "covariant"},
                   {"elements", f.functor.total_size()}}};
  };
  h["setfun elements"] = [](Context& ctx) {
    const auto f = ctx.ws.set_functor(ctx.file(0));
    const Elements e = f.presheaf ? elements_presheaf(f.functor) : elements_covariant(f.functor);
    return Report{{{"category", to_json(e.category)}}};
  };
  h["setfun opfibration"] = [](Context& ctx) {
    const DiscreteOpfibration d = discrete_opfibration(ctx.covariant(0).functor);
    return Report{{{"total", to_json(d.total)}, {"projection", to_json(d.projection)},
                   {"to_elements", to_json(d.to_elements)}}};
  };
  h["setfun yoneda"] = [](Context& ctx) {
    const Category c = ctx.ws.category(ctx.file(0));
    return Report{to_json(yoneda(c, c.object(ctx.object())), true)};
  };
  h["setfun corepresentable"] = [](Context& ctx) {
    const Category c = ctx.ws.category(ctx.file(0));
    return Report{to_json(corepresentable(c, c.object(ctx.object())), false)};
  };
  h["setfun nat"] = [](Context& ctx) {
    const auto f = ctx.ws.set_functor(ctx.file(0));
    const auto g = ctx.ws.set_functor(ctx.file(1));
    Json labels = Json::array();
    for (const auto& t : nat_transformations(f.functor, g.functor, ctx.options.budget)) labels.push_back(t.label());
    return Report{{{"count", labels.size()}, {"transformations", labels}}};
  };
  h["setfun restrict"] = [](Context& ctx) {
    const auto f = ctx.ws.set_functor(ctx.file(0));
    const Functor along = ctx.ws.functor(ctx.file(1));
    return Report{to_json(f.functor.restrict(f.presheaf ? along.opposite() : along), f.presheaf)};
  };
  h["setfun iso"] = [](Context& ctx) {
    const auto f = ctx.ws.set_functor(ctx.file(0));
    const auto g = ctx.ws.set_functor(ctx.file(1));
    const auto iso = find_isomorphism(f.functor, g.functor, ctx.options.budget);
    return Report{{{"isomorphic", iso.has_value()}, {"witness", iso ? to_json(*iso) : Json()}},
                  iso.has_value()};
  };

  // ---------------------------------------------------- colim, limit, tensor
  h["colim compute"] = [](Context& ctx) {
    return Report{to_json(colimit(ctx.ws.set_functor(ctx.file(0)).functor))};
  };
  h["colim filtered"] = [](Context& ctx) {
    return Report{to_json(colimit_filtered(ctx.ws.set_functor(ctx.file(0)).functor))};
  };
  h["colim relation"] = [](Context& ctx) {
    const SetFunctor f = ctx.ws.set_functor(ctx.file(0)).functor;
    const auto v = cocone_relation(f).transitivity_violation();
    return Report{{{"transitive", !v.has_value()}}, !v.has_value()};
  };
  h["limit compute"] = [](Context& ctx) {
    const SetFunctor f = ctx.ws.set_functor(ctx.file(0)).functor;
    const LimitSet l = limit(f, ctx.options.budget);
    Json families = Json::array();
    for (std::size_t k = 0; k < l.size(); ++k) families.push_back(l.family_name(f, k));
    return Report{{{"size", l.size()}, {"families", families}}};
  };
  h["tensor compute"] = [](Context& ctx) {
    return Report{to_json(tensor(ctx.presheaf(0).functor, ctx.covariant(1).functor))};
  };
  h["tensor check"] = [](Context& ctx) {
    const TensorComparison t = tensor_commute_check(ctx.presheaf(0).functor, ctx.covariant(1).functor);
    return Report{{{"commutes", true}, {"classes", t.tensor.size()}, {"tensor", to_json(t.tensor)}}};
  };

  // --------------------------------------------------------------- flat
  h["flat check"] = [](Context& ctx) {
    const FlatnessReport r = is_flat(ctx.presheaf(0).functor);
    Json body{{"flat", r.flat}, {"witness", r.witness}};
    body["condition"] = r.flat ? Json() : Json(roman(r.condition));
    return Report{body, r.flat};
  };
  h["flat elements"] = [](Context& ctx) {
    const bool ok = is_flat_via_elements(ctx.presheaf(0).functor);
    return Report{{{"flat", ok}}, ok};
  };

  // ---------------------------------------------------------------- kan
  h["kan lan"] = [](Context& ctx) {
    const LeftKanExtension l = lan(ctx.ws.functor(ctx.file(0)), ctx.covariant(1).functor);
    return Report{{{"extension", to_json(l.functor, false)},
                   {"values", quotient_values(l.functor.base(), l.values)}}};
  };
  h["kan ran"] = [](Context& ctx) {
    const RightKanExtension r = ran(ctx.ws.functor(ctx.file(0)), ctx.covariant(1).functor, ctx.options.budget);
    return Report{{{"extension", to_json(r.functor, false)}}};
  };
  h["kan extend"] = [](Context& ctx) {
    const Functor j = ctx.ws.functor(ctx.file(0));
    const SetFunctor f = ctx.presheaf(1).functor;
    const FlatExtension e = flat_extend(j, f);
    Json chi = Json::object();
    for (ObjectIndex d = 0; d < j.source().object_count(); ++d) {
      std::vector<std::size_t> image = e.chi[d];
      std::sort(image.begin(), image.end());
      chi[j.source().object_name(d)] = std::adjacent_find(image.begin(), image.end()) == image.end();
    }
    return Report{{{"extension", to_json(e.extension, true)},
                   {"flat", is_flat(f).flat},
                   {"chi_injective", chi},
                   {"values", quotient_values(j.target(), e.values)}}};
  };
  h["kan quotient"] = [](Context& ctx) {
    const Functor j = ctx.ws.functor(ctx.file(0));
    const SetFunctor f = ctx.presheaf(1).functor;
    const ObjectIndex c = j.target().object(ctx.object());
    const QuotientSet q = flat_extend_quotient(j, f, c);
    const bool agrees = same_partition(q, flat_extend(j, f).values[c]);
    return Report{{{"quotient", to_json(q)}, {"agrees_with_colimit", agrees}}, agrees};
  };
  h["kan representable"] = [](Context& ctx) {
    const Functor j = ctx.ws.functor(ctx.file(0));
    return Report{{{"isomorphism", to_json(extension_of_representable(j, j.source().object(ctx.object())))}}};
  };

  // -------------------------------------------------------------- final
  h["final check"] = [](Context& ctx) {
    const FinalityReport r = is_final(ctx.ws.functor(ctx.file(0)));
    Json body{{"final", r.final}};
    if (!r.final) {
      body["object"] = r.object;
      body["empty"] = r.empty;
      body["components"] = r.components;
    }
    return Report{body, r.final};
  };
  h["final theorem"] = [](Context& ctx) {
    const bool ok = check_finality_theorem(ctx.ws.functor(ctx.file(0)), ctx.covariant(1).functor);
    return Report{{{"bijective", ok}}, ok};
  };
  h["final distinguish"] = [](Context& ctx) {
    const auto d = find_distinguishing_diagram(ctx.ws.functor(ctx.file(0)), ctx.options.max);
    return Report{{{"found", d.has_value()}, {"diagram", d ? to_json(*d, false) : Json()}}, d.has_value()};
  };

  // ------------------------------------------------------------ adjoint
  h["adjoint tilde"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    const Tilde t = tilde(p, ctx.covariant(1).functor);
    return Report{{{"functor", to_json(t.functor, false)}, {"values", quotient_values(p.source(), t.values)}}};
  };
  h["adjoint right"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    return Report{{{"functor", to_json(r(p, ctx.covariant(1).functor, ctx.options.budget).functor, false)}}};
  };
  h["adjoint bijection"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    const AdjunctionBijection b =
        adjunction_bijection(p, ctx.covariant(1).functor, ctx.covariant(2).functor, ctx.options.budget);
    return Report{{{"tilde_side", b.tilde_side.size()},
                   {"r_side", b.r_side.size()},
                   {"mutually_inverse", b.mutually_inverse}},
                  b.mutually_inverse};
  };
  h["adjoint unit"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    return Report{to_json(unit(p, ctx.covariant(1).functor, ctx.options.budget))};
  };
  h["adjoint counit"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    return Report{to_json(counit(p, ctx.covariant(1).functor, ctx.options.budget))};
  };
  h["adjoint triangles"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    const TriangleReport t =
        triangle_identities(p, ctx.covariant(1).functor, ctx.covariant(2).functor, ctx.options.budget);
    return Report{{{"tilde_side", t.tilde_side}, {"r_side", t.r_side}}, t.tilde_side && t.r_side};
  };
  h["adjoint monic"] = [](Context& ctx) {
    const Profunctor p = ctx.ws.profunctor(ctx.file(0));
    const bool ok = unit_monic_check(p, ctx.covariant(1).functor, p.target().object(ctx.object()),
                                     ctx.options.budget);
    return Report{{{"monic", ok}}, ok};
  };

  // --------------------------------------------------------------- site
  h["site check"] = [](Context& ctx) {
    ctx.ws.category(ctx.file(0));
    const TopologyReport r = is_topology(ctx.ws.topology(ctx.file(1)));
    Json body{{"topology", r.ok}};
    if (!r.ok) {
      body["axiom"] = r.axiom;
      body["object"] = r.object;
      body["detail"] = r.detail;
    }
    return Report{body, r.ok};
  };
  h["site generate"] = [](Context& ctx) { return Report{to_json(load_site(ctx))}; };
  h["site irreducibles"] = [](Context& ctx) {
    const Topology t = load_site(ctx);
    return Report{{{"irreducibles", names(t.base, irreducibles(t))}}};
  };
  h["site rigid"] = [](Context& ctx) {
    const Topology t = load_site(ctx);
    const RigidityReport r = is_rigid(t);
    Json sieves = Json::object();
    Json covering = Json::object();
    for (ObjectIndex x = 0; x < t.base.object_count(); ++x) {
      sieves[t.base.object_name(x)] = to_json(t.base, r.generated[x]);
      covering[t.base.object_name(x)] = static_cast<bool>(r.covering[x]);
    }
    return Report{{{"rigid", r.rigid},
                   {"irreducibles", names(t.base, r.irreducibles)},
                   {"generated", sieves},
                   {"covering", covering}},
                  r.rigid};
  };
  h["site sheaf"] = [](Context& ctx) {
    const Topology t = load_site(ctx);
    const SheafReport r = is_sheaf(ctx.presheaf(2).functor, t, ctx.options.budget);
    Json body{{"sheaf", r.sheaf}};
    if (!r.sheaf) {
      body["object"] = r.object;
      body["sieve"] = to_json(t.base, *r.sieve);
      body["sections"] = r.sections;
      body["families"] = r.families;
    }
    return Report{body, r.sheaf};
  };
  h["site dense"] = [](Context& ctx) {
    const Topology t = load_site(ctx);
    const SetFunctor f = ctx.presheaf(2).functor;
    const Subcategory sub = irreducible_subcategory(t);
    Rng rng(ctx.options.seed);
    std::vector<SetFunctor> others;
    for (int k = 0; k < 20; ++k) others.push_back(random_presheaf(rng, sub.category, ctx.options.max));
    const DenseRestrictionReport r = dense_restriction_equivalence(t, f, others, ctx.options.budget);
    const std::size_t sheaves = std::count(r.extensions_are_sheaves.begin(), r.extensions_are_sheaves.end(), true);
    const bool ok = r.comparison_bijective && sheaves == others.size();
    return Report{{{"irreducibles", names(t.base, r.irreducibles)},
                   {"comparison_bijective", r.comparison_bijective},
                   {"extension", to_json(r.extended, true)},
                   {"random_extensions", others.size()},
                   {"random_extensions_sheaves", sheaves}},
                  ok};
  };

  // ------------------------------------------------------ karoubi, equiv
  h["karoubi idempotents"] = [](Context& ctx) {
    const Category c = ctx.ws.category(ctx.file(0));
    Json list = Json::array();
    for (const Idempotent& i : idempotents(c)) {
      list.push_back({{"object", c.object_name(i.object)}, {"arrow", c.arrow_name(i.arrow)},
                      {"identity", i.is_identity}});
    }
    return Report{{{"idempotents", list}}};
  };
  h["karoubi envelope"] = [](Context& ctx) {
    const KaroubiEnvelope k = karoubi_envelope(ctx.ws.category(ctx.file(0)));
    return Report{{{"category", to_json(k.category)}, {"embedding", to_json(k.embedding)["objects"]}}};
  };
  h["karoubi complete"] = [](Context& ctx) {
    const Category c = ctx.ws.category(ctx.file(0));
    Json unsplit = Json::array();
    for (const Idempotent& i : idempotents(c)) {
      if (!i.is_identity && !split(c, i.arrow)) unsplit.push_back(c.arrow_name(i.arrow));
    }
    return Report{{{"cauchy_complete", unsplit.empty()}, {"unsplit", unsplit}}, unsplit.empty()};
  };
  h["equiv check"] = [](Context& ctx) {
    const Category a = ctx.ws.category(ctx.file(0));
    const Category b = ctx.ws.category(ctx.file(1));
    const EquivalenceResult r = equivalent_categories(a, b, ctx.options.budget);
    Json body{{"equivalent", r.equivalent}, {"functors_examined", r.functors_examined}};
    if (r.witness) {
      body["forward"] = to_json(r.witness->forward)["objects"];
      body["backward"] = to_json(r.witness->backward)["objects"];
    }
    return Report{body, r.equivalent};
  };
  return h;
}

void render(const Json& body, std::ostream& out) {
  if (!body.is_object()) {
    out << body.dump() << "\n";
    return;
  }
  for (auto it = body.begin(); it != body.end(); ++it) {
    const Json& v = it.value();
    if (v.is_string()) {
      out << it.key() << ": " << v.get<std::string>() << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
      out << it.key() << ": [";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out << (k ? ", " : "") << (v[k].is_string() ? v[k].get<std::string>() : v[k].dump());
      }
      out << "]\n";
    } else {
      out << it.key() << ": " << v.dump() << "\n";
    }
  }
}

// ----------------------------------------------------------- self-test

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::string first_failure;
};

void note_failure(SuiteResult& r, std::size_t k, const std::string& why) {
  if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + why;
}

void print_suite(std::ostream& out, const char* name, const SuiteResult& r) {
  out << name << ": " << (r.cases - r.failures - r.skipped) << "/" << r.cases << " passed";
  if (r.skipped) out << ", " << r.skipped << " skipped over budget";
  if (r.failures) out << ", first failure " << r.first_failure;
  out << "\n";
}

}  // namespace

bool selftest(const SelftestOptions& options, std::ostream& out) {
  out << "selftest seed " << options.seed << "\n";
  SuiteResult tensor_suite;
  {
    Rng rng(options.seed);
    for (std::size_t k = 0; k < options.tensor_cases; ++k) {
      ++tensor_suite.cases;
      try {
        const Category c = random_category(rng, {3, 6});
        tensor_commute_check(random_presheaf(rng, c, 3), random_set_functor(rng, c, 3));
      } catch (const Error& e) {
        note_failure(tensor_suite, k, e.what());
      }
    }
  }
  print_suite(out, "tensor_commute_check", tensor_suite);

  SuiteResult flat_suite;
  {
    Rng rng(options.seed + 1);
    for (std::size_t k = 0; k < options.flat_cases; ++k) {
      ++flat_suite.cases;
      try {
        const Category c = random_category(rng, {4, 8});
        const SetFunctor f = rng.chance(0.5) ? random_flat_presheaf(rng, c, 3) : random_presheaf(rng, c, 3);
        if (is_flat(f).flat != is_flat_via_elements(f)) note_failure(flat_suite, k, "criteria disagree");
      } catch (const Error& e) {
        note_failure(flat_suite, k, e.what());
      }
    }
  }
  print_suite(out, "flat_agreement", flat_suite);

  SuiteResult adjunction_suite;
  {
    Rng rng(options.seed + 2);
    constexpr std::uint64_t kBudget = 200'000;
    for (std::size_t k = 0; k < options.adjunction_cases; ++k) {
      ++adjunction_suite.cases;
      try {
        const Category c = random_category(rng, {2, 4});
        const Category d = random_category(rng, {2, 4});
        const Profunctor p = random_profunctor(rng, c, d, 2);
        const SetFunctor f = random_set_functor(rng, d, 2);
        const SetFunctor g = random_set_functor(rng, c, 2);
        const TriangleReport t = triangle_identities(p, f, g, kBudget);
        const AdjunctionBijection b = adjunction_bijection(p, f, g, kBudget);
        if (!t.tilde_side || !t.r_side) note_failure(adjunction_suite, k, "triangle identity fails");
        else if (!b.mutually_inverse) note_failure(adjunction_suite, k, "hom bijection is not inverse");
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kSearchBudgetExceeded) {
          ++adjunction_suite.skipped;
        } else {
          note_failure(adjunction_suite, k, e.what());
        }
      }
    }
  }
  print_suite(out, "adjunction_triangles", adjunction_suite);

  const bool ok = tensor_suite.failures + flat_suite.failures + adjunction_suite.failures == 0;
  out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok;
}

std::vector<std::string> commands() {
  std::vector<std::string> out;
  for (const auto& [name, handler] : handlers()) out.push_back(name);
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, set-valued functors and their constructions", "fincat"};
  std::vector<std::string> words;
  Options options;
  bool run_selftest = false;
  app.add_option("command", words, "<noun> <verb> [files...]; files may be @- for stdin");
  app.add_flag("--json", options.json, "JSON output");
  app.add_option("--budget", options.budget, "search node budget");
  app.add_option("--seed", options.seed, "seed for randomized suites");
  app.add_option("--object", options.object, "object id argument");
  app.add_option("--max", options.max, "largest value set for generated functors");
  app.add_flag("--selftest", run_selftest, "run the built-in suites");
  app.footer("Commands:\n  " + [] {
    std::string s;
    for (const std::string& c : commands()) s += c + "\n  ";
    return s;
  }());
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "Usage: " << e.what() << "\n";
    return kInputError;
  }

  if (run_selftest) {
    SelftestOptions st;
    st.seed = options.seed;
    return selftest(st, out) ? kOk : kNegative;
  }
  if (words.size() < 2) {
    err << "Usage: expected <noun> <verb> [files...]; see --help\n";
    return kInputError;
  }
  const auto table = handlers();
  const auto it = table.find(words[0] + " " + words[1]);
  if (it == table.end()) {
    err << "Usage: unknown command '" << words[0] << " " << words[1] << "'\n";
    return kInputError;
  }
  Workspace ws(in);
  Context ctx{ws, std::vector<std::string>(words.begin() + 2, words.end()), options};
  try {
    const Report report = it->second(ctx);
    if (options.json) {
      out << report.body.dump(2) << "\n";
    } else {
      render(report.body, out);
    }
    return report.positive ? kOk : kNegative;
  } catch (const Error& e) {
    if (options.json) {
      out << Json{{"error", std::string(error_name(e.kind()))}, {"detail", e.detail()}}.dump(2) << "\n";
    } else {
      err << e.what() << "\n";
    }
    return exit_code(e.kind());
  }
}

}  // namespace fincat::cli
