#include "fincat/json_io.hpp"

namespace fincat::json_io {

namespace {

[[noreturn]] void fail(const std::string& detail) { throw Error(ErrorKind::kParseError, detail); }

const Json& field(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) fail(std::string(context) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(context) + " lacks \"" + key + "\"");
  return *it;
}

std::string text(const Json& j, const char* context) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(std::string(context) + " must be a string");
}

Category category_field(const Json& j, const char* key, const char* context,
                        const CategoryResolver& resolve) {
  const Json& v = field(j, key, context);
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    if (resolve) {
      if (auto c = resolve(name)) return *c;
    }
    fail("unknown category '" + name + "'");
  }
  return category_from_json(v, resolve);
}

std::map<std::string, std::string> string_map(const Json& j, const char* context) {
  if (!j.is_object()) fail(std::string(context) + " must be a JSON object");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = text(it.value(), context);
  return out;
}

// sets keyed by object of `base`, maps keyed by arrow of `base`.
SetFunctor build_set_functor(const Category& base, const Json& sets_json, const Json& maps_json) {
  if (!sets_json.is_object()) fail("\"sets\" must be a JSON object");
  if (!maps_json.is_object()) fail("\"maps\" must be a JSON object");
  for (auto it = sets_json.begin(); it != sets_json.end(); ++it) base.object(it.key());
  for (auto it = maps_json.begin(); it != maps_json.end(); ++it) base.arrow(it.key());
  std::vector<std::vector<std::string>> sets(base.object_count());
  for (ObjectIndex c = 0; c < base.object_count(); ++c) {
    auto it = sets_json.find(base.object_name(c));
    if (it == sets_json.end()) fail("no set for object '" + base.object_name(c) + "'");
    if (!it->is_array()) fail("set of '" + base.object_name(c) + "' must be an array");
    for (const Json& e : *it) sets[c].push_back(text(e, "element"));
  }
  auto index_of = [&](ObjectIndex c, const std::string& e) -> std::size_t {
    for (std::size_t k = 0; k < sets[c].size(); ++k) {
      if (sets[c][k] == e) return k;
    }
    throw Error(ErrorKind::kUnknownElement,
                "'" + e + "' is not an element over '" + base.object_name(c) + "'");
  };
  std::vector<std::vector<std::size_t>> maps(base.arrow_count());
  for (ArrowIndex f = 0; f < base.arrow_count(); ++f) {
    const ObjectIndex a = base.dom(f);
    const ObjectIndex b = base.cod(f);
    auto it = maps_json.find(base.arrow_name(f));
    if (it == maps_json.end()) {
      if (!base.is_identity(f)) fail("no map for arrow '" + base.arrow_name(f) + "'");
      for (std::size_t x = 0; x < sets[a].size(); ++x) maps[f].push_back(x);
      continue;
    }
    const auto m = string_map(*it, "map");
    for (const auto& [from, to] : m) index_of(a, from);
    for (const std::string& x : sets[a]) {
      auto e = m.find(x);
      if (e == m.end()) fail("map of '" + base.arrow_name(f) + "' is not defined on '" + x + "'");
      maps[f].push_back(index_of(b, e->second));
    }
  }
  return SetFunctor(base, std::move(sets), std::move(maps));
}

Json sets_json(const SetFunctor& f) {
  Json sets = Json::object();
  for (ObjectIndex c = 0; c < f.base().object_count(); ++c) sets[f.base().object_name(c)] = f.set(c);
  return sets;
}

Json maps_json(const SetFunctor& f) {
  Json maps = Json::object();
  const Category& b = f.base();
  for (ArrowIndex a = 0; a < b.arrow_count(); ++a) {
    if (b.is_identity(a)) continue;
    Json m = Json::object();
    for (std::size_t x = 0; x < f.size(b.dom(a)); ++x) {
      m[f.element(b.dom(a), x)] = f.element(b.cod(a), f.apply(a, x));
    }
    maps[b.arrow_name(a)] = std::move(m);
  }
  return maps;
}

}  // namespace

Json parse(const std::string& input) {
  try {
    return Json::parse(input);
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

RawCategory raw_category_from_json(const Json& j) {
  RawCategory raw;
  const Json& objects = field(j, "objects", "category");
  if (!objects.is_array()) fail("\"objects\" must be an array");
  for (const Json& o : objects) raw.objects.push_back(text(o, "object id"));
  const Json& arrows = field(j, "arrows", "category");
  if (!arrows.is_array()) fail("\"arrows\" must be an array");
  for (const Json& a : arrows) {
    raw.arrows.push_back({text(field(a, "id", "arrow"), "arrow id"), text(field(a, "dom", "arrow"), "dom"),
                          text(field(a, "cod", "arrow"), "cod")});
  }
  if (j.contains("identity")) raw.identity = string_map(j["identity"], "\"identity\"");
  if (j.contains("compose")) {
    if (!j["compose"].is_array()) fail("\"compose\" must be an array");
    for (const Json& e : j["compose"]) {
      raw.compose.push_back({text(field(e, "g", "composite"), "g"), text(field(e, "f", "composite"), "f"),
                             text(field(e, "gf", "composite"), "gf")});
    }
  }
  return raw;
}

Category category_from_json(const Json& j, const CategoryResolver& resolve) {
  if (j.is_string()) {
    if (resolve) {
      if (auto c = resolve(j.get<std::string>())) return *c;
    }
    fail("unknown category '" + j.get<std::string>() + "'");
  }
  RawCategory raw = raw_category_from_json(j);
  raw.add_unit_laws();
  return validate_category(raw);
}

Json to_json(const Category& c) {
  Json j;
  j["objects"] = c.object_names();
  Json arrows = Json::array();
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    arrows.push_back({{"id", c.arrow_name(f)},
                      {"dom", c.object_name(c.dom(f))},
                      {"cod", c.object_name(c.cod(f))}});
  }
  j["arrows"] = std::move(arrows);
  Json identity = Json::object();
  for (ObjectIndex x = 0; x < c.object_count(); ++x) identity[c.object_name(x)] = c.arrow_name(c.identity(x));
  j["identity"] = std::move(identity);
  Json compose = Json::array();
  for (ArrowIndex g = 0; g < c.arrow_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (ArrowIndex f : c.arrows_into(c.dom(g))) {
      if (c.is_identity(f)) continue;
      compose.push_back({{"g", c.arrow_name(g)}, {"f", c.arrow_name(f)}, {"gf", c.arrow_name(c.compose(g, f))}});
    }
  }
  j["compose"] = std::move(compose);
  return j;
}

Functor functor_from_json(const Json& j, const CategoryResolver& resolve) {
  Category source = category_field(j, "source", "functor", resolve);
  Category target = category_field(j, "target", "functor", resolve);
  const auto objects = string_map(field(j, "objects", "functor"), "\"objects\"");
  const auto arrows = j.contains("arrows") ? string_map(j["arrows"], "\"arrows\"")
                                           : std::map<std::string, std::string>{};
  return Functor::from_names(std::move(source), std::move(target), objects, arrows);
}

Json to_json(const Functor& f) {
  Json j;
  j["source"] = to_json(f.source());
  j["target"] = to_json(f.target());
  Json objects = Json::object();
  for (ObjectIndex x = 0; x < f.source().object_count(); ++x) {
    objects[f.source().object_name(x)] = f.target().object_name(f.on_object(x));
  }
  Json arrows = Json::object();
  for (ArrowIndex a = 0; a < f.source().arrow_count(); ++a) {
    arrows[f.source().arrow_name(a)] = f.target().arrow_name(f.on_arrow(a));
  }
  j["objects"] = std::move(objects);
  j["arrows"] = std::move(arrows);
  return j;
}

LoadedSetFunctor set_functor_from_json(const Json& j, const CategoryResolver& resolve) {
  Category c = category_field(j, "base", "set functor", resolve);
  bool presheaf = false;
  if (j.contains("variance")) {
    const std::string v = text(j["variance"], "\"variance\"");
    if (v == "presheaf") {
      presheaf = true;
    } else if (v != "covariant") {
      fail("\"variance\" must be \"covariant\" or \"presheaf\"");
    }
  }
  const Category base = presheaf ? opposite(c) : c;
  SetFunctor f = build_set_functor(base, field(j, "sets", "set functor"), field(j, "maps", "set functor"));
  return {std::move(f), std::move(c), presheaf};
}

Json to_json(const SetFunctor& f, bool presheaf) {
  Json j;
  j["base"] = to_json(presheaf ? opposite(f.base()) : f.base());
  j["variance"] = presheaf ? "presheaf" : "covariant";
  j["sets"] = sets_json(f);
  j["maps"] = maps_json(f);
  return j;
}

Profunctor profunctor_from_json(const Json& j, const CategoryResolver& resolve) {
  Category c = category_field(j, "source", "profunctor", resolve);
  Category d = category_field(j, "target", "profunctor", resolve);
  const Category d_op = opposite(d);
  const Json& values_json = field(j, "values", "profunctor");
  if (!values_json.is_object()) fail("\"values\" must be a JSON object");
  std::vector<SetFunctor> values;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    auto it = values_json.find(c.object_name(x));
    if (it == values_json.end()) fail("no value for object '" + c.object_name(x) + "'");
    values.push_back(build_set_functor(d_op, field(*it, "sets", "value"), field(*it, "maps", "value")));
  }
  const Json actions_json = j.contains("actions") ? j["actions"] : Json::object();
  if (!actions_json.is_object()) fail("\"actions\" must be a JSON object");
  for (auto it = actions_json.begin(); it != actions_json.end(); ++it) c.arrow(it.key());
  std::vector<NatTransformation> actions;
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    const SetFunctor& from = values[c.dom(f)];
    const SetFunctor& to = values[c.cod(f)];
    auto it = actions_json.find(c.arrow_name(f));
    if (it == actions_json.end()) {
      if (!c.is_identity(f)) fail("no action for arrow '" + c.arrow_name(f) + "'");
      actions.push_back(NatTransformation::identity(from));
      continue;
    }
    if (!it->is_object()) fail("action must be a JSON object");
    std::vector<std::vector<std::size_t>> comps(d.object_count());
    for (ObjectIndex y = 0; y < d.object_count(); ++y) {
      auto comp = it->find(d.object_name(y));
      if (comp == it->end()) {
        fail("action of '" + c.arrow_name(f) + "' lacks a component at '" + d.object_name(y) + "'");
      }
      const auto m = string_map(*comp, "component");
      for (std::size_t x = 0; x < from.size(y); ++x) {
        auto e = m.find(from.element(y, x));
        if (e == m.end()) fail("component is not defined on '" + from.element(y, x) + "'");
        comps[y].push_back(to.element_index(y, e->second));
      }
    }
    actions.emplace_back(from, to, std::move(comps));
  }
  return Profunctor(std::move(c), std::move(d), std::move(values), std::move(actions));
}

Json to_json(const Profunctor& p) {
  Json j;
  j["source"] = to_json(p.source());
  j["target"] = to_json(p.target());
  Json values = Json::object();
  Json actions = Json::object();
  const Category& c = p.source();
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    values[c.object_name(x)] = {{"sets", sets_json(p.value(x))}, {"maps", maps_json(p.value(x))}};
  }
  for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    actions[c.arrow_name(f)] = to_json(p.action(f))["components"];
  }
  j["values"] = std::move(values);
  j["actions"] = std::move(actions);
  return j;
}

Topology topology_from_json(const Category& base, const Json& j) {
  const Json& covers = field(j, "covers", "topology");
  if (!covers.is_object()) fail("\"covers\" must be a JSON object");
  Topology t{base, std::vector<std::set<Sieve>>(base.object_count())};
  for (auto it = covers.begin(); it != covers.end(); ++it) {
    const ObjectIndex x = base.object(it.key());
    if (!it->is_array()) fail("covers of '" + it.key() + "' must be an array of sieves");
    for (const Json& s : *it) {
      if (!s.is_array()) fail("a sieve must be an array of arrow ids");
      std::vector<ArrowIndex> generators;
      for (const Json& a : s) generators.push_back(base.arrow(text(a, "arrow id")));
      t.covers[x].insert(sieve_generate(base, x, generators));
    }
  }
  return t;
}

Json to_json(const Category& c, const Sieve& s) {
  Json out = Json::array();
  for (ArrowIndex f : s.arrows) out.push_back(c.arrow_name(f));
  return out;
}

Json to_json(const Topology& t) {
  Json covers = Json::object();
  for (ObjectIndex x = 0; x < t.base.object_count(); ++x) {
    Json list = Json::array();
    for (const Sieve& s : t.covers[x]) list.push_back(to_json(t.base, s));
    covers[t.base.object_name(x)] = std::move(list);
  }
  return {{"covers", std::move(covers)}};
}

Json to_json(const QuotientSet& q) {
  Json classes = Json::array();
  for (std::size_t k = 0; k < q.size(); ++k) {
    Json members = Json::array();
    for (const Member& m : q.members(k)) {
      members.push_back({q.part_name(m.part), q.element_name(m.part, m.element)});
    }
    classes.push_back(std::move(members));
  }
  Json injections = Json::object();
  for (std::size_t i = 0; i < q.part_count(); ++i) {
    Json inj = Json::object();
    for (std::size_t x = 0; x < q.part_size(i); ++x) inj[q.element_name(i, x)] = q.class_of(i, x);
    injections[q.part_name(i)] = std::move(inj);
  }
  return {{"classes", std::move(classes)}, {"injections", std::move(injections)}};
}

Json to_json(const NatTransformation& t) {
  const Category& b = t.source().base();
  Json comps = Json::object();
  for (ObjectIndex c = 0; c < b.object_count(); ++c) {
    Json m = Json::object();
    for (std::size_t x = 0; x < t.source().size(c); ++x) {
      m[t.source().element(c, x)] = t.target().element(c, t.apply(c, x));
    }
    comps[b.object_name(c)] = std::move(m);
  }
  return {{"components", std::move(comps)}};
}

}  // namespace fincat::json_io
