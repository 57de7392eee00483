#include "fincat/workspace.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "fincat/fixtures.hpp"

namespace fincat {

const char* binding_kind(const Binding& b) {
  switch (b.index()) {
    case 0: return "category";
    case 1: return "functor";
    case 2: return "set functor";
    case 3: return "profunctor";
    default: return "topology";
  }
}

Workspace::Workspace(std::istream& stdin_stream) : stdin_(stdin_stream) {}

std::string Workspace::binding_name(const std::string& ref) {
  if (ref == "@-") return "stdin";
  return std::filesystem::path(ref).stem().string();
}

std::string Workspace::read(const std::string& ref) {
  if (ref == "@-") {
    return std::string(std::istreambuf_iterator<char>(stdin_), std::istreambuf_iterator<char>());
  }
  std::ifstream in(ref);
  if (!in) throw Error(ErrorKind::kParseError, "cannot read '" + ref + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Workspace::bind(const std::string& name, Binding value) {
  if (bindings_.count(name)) throw Error(ErrorKind::kDuplicateId, "binding '" + name + "' already exists");
  if (const Category* c = std::get_if<Category>(&value)) last_category_ = *c;
  bindings_.emplace(name, std::move(value));
}

const Binding* Workspace::find(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::optional<Category> Workspace::resolve_category(const std::string& name) const {
  if (const Binding* b = find(name)) {
    if (const Category* c = std::get_if<Category>(b)) return *c;
  }
  for (const auto& [fixture, c] : fixtures::all()) {
    if (fixture == name) return c;
  }
  return std::nullopt;
}

const Binding& Workspace::load(const std::string& ref) {
  if (auto it = loaded_.find(ref); it != loaded_.end()) return bindings_.at(it->second);
  const std::string name = binding_name(ref);
  const json_io::Json j = json_io::parse(read(ref));
  if (!j.is_object()) throw Error(ErrorKind::kParseError, "'" + ref + "' does not hold a JSON object");
  const json_io::CategoryResolver resolve = [this](const std::string& n) { return resolve_category(n); };
  Binding value = Category();
  if (j.contains("covers")) {
    std::optional<Category> base;
    if (j.contains("base")) {
      base = json_io::category_from_json(j["base"], resolve);
    } else {
      base = last_category_;
    }
    if (!base) throw Error(ErrorKind::kParseError, "topology '" + ref + "' has no base category");
    value = json_io::topology_from_json(*base, j);
  } else if (j.contains("values")) {
    value = json_io::profunctor_from_json(j, resolve);
  } else if (j.contains("sets")) {
    value = json_io::set_functor_from_json(j, resolve);
  } else if (j.contains("source") && j.contains("target")) {
    value = json_io::functor_from_json(j, resolve);
  } else {
    value = json_io::category_from_json(j, resolve);
  }
  bind(name, std::move(value));
  loaded_[ref] = name;
  return bindings_.at(name);
}

namespace {

template <typename T>
const T& expect(const Binding& b, const std::string& ref, const char* kind) {
  if (const T* v = std::get_if<T>(&b)) return *v;
  throw Error(ErrorKind::kParseError,
              "'" + ref + "' holds a " + binding_kind(b) + ", expected a " + kind);
}

}  // namespace

Category Workspace::category(const std::string& ref) {
  if (!loaded_.count(ref) && ref != "@-" && !std::filesystem::exists(ref)) {
    if (auto c = resolve_category(ref)) {
      last_category_ = *c;
      return *c;
    }
  }
  return expect<Category>(load(ref), ref, "category");
}

Functor Workspace::functor(const std::string& ref) { return expect<Functor>(load(ref), ref, "functor"); }

json_io::LoadedSetFunctor Workspace::set_functor(const std::string& ref) {
  return expect<json_io::LoadedSetFunctor>(load(ref), ref, "set functor");
}

Profunctor Workspace::profunctor(const std::string& ref) {
  return expect<Profunctor>(load(ref), ref, "profunctor");
}

Topology Workspace::topology(const std::string& ref) { return expect<Topology>(load(ref), ref, "topology"); }

}  // namespace fincat
