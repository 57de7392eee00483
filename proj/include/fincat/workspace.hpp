#pragma once

// Named, validated values loaded from JSON files for the command line.

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fincat/json_io.hpp"

namespace fincat {

using Binding = std::variant<Category, Functor, json_io::LoadedSetFunctor, Profunctor, Topology>;

const char* binding_kind(const Binding& b);

class Workspace {
 public:
  explicit Workspace(std::istream& stdin_stream);

  /// Loads a file (or stdin for "@-"), detects its kind from its keys,
  /// validates it and binds it under the file stem ("stdin" for "@-").
  /// Loading the same reference twice returns the first binding;
  /// two different references with one stem raise DuplicateId.
  ///
  /// Kinds: "covers" topology, "values" profunctor, "sets" set functor,
  /// "source"+"target" functor, otherwise category. A topology takes its
  /// base from "base" or else from the most recently loaded category.
  const Binding& load(const std::string& ref);

  void bind(const std::string& name, Binding value);
  const Binding* find(const std::string& name) const;

  /// A bound category, or a fixture name (TERM, ARROW2, ...).
  std::optional<Category> resolve_category(const std::string& name) const;

  Category category(const std::string& ref);
  Functor functor(const std::string& ref);
  json_io::LoadedSetFunctor set_functor(const std::string& ref);
  Profunctor profunctor(const std::string& ref);
  Topology topology(const std::string& ref);

  static std::string binding_name(const std::string& ref);

 private:
  std::string read(const std::string& ref);

  std::istream& stdin_;
  std::map<std::string, Binding> bindings_;
  std::map<std::string, std::string> loaded_;  // ref -> name
  std::optional<Category> last_category_;
};

}  // namespace fincat
