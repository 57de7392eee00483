#pragma once

// Command-line front end.
//
//   fincat <noun> <verb> [files...] [--json] [--budget N] [--seed N]
//          [--object ID] [--max N]
//   fincat --selftest [--seed N]
//
// Exit codes: 0 success, 1 negative verdict, 2 input or validation error,
// 3 search budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fincat/error.hpp"

namespace fincat::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetExceeded = 3;

int exit_code(ErrorKind kind);

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t tensor_cases = 200;
  std::size_t flat_cases = 500;
  std::size_t adjunction_cases = 40;
};

/// Tensor commutation, flat-criterion agreement and adjunction triangle
/// suites. One line per suite; true when every case passes.
bool selftest(const SelftestOptions& options, std::ostream& out);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Every "<noun> <verb>" pair the dispatcher accepts, sorted.
std::vector<std::string> commands();

}  // namespace fincat::cli
