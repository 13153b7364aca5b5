#pragma once

// Command surface shared by the smcg executable, the Python module and the
// tests. Every command returns its output text and an exit code:
// 0 success, 1 a verified property failed, 2 bad input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smcg/jacobi.hpp"

namespace smcg::cli {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kInputError = 2 };

enum class Format { Json, Table };

struct CommandResult {
  int exit_code;
  std::string output; // stdout
  std::string error;  // stderr
};

class DocumentError : public Error {
public:
  using Error::Error;
};

// ElementDocument: {"r", "modulus", "x", "A"}; integers beyond 64 bits are
// decimal strings.
nlohmann::ordered_json element_to_json(const JacobiElement &g);
JacobiElement element_from_json(const nlohmann::json &doc);
JacobiElement parse_element(const std::string &text);
std::string emit_element(const JacobiElement &g);

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t passed = 0;
  bool ok() const { return checks == passed; }
};

// Runs the invariant suites at rank r (1..6) with the given sample count.
// negative_control adds a tabulated non-cocycle to the cocycle-law suite.
std::vector<SuiteResult> run_verification(Rank r, std::uint64_t samples, std::uint64_t seed, bool negative_control);

CommandResult cmd_orbits(int r, Format format);
CommandResult cmd_split(int p, int r, std::optional<std::int64_t> modulus, Format format);
CommandResult cmd_mul(const std::string &lhs, const std::string &rhs, const std::optional<std::string> &psi);
CommandResult cmd_inv(const std::string &element, const std::optional<std::string> &psi);
CommandResult cmd_verify(int r, std::int64_t samples, std::uint64_t seed, bool negative_control, Format format);
CommandResult cmd_coeff(int jmax, Format format);

// Full argument handling; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace smcg::cli
