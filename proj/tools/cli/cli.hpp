#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetmult::cli {

enum class Command { ideal, jet_general, components, verify };
enum class Format { table, json, csv };

/// Base of the default seed sequence used by `verify` when neither --seeds
/// nor --random is given; JETMULT_SEED replaces it.
inline constexpr std::uint64_t kDefaultSeedBase = 20061018;

struct Request {
  Command command = Command::components;
  std::optional<std::uint32_t> r;
  std::uint32_t m = 0;
  std::vector<std::string> polynomials;
  Format format = Format::table;
  std::vector<std::uint64_t> seeds;
  std::uint32_t trials = 2;
  bool random_seeds = false;
  unsigned jobs = 0;
  std::optional<std::string> out_path;
  std::optional<std::uint32_t> ambient;
  std::uint32_t value_bound = 100;
  std::uint32_t max_truncation = 64;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Bad arguments or input text; maps to kExitUsage.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what, std::string kind = "usage", std::size_t line = 0,
                      std::size_t column = 0)
      : std::invalid_argument(what), kind_(std::move(kind)), line_(line), column_(column) {}

  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::string kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Environment inputs, split out so tests can pin them.
struct Environment {
  std::optional<std::string> seed_base;

  static Environment from_process();
};

/// Parses command-line arguments (without the program name). Throws
/// UsageError on invalid input. Returns nullopt after printing help.
std::optional<Request> parse_request(std::span<const std::string> args, std::ostream& out);

/// Seeds for `verify`: explicit --seeds, else entropy with --random, else
/// base, base + 1, ... with base from JETMULT_SEED or kDefaultSeedBase.
std::vector<std::uint64_t> resolve_seeds(const Request& req, const Environment& env);

/// Executes a validated request, writing the emission to `out` (or the
/// --out file). Returns the process exit code.
int run(const Request& req, std::ostream& out, std::ostream& err, const Environment& env);

/// parse_request + run with the error reporting contract: exit 2 for
/// usage and parse errors, with a JSON error object on `err` when
/// --format json was requested.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Environment& env);

}  // namespace jetmult::cli
