#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dinfty::cli {

enum class OutputFormat { Csv, Json, Pretty };

/// Exit codes are a stable contract for scripts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
  std::string command;      // theorem1, gamma, corollary, rsk, lemmas, hopf, demo
  std::string hopf_verb;    // axioms, pairing, rank, stirling, vanish
  std::optional<long> m, n, t, r, s;
  std::optional<std::string> lambda;  // "p/q"
  std::optional<std::string> matrix;  // "10/01"
  std::optional<std::string> gen;     // E, Phi, Psi
  std::optional<std::string> kind;    // Phi, Psi
  long window = 12;
  OutputFormat output = OutputFormat::Pretty;
  std::uint64_t seed = kDefaultSeed;
  bool force = false;
};

/// Runs one command line (without the program name). Everything goes to
/// out/err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dinfty::cli
