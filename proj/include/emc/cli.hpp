#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace emc::cli {

// Exit status contract: 0 = completed, no violations; 1 = usage/input
// error; 2 = claim violation found (a finding, written out as evidence).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

struct RunConfig {
  unsigned n = 0;
  unsigned k = 0;
  unsigned s = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t count = 0;
  bool count_set = false;
  std::uint64_t budget = 0;
  bool paranoid = false;
  std::string in_path;
  std::string out_path;
};

int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lemmas(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_hunt(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace emc::cli
