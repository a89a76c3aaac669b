#ifndef MATVOL_TOOLS_CLI_HPP
#define MATVOL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace matvol::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kBudgetExceeded = 3;
inline constexpr int kSelftestFailed = 4;

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Invariant sweeps over all instances with n <= 6.
std::vector<SelftestCheck> run_selftest();

}  // namespace matvol::cli

#endif  // MATVOL_TOOLS_CLI_HPP
