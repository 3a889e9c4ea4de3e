#ifndef QND_CLI_HPP_
#define QND_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qnd::cli {

inline constexpr int kExitOk     = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage  = 2;

//! Runs one command line (without the program name). Regular output goes to
//! out, diagnostics to err. Returns the process exit status.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace qnd::cli

#endif  // QND_CLI_HPP_
