#ifndef PGL2Q_CLI_HPP
#define PGL2Q_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pgl2q {

// Command dispatcher. args excludes the program name. Writes results to
// `out` (or to the file named by --out) and diagnostics to `err`. Returns
// 0 on success/verified, 1 on a verification failure, 2 on a usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgl2q

#endif  // PGL2Q_CLI_HPP
