#ifndef CTEL_CLI_HPP
#define CTEL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ctel {

// Exit codes: 0 success, 1 input error, 2 degree-capped/incomplete,
// 3 internal limit (exceptional-set cap).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ctel

#endif
