#ifndef BRAIDFORCE_CLI_HPP
#define BRAIDFORCE_CLI_HPP

#include <iosfwd>

namespace braidforce {

/// Exit codes: 0 success, 1 verdict blocked by search bounds, 2 usage or
/// parse error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidforce

#endif  // BRAIDFORCE_CLI_HPP
