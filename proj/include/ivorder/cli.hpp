#ifndef IVORDER_CLI_HPP
#define IVORDER_CLI_HPP

#include <iosfwd>

namespace ivorder::cli {

enum ExitStatus : int {
    holds = 0,    ///< holds / feasible / valid
    negative = 1, ///< definite negative; the report carries a witness or certificate
    bad_input = 2,
};

/// Parses argv, dispatches the verb and writes one JSON report to `out`.
/// Usage and input errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ivorder::cli

#endif
