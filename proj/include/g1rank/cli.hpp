#ifndef G1RANK_CLI_HPP
#define G1RANK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace g1rank {

/// Command-line driver: analyze / chartab / scan / split with table or
/// json output. Returns 0 on success, 2 on usage errors, 1 on
/// computation errors. Deterministic output, no locale or color.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace g1rank

#endif
