#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdc {

/// Exit codes: 0 success, 1 verification ran and found a discrepancy (or a
/// coloring failed its check), 2 usage or I/O error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace rdc
