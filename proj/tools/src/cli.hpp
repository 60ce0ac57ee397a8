#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfock {

/// Entry point shared by main() and the in-process CLI tests. args excludes
/// the program name. Returns 0 when every gated check passed, 1 when one
/// failed and 2 for usage or configuration errors (reported on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfock
