#pragma once

#include <ostream>
#include <string_view>

namespace pikiln {

/// Runs a verification suite ("all", "series", "products" or "bruno") at the
/// given digits, writing one "PASS name ..." or "FAIL name ..." line per
/// check. Output depends only on the arguments, never on timing or thread
/// count. Returns true when every check passes. Throws InvalidArgument for
/// an unknown suite.
bool run_verify(std::string_view suite, unsigned digits, std::ostream& out);

} // namespace pikiln
