#pragma once

#include <ostream>

namespace relca {

// Exit status: 0 success, 1 domain error (or a negative `check` verdict),
// 2 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relca
