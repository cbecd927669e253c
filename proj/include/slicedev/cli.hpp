#pragma once

namespace slicedev {

// Exit contract: 0 pass, 1 invariant failure, 2 input validation failure,
// 3 I/O or parse failure.
int run_cli(int argc, const char* const* argv);

}  // namespace slicedev
