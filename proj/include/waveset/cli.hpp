#pragma once

namespace waveset {

// Batch front end. Exit codes: 0 success/pass, 1 mathematical failure
// (witness JSON on stdout), 2 usage or domain error.
int run_cli(int argc, char** argv);

}  // namespace waveset
