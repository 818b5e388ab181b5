#ifndef GL2CC_CLI_HPP_
#define GL2CC_CLI_HPP_

namespace gl2cc {

// count / reps / verify subcommands. Returns the process exit code:
// 0 on success or full agreement, 1 on verification failure, 2 on bad
// usage or a violated precondition.
int run_cli(int argc, const char* const* argv);

}  // namespace gl2cc

#endif
