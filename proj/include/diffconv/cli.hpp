#ifndef DIFFCONV_CLI_HPP
#define DIFFCONV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace diffconv {

/// Stable exit codes; stderr carries diagnostics, stdout carries data.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;         // demo/roundtrip/trial mismatch, generic failure
inline constexpr int out_of_range = 2;     // invalid parameters or field arithmetic on input
inline constexpr int not_cyclic = 3;       // alpha is not a cyclic vector
inline constexpr int parse = 4;            // unreadable or unparsable input
inline constexpr int beyond_capacity = 5;  // more than tau errors detected
inline constexpr int not_codeword = 6;     // word not in the code
}  // namespace exit_code

/// Dispatches one command; args exclude the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Replays a worked example end to end against embedded golden values.
/// `which` is "p11" or "p5"; perturb flips one golden value as a negative
/// control. Returns exit_code::ok iff every object matches.
int run_demo(const std::string& which, bool perturb, std::ostream& out, std::ostream& err);

}  // namespace diffconv

#endif
