// Command-line front end.
//
//   analyze  <fan> [--format json|text]
//   beta     <fan> --divisor c1,...,cd
//   sweep    <fan> --ray i [--max-N 40]
//   position <fan> --rays i,j,...
//   certify  <fan> --route B|C --rays i,j,... [--reference i]
//   catalog  [name] [--export]
//
// <fan> is a built-in catalog name, a name from $TORIC_KSTAB_CATALOG_DIR,
// a fan JSON file, or "-" for standard input.
//
// Exit codes: 0 success, 1 invalid certificate, 2 input error, 3 internal error.

#ifndef TORIC_TOOLS_CLI_HPP
#define TORIC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidCertificate = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toric::cli

#endif  // TORIC_TOOLS_CLI_HPP
