#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prismcurv {

/// Environment variable holding the default output directory.
inline constexpr const char* kOutDirEnv = "PRISMCURV_OUT";

/// Entry point shared by the executable and the tests. Returns 0 on success,
/// 1 when a hard verification check fails and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Turns `key=value` lines into `--key=value` arguments. Blank lines and
/// lines starting with `#` are skipped; a bare `key` becomes `--key`.
std::vector<std::string> config_file_args(const std::string& path);

}  // namespace prismcurv
