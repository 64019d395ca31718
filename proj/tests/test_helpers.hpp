// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

// Fresh per-test scratch directory under the working directory; a unique
// name keeps parallel ctest workers from colliding.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const std::filesystem::path dir = std::filesystem::current_path() / ("scratch_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

// Runs the CLI under test with stdout/stderr captured into the scratch dir.
#ifdef METASURF_CLI_BINARY
inline CliResult run_cli(const std::string& args, const std::filesystem::path& scratch) {
  const std::filesystem::path out_path = scratch / "stdout.txt";
  const std::filesystem::path err_path = scratch / "stderr.txt";
  const std::string cmd = std::string(METASURF_CLI_BINARY) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int raw = std::system(cmd.c_str());
  int code = -1;
  if (raw != -1 && WIFEXITED(raw)) code = WEXITSTATUS(raw);
  return CliResult{code, read_file(out_path), read_file(err_path)};
}
#endif

}  // namespace testutil
