#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pforge/error.hpp"
#include "pforge/io.hpp"

namespace pforge::testing {

namespace fs = std::filesystem;

struct GoldenCase {
  std::string name;
  int exit_code = 0;
  std::string args;
};

struct RunResult {
  std::string output;  // stdout followed by stderr
  int exit_code = -1;
};

inline std::vector<GoldenCase> load_cases(const fs::path& golden) {
  std::ifstream in(golden / "cases.txt");
  std::vector<GoldenCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    GoldenCase c;
    ls >> c.name >> c.exit_code;
    std::getline(ls >> std::ws, c.args);
    out.push_back(c);
  }
  return out;
}

inline RunResult run_cli(const std::string& cli, const fs::path& golden, const std::string& args) {
  std::string cmd = "cd '" + (golden / "inputs").string() + "' && PFORGE_COLOR=0 '" + cli + "' " +
                    args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

/// parse(print(x)) == x and print(parse(print(x))) == print(x) for one input
/// file. Returns an empty string on success, a description otherwise.
inline std::string roundtrip_file(const fs::path& file) {
  io::Json j = io::read_file(file.string());
  auto stable = [&](auto read, auto write) -> std::string {
    auto x = read(j);
    std::string once = io::dump(write(x));
    auto y = read(io::parse_text(once));
    if (!(write(y) == write(x))) return "value changed";
    if (io::dump(write(y)) != once) return "printing not stable";
    return {};
  };
  if (j.is_object() && j.contains("terms")) {
    if (j.contains("kind"))
      return stable(io::to_form, io::from_form);
    return stable(io::to_multivector, io::from_multivector);
  }
  if (j.is_object() && j.contains("mult")) return stable(io::to_algebra, io::from_algebra);
  if (j.is_object() && j.contains("c")) return stable(io::to_lie, io::from_lie);
  if (j.is_array() && !j.empty() && j[0].is_string()) {
    std::size_t n = 0;
    for (const auto& s : j) n = std::max(n, Poly::infer_nvars(s.get<std::string>()));
    return stable([n](const io::Json& v) { return io::to_polys(v, n); }, io::from_polys);
  }
  if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
    std::size_t dim = j[0].size();
    return stable([dim](const io::Json& v) { return io::to_endos(v, dim); }, io::from_endos);
  }
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    std::size_t dim = j[0].size();
    return stable([dim](const io::Json& v) { return io::to_subspace(v, dim); }, io::from_subspace);
  }
  return "unrecognized input shape";
}

}  // namespace pforge::testing
