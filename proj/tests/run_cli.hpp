#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Minimal harness for driving the command-line tool in tests: runs the binary
// through the shell, captures stdout, and parses "key: value" lines.

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::vector<std::string> lines;
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) != 0; }

  const std::string& at(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("missing output key: " + key);
    return it->second;
  }
};

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

inline CliResult run_cli(const std::string& exe, const std::vector<std::string>& args,
                         bool merge_stderr = false) {
  std::string command = shell_quote(exe);
  for (const auto& a : args) command += " " + shell_quote(a);
  command += merge_stderr ? " 2>&1" : " 2>/dev/null";

  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::istringstream in(result.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    result.lines.push_back(line);
    const auto sep = line.find(": ");
    if (sep != std::string::npos) result.kv[line.substr(0, sep)] = line.substr(sep + 2);
  }
  return result;
}
