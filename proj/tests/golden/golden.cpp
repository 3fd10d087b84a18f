#include "golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "eqnorm/cli.hpp"

namespace golden {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && (ch == ' ' || ch == '\t')) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += ch;
      any = true;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote in: " + line);
  if (any) out.push_back(cur);
  return out;
}

std::string quote(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"(),[]*") == std::string::npos) return a;
  return "\"" + a + "\"";
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<Case> load_cases(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("golden case without a name: " + line);
    cases.push_back({line.substr(start, colon - start), split_args(line.substr(colon + 1))});
  }
  return cases;
}

std::vector<Case> default_cases() { return load_cases(fs::path(EQNORM_GOLDEN_DIR) / "cases.txt"); }

std::string run_case(const Case& c) {
  setenv("EQNORM_WORKSPACE", (fs::path(EQNORM_GOLDEN_DIR) / "inputs").c_str(), 1);
  std::vector<std::string> args = c.args;
  args.push_back("--cache-dir");
  args.push_back(EQNORM_GOLDEN_CACHE);
  std::ostringstream out, err;
  int code = eqnorm::cli::run_cli(args, out, err);
  std::string t = "$ eqnorm";
  for (const auto& a : c.args) t += " " + quote(a);
  t += "\n" + out.str();
  if (!err.str().empty()) t += "[stderr]\n" + err.str();
  t += "[exit " + std::to_string(code) + "]\n";
  return t;
}

fs::path expected_path(const Case& c) { return fs::path(EQNORM_GOLDEN_DIR) / "expected" / (c.name + ".txt"); }

Summary check(bool update) {
  Summary s;
  for (const Case& c : default_cases()) {
    ++s.cases;
    std::string got = run_case(c);
    fs::path p = expected_path(c);
    if (update) {
      fs::create_directories(p.parent_path());
      std::ofstream(p, std::ios::binary) << got;
      continue;
    }
    if (!fs::exists(p))
      s.missing.push_back(c.name);
    else if (read(p) != got)
      s.mismatched.push_back(c.name);
  }
  return s;
}

}  // namespace golden
