#include <cstring>
#include <iostream>

#include "golden.hpp"

int main(int argc, char** argv) {
  bool update = argc > 1 && std::strcmp(argv[1], "--update") == 0;
  golden::Summary s = golden::check(update);
  if (update) {
    std::cout << "wrote " << s.cases << " expected transcripts\n";
    return 0;
  }
  for (const auto& n : s.missing) std::cout << "missing expected file: " << n << "\n";
  for (const auto& n : s.mismatched) std::cout << "transcript differs: " << n << "\n";
  std::cout << s.cases - s.missing.size() - s.mismatched.size() << "/" << s.cases << " golden cases match\n";
  return s.passed() ? 0 : 1;
}
