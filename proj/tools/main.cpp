#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const tropkap::cli::CommandResult result = tropkap::cli::run(args);
  std::cout << result.stdout_text();
  if (!result.error.empty()) std::cerr << result.error;
  return result.exit_code;
}
