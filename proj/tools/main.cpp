#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int exit_code = 0;
  const auto spec = batchlp::cli::parse_command_line(argc, argv, exit_code);
  if (!spec) return exit_code;
  return batchlp::cli::run(*spec, std::cout, std::cerr);
}
