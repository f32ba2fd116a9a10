#include <iostream>
#include <string>
#include <vector>

#include "finring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const finring::cli::CliResult res = finring::cli::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
