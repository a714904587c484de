#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const lrm::cli::CommandResult r = lrm::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
