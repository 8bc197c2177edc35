#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "bqsolve/cli.hpp"

int main(int argc, char** argv) {
  const std::string prog =
      argc > 0 ? std::filesystem::path(argv[0]).filename().string()
               : "bqsolve";
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bqsolve::Registry registry = bqsolve::default_registry();
  return bqsolve::run(registry, args, std::cin, std::cout, std::cerr, prog);
}
