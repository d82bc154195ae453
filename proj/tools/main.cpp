#include <exception>
#include <iostream>

#include "anscombe/cli.hpp"

int main(int argc, char** argv) {
  try {
    return anscombe::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return anscombe::kExitParameterError;
  }
}
