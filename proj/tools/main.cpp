#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const bool color = std::getenv("HEDGERES_NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return hedgeres::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, color);
}
