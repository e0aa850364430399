#include <iostream>

#include "mwkit/cli.hpp"

int main(int argc, char** argv) {
  return mwkit::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
