#include <iostream>

#include "singclass/cli.hpp"

int main(int argc, char** argv) {
  return singclass::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
