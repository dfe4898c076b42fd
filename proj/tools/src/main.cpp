#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return acurv::cli::run(argc, argv, std::cout, std::cerr); }
