#include <iostream>

#include "unineq/cli.hpp"

int main(int argc, char** argv) { return unineq::cli::dispatch(argc, argv, std::cout, std::cerr); }
