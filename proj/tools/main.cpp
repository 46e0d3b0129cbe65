#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return billiards::cli::dispatch(argc, argv, std::cout, std::cerr); }
