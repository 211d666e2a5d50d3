#include "dfw/cli.hpp"

int main(int argc, char** argv) { return dfw::cli::run(argc, argv, std::cout, std::cerr); }
