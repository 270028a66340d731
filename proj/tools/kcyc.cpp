#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return kcyc::cli::run_cli(argc, argv, std::cout, std::cerr); }
