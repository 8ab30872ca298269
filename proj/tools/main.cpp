#include "cli.hpp"

int main(int argc, char** argv) { return burgers::cli::run_cli(argc, argv); }
