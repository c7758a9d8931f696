#include "cli.hpp"

int main(int argc, char** argv) { return greedylab::cli::main_with_args(argc, argv); }
