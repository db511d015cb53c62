#include "algcensus/cli.hpp"

int main(int argc, char** argv) { return algcensus::cli::run(argc, argv); }
