#include "cli.hpp"

int main(int argc, char** argv) { return vplms::cli::main(argc, argv); }
