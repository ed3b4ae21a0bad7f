#include "bicohom/cli.hpp"

int main(int argc, char** argv) { return bicohom::cli::cli_main(argc, argv); }
