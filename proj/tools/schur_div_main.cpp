#include "schur_div/cli.hpp"

int main(int argc, char** argv) { return schur_div::cli::run(argc, argv); }
