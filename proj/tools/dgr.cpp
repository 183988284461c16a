#include "dgr/cli.hpp"

int main(int argc, char** argv) { return dgr::cli::run(argc, argv); }
