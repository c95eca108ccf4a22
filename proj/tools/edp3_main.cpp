#include "edp3/cli.hpp"

int main(int argc, char** argv) { return edp3::cli::run_cli(argc, argv); }
