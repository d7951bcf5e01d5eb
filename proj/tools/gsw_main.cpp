#include "gsw/cli/commands.hpp"

int main(int argc, char** argv) { return gsw::cli::run_cli(argc, argv); }
