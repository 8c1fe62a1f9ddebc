#include "socle3_cli/cli.hpp"

int main(int argc, char** argv) { return socle3::cli::main_entry(argc, argv); }
