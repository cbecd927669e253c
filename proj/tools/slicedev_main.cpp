#include "slicedev/cli.hpp"

int main(int argc, char** argv) { return slicedev::run_cli(argc, argv); }
