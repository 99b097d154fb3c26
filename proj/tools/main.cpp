#include "burnside/cli.hpp"

int main(int argc, char** argv) { return burnside::run_cli(argc, argv); }
