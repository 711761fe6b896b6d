#include "waveset/cli.hpp"

int main(int argc, char** argv) { return waveset::run_cli(argc, argv); }
