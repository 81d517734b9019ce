#include "corespectra/cli.hpp"

int main(int argc, char** argv) { return corespectra::cli_main(argc, argv); }
