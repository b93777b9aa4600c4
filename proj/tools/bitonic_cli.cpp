#include "bitonic/cli.hpp"

int main(int argc, char** argv) { return bitonic::cli_main(argc, argv); }
