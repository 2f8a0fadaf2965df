#include "mmdseg/cli.hpp"

int main(int argc, char** argv) { return mmdseg::cli::main(argc, argv); }
