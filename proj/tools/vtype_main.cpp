#include "vtype/cli.hpp"

int main(int argc, char** argv) { return vtype::cli::run(argc, argv); }
