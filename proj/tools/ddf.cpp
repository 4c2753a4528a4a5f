#include "ddf/cli.hpp"

int main(int argc, char** argv) { return ddf::cli::run(argc, argv); }
