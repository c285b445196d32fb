#include "redhom/cli.hpp"

int main(int argc, char** argv) { return redhom::cli_main(argc, argv); }
