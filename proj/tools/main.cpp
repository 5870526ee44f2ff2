#include "qdissect/cli.hpp"

int main(int argc, char** argv) { return qdissect::run_cli(argc, argv); }
