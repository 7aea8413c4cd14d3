#include "trisum/cli.hpp"

int main(int argc, char** argv) { return trisum::run_cli(argc, argv); }
