#include "gl2cc/cli.hpp"

int main(int argc, char** argv) { return gl2cc::run_cli(argc, argv); }
