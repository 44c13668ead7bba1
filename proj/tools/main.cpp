#include "graycat/cli.hpp"

int main(int argc, char** argv) { return graycat::run_cli(argc, argv); }
