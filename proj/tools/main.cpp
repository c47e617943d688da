#include "pbasic/cli.hpp"

int main(int argc, char** argv) { return pbasic::run_cli(argc, argv); }
