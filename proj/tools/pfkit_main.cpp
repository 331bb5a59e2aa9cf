#include "cli.hpp"

int main(int argc, char** argv) { return pfkit_cli::run(argc, argv); }
