#include "cli.hpp"

int main(int argc, char** argv) { return grmin::cli::run(argc, argv); }
