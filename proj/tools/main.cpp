#include "cli.hpp"

int main(int argc, char** argv) { return arithmirror::cli::run(argc, argv); }
