#include "cli.hpp"

int main(int argc, char** argv) { return cosetgrowth::cli::run(argc, argv); }
