#include "elgi/cli/commands.hpp"

int main(int argc, char** argv) { return elgi::cli::run(argc, argv); }
