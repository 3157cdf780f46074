#include "cli.hpp"

int main(int argc, char** argv) { return reconkit::cli::run(argc, argv); }
