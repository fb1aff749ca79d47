#include "fanohyp/cli.hpp"

int main(int argc, char** argv) { return fanohyp::cli::run(argc, argv); }
