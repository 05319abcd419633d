#include "vknot/cli.hpp"

int main(int argc, char** argv) { return vknot::cli::run(argc, argv); }
