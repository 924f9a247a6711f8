#include "cli/run.hpp"

int main(int argc, char** argv) { return viscowave::cli::run_main(argc, argv); }
