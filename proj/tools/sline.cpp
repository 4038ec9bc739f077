#include "sline/cli/app.hpp"

int main(int argc, char** argv) { return sline::cli::run(argc, argv); }
