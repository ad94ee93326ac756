#include "nilrep/cli.hpp"

int main(int argc, char** argv) { return nilrep::cli_main(argc, argv); }
