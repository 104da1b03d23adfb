#include "prasymp/harness.hpp"

int main(int argc, char** argv) { return prasymp::cli_main(argc, argv); }
