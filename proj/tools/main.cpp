#include "entgeo/cli.hpp"

int main(int argc, char** argv) { return entgeo::cli::main_entry(argc, argv); }
