#include "hardy/experiments.hpp"

int main(int argc, char** argv) { return hardy::cli_main(argc, argv); }
