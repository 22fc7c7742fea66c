#include "tcov/cli_app.hpp"

int main(int argc, char** argv) { return tcov::run_cli(argc, argv); }
