#include <popkit/cli.hpp>

int main(int argc, char** argv) { return popkit::cli::run_cli(argc, argv); }
