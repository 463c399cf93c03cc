#include "monocert/cli_app.hpp"

int main(int argc, char** argv) { return monocert::cli::run(argc, argv); }
