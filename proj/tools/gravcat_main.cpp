#include "gravcat/cli.hpp"

int main(int argc, char** argv) {
    return gravcat::cli::cli_main(argc, argv);
}
