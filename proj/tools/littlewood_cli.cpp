#include <string>
#include <vector>

#include "littlewood/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return littlewood::cli::run_cli(args);
}
