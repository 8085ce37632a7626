#include <string>
#include <vector>

#include "nqpcd/cli.hpp"

int main(int argc, char** argv) {
    return nqpcd::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
