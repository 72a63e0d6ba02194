#include <iostream>

#include "tauchart/io/cli.hpp"

int main(int argc, char** argv) {
    return tauchart::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
