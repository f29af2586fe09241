#include "hyproj/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hyproj::app::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
