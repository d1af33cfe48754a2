#include <sigame/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
	return sigame::cli::run(argc, argv, std::cout, std::cerr);
}
