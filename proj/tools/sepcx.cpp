#include "sepcx/cli.hpp"

int main(int argc, char** argv)
{
    return sepcx::cli::run(argc, argv);
}
