#include "xsolve/cli.hpp"

int main(int argc, char* argv[]) {
    return xsolve::runMain(argc, argv);
}
