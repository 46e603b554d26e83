#include "torigen/cli.hpp"

int main(int argc, char** argv) {
    return torigen::run(argc, argv);
}
