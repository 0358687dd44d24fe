// SPDX-License-Identifier: MIT

#include "bext/cli.hpp"

int main(int argc, char** argv) { return bext::cli::run(argc, argv); }
