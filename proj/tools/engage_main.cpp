// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "engage/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return engage::cli::run(args, std::cin, std::cout, std::cerr);
}
