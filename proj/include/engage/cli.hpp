// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace engage::cli {

/// Runs one command line (args[0] is the program name). Returns the process
/// exit code: 0 on success, 1 on a runtime failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace engage::cli
