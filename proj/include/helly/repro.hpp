// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_REPRO_HPP
#define HELLY_REPRO_HPP

#include <string>
#include <vector>

namespace helly {

struct ReproResult {
    bool pass = false;
    std::string detail;
};

/// Identifiers of the named reproduction runs, sorted.
std::vector<std::string> repro_ids();

/// Runs one reproduction. ValidationError on an unknown id; library errors propagate.
ReproResult run_repro(const std::string &id);

} // namespace helly

#endif
