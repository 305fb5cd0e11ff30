// riscascade - performance analysis of multi-hop RIS-assisted mixed FSO/RF links
// Copyright (C) 2026 The riscascade authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "scenario/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace riscascade::scenario
{
    enum class Command
    {
        outage,
        ber,
        validate
    };

    enum Method : unsigned
    {
        exact = 1,
        asymptotic = 2,
        mc = 4,
        all = 7
    };

    struct RunOptions
    {
        Command command = Command::outage;
        unsigned methods = Method::all;
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> samples;
        std::optional<unsigned> workers;
    };

    struct SweepOutput
    {
        std::string csv;
        std::size_t failures = 0;          // NaN rows and failed validation checks
        std::vector<std::string> messages; // one line per failure
        std::vector<std::string> warnings; // non-monotone exact curves; informational only
    };

    // CSV with header sweep,metric,method,value,stderr
    SweepOutput run_sweep(const Config &cfg, const RunOptions &opt);

    // shortest round-trip decimal form, "nan" and "inf" for non-finite values
    std::string format_double(double v);
}
