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

#include "metrics/metrics.hpp"
#include "relaying/budget.hpp"
#include "relaying/relaying.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace riscascade::scenario
{
    enum class Link
    {
        end_to_end,
        fso,
        r2v
    };

    enum class SweepAxis
    {
        power_dbm, // link budgets give the mean SNRs
        snr_db     // every link at the same mean SNR; RF referred to the nominal last-hop distance
    };

    struct Curve
    {
        std::string label;
        Link link = Link::end_to_end;
        relaying::Scenario scenario; // scale is filled per sweep point
        relaying::FsoLinkBudget fso_budget;
        relaying::RfLinkBudget rf_budget;
    };

    struct Config
    {
        std::string name;
        SweepAxis axis = SweepAxis::power_dbm;
        std::vector<double> grid;
        double gamma_th = 1.0; // linear
        metrics::ModulationParams modulation;
        std::uint64_t seed = 1;
        std::uint64_t samples = 1'000'000;
        unsigned workers = 1;
        std::vector<Curve> curves;
    };

    // Throws ConfigError naming the offending field.
    Config parse_config(const std::string &yaml);
    Config load_config_file(const std::string &path);
    Config load_preset(const std::string &name);
    std::vector<std::string> preset_names();
    const std::string &preset_text(const std::string &name);

    cascade::SnrScale scale_at(const Curve &c, SweepAxis axis, double value);
    relaying::Scenario scenario_at(const Curve &c, SweepAxis axis, double value);
}
