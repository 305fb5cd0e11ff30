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

#include "channels/channels.hpp"
#include "metrics/metrics.hpp"
#include "relaying/relaying.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace riscascade::montecarlo
{
    using relaying::Scenario;

    struct SimPlan
    {
        Scenario scenario;
        std::uint64_t samples = 1'000'000;
        std::uint64_t seed = 1;
        unsigned workers = 1;
        std::uint64_t batch = 1u << 16;
    };

    void check(const SimPlan &p);

    struct EmpiricalResult
    {
        double estimate = 0.0;
        double std_error = 0.0;
        std::uint64_t n_effective = 0;
    };

    // squared cascade amplitudes for unit mean SNRs
    struct FadingSample
    {
        double fso = 0.0;
        double rf = 0.0;
        double los = 0.0;
    };

    struct SnrSample
    {
        double fso = 0.0;
        double r2v = 0.0;
        double af = 0.0;
        double df = 0.0;
    };

    FadingSample draw_fading(const Scenario &s, channels::Rng &rng);
    SnrSample combine(const FadingSample &f, const cascade::SnrScale &scale, double c);
    SnrSample draw_end_to_end_snr(const Scenario &s, channels::Rng &rng);

    // generator for batch b, independent of how batches are spread over workers
    channels::Rng batch_rng(std::uint64_t seed, std::uint64_t batch);

    // which SNR the estimators look at; end_to_end follows the relay mode
    enum class Observable
    {
        end_to_end,
        fso,
        r2v
    };

    // Each fading draw is reused for every grid point.
    std::vector<EmpiricalResult> estimate_outage_sweep(const SimPlan &plan, std::span<const cascade::SnrScale> grid,
                                                       double gamma_th, Observable what = Observable::end_to_end);
    std::vector<EmpiricalResult> estimate_ber_sweep(const SimPlan &plan, std::span<const cascade::SnrScale> grid,
                                                    const metrics::ModulationParams &m,
                                                    Observable what = Observable::end_to_end);

    EmpiricalResult estimate_outage(const SimPlan &plan, double gamma_th, Observable what = Observable::end_to_end);
    EmpiricalResult estimate_ber(const SimPlan &plan, const metrics::ModulationParams &m,
                                 Observable what = Observable::end_to_end);
}
