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

#include "montecarlo/simulate.hpp"

#include "common/error.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace riscascade::montecarlo
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        }

        // per grid point and batch: sum of the statistic and of its square
        struct Partial
        {
            std::vector<double> sum, sum2;
        };

        std::function<double(const SnrSample &)> picker(const SimPlan &plan, Observable what)
        {
            switch (what)
            {
            case Observable::fso:
                return [](const SnrSample &x) { return x.fso; };
            case Observable::r2v:
                return [](const SnrSample &x) { return x.r2v; };
            default:
                break;
            }
            if (plan.scenario.relay.kind == relaying::RelayKind::fixed_gain_af)
                return [](const SnrSample &x) { return x.af; };
            return [](const SnrSample &x) { return x.df; };
        }

        using Statistic = std::function<double(const SnrSample &, std::size_t point)>;

        std::vector<EmpiricalResult> run(const SimPlan &plan, std::span<const cascade::SnrScale> grid,
                                         const Statistic &stat)
        {
            check(plan);
            const std::size_t points = grid.size();
            std::vector<double> cs(points);
            for (std::size_t k = 0; k < points; ++k)
                cs[k] = relaying::resolve_c(plan.scenario.relay, grid[k]);

            const std::uint64_t nb = (plan.samples + plan.batch - 1) / plan.batch;
            std::vector<Partial> parts(nb);
            std::atomic<std::uint64_t> next{0};
            auto worker = [&]
            {
                for (std::uint64_t b = next++; b < nb; b = next++)
                {
                    channels::Rng rng = batch_rng(plan.seed, b);
                    const std::uint64_t n = std::min(plan.batch, plan.samples - b * plan.batch);
                    Partial p{std::vector<double>(points, 0.0), std::vector<double>(points, 0.0)};
                    for (std::uint64_t i = 0; i < n; ++i)
                    {
                        const FadingSample f = draw_fading(plan.scenario, rng);
                        for (std::size_t k = 0; k < points; ++k)
                        {
                            const double v = stat(combine(f, grid[k], cs[k]), k);
                            p.sum[k] += v;
                            p.sum2[k] += v * v;
                        }
                    }
                    parts[b] = std::move(p);
                }
            };
            const unsigned nw = std::max(1u, std::min<unsigned>(plan.workers, unsigned(nb)));
            std::vector<std::thread> pool;
            for (unsigned w = 1; w < nw; ++w)
                pool.emplace_back(worker);
            worker();
            for (auto &t : pool)
                t.join();

            // reduction in batch order keeps the result independent of the schedule
            std::vector<EmpiricalResult> out(points);
            const double n = double(plan.samples);
            for (std::size_t k = 0; k < points; ++k)
            {
                double s = 0.0, s2 = 0.0;
                for (const auto &p : parts)
                {
                    s += p.sum[k];
                    s2 += p.sum2[k];
                }
                const double mean = s / n;
                const double var = std::max(0.0, s2 / n - mean * mean);
                out[k] = {mean, std::sqrt(var / n), plan.samples};
            }
            return out;
        }
    }

    void check(const SimPlan &p)
    {
        relaying::check(p.scenario);
        require(p.samples >= 1, "sample count must be at least 1");
        require(p.batch >= 1, "batch size must be at least 1");
        require(p.workers >= 1, "worker count must be at least 1");
    }

    FadingSample draw_fading(const Scenario &s, channels::Rng &rng)
    {
        double h = 1.0;
        for (const auto &hop : s.fso.hops)
            h *= channels::sample_dgg_pe(hop.turbulence, hop.pointing, rng);
        double g = 1.0;
        const auto &rf = s.r2v.rf.hops;
        for (std::size_t i = 0; i + 1 < rf.size(); ++i)
            g *= channels::sample_dgg_shadow(rf[i].fading, rf[i].shadow, rng);
        g *= channels::sample_lasthop(rf.back().fading, rf.back().shadow, s.r2v.rf.mobility, rng);
        double l = 0.0;
        if (s.r2v.los)
            l = channels::sample_dgg_shadow(s.r2v.los->fading, s.r2v.los->shadow, rng);
        return {h * h, g * g, l * l};
    }

    SnrSample combine(const FadingSample &f, const cascade::SnrScale &scale, double c)
    {
        SnrSample o;
        o.fso = scale.gbar_fso * f.fso;
        o.r2v = scale.gbar_rf * f.rf + scale.gbar_los * f.los;
        o.af = o.fso * o.r2v / (o.r2v + c);
        o.df = std::min(o.fso, o.r2v);
        return o;
    }

    SnrSample draw_end_to_end_snr(const Scenario &s, channels::Rng &rng)
    {
        return combine(draw_fading(s, rng), s.scale, relaying::resolve_c(s.relay, s.scale));
    }

    channels::Rng batch_rng(std::uint64_t seed, std::uint64_t batch)
    {
        return channels::Rng(splitmix64(splitmix64(seed) ^ splitmix64(batch + 0x5851f42d4c957f2dull)));
    }

    std::vector<EmpiricalResult> estimate_outage_sweep(const SimPlan &plan, std::span<const cascade::SnrScale> grid,
                                                       double gamma_th, Observable what)
    {
        require(gamma_th > 0.0, "outage threshold must be positive");
        const auto pick = picker(plan, what);
        return run(plan, grid, [&](const SnrSample &x, std::size_t) { return pick(x) <= gamma_th ? 1.0 : 0.0; });
    }

    std::vector<EmpiricalResult> estimate_ber_sweep(const SimPlan &plan, std::span<const cascade::SnrScale> grid,
                                                    const metrics::ModulationParams &m, Observable what)
    {
        metrics::check(m);
        const auto pick = picker(plan, what);
        return run(plan, grid, [&](const SnrSample &x, std::size_t)
                   { return 0.5 * boost::math::gamma_q(m.p, m.q * pick(x)); });
    }

    EmpiricalResult estimate_outage(const SimPlan &plan, double gamma_th, Observable what)
    {
        const cascade::SnrScale g[] = {plan.scenario.scale};
        return estimate_outage_sweep(plan, g, gamma_th, what).front();
    }

    EmpiricalResult estimate_ber(const SimPlan &plan, const metrics::ModulationParams &m, Observable what)
    {
        const cascade::SnrScale g[] = {plan.scenario.scale};
        return estimate_ber_sweep(plan, g, m, what).front();
    }
}
