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

#include "scenario/run.hpp"

#include "montecarlo/simulate.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

namespace riscascade::scenario
{
    namespace
    {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();

        struct Writer
        {
            SweepOutput out;

            void row(double sweep, const std::string &metric, const char *method, double value,
                     std::optional<double> se = std::nullopt)
            {
                out.csv += format_double(sweep);
                out.csv += ',';
                out.csv += metric;
                out.csv += ',';
                out.csv += method;
                out.csv += ',';
                out.csv += format_double(value);
                out.csv += ',';
                if (se)
                    out.csv += format_double(*se);
                out.csv += '\n';
            }

            void failure(std::string msg)
            {
                ++out.failures;
                out.messages.push_back(std::move(msg));
            }

            double guarded(const std::string &where, const std::function<double()> &f)
            {
                try
                {
                    const double v = f();
                    if (!std::isfinite(v))
                        failure(where + ": non-finite result");
                    return v;
                }
                catch (const std::exception &e)
                {
                    failure(where + ": " + e.what());
                    return nan;
                }
            }
        };

        montecarlo::Observable observable(Link l)
        {
            switch (l)
            {
            case Link::fso:
                return montecarlo::Observable::fso;
            case Link::r2v:
                return montecarlo::Observable::r2v;
            default:
                return montecarlo::Observable::end_to_end;
            }
        }

        double exact_outage(const Curve &c, const relaying::Scenario &s, double g)
        {
            switch (c.link)
            {
            case Link::fso:
                return relaying::fso_cdf(s, g);
            case Link::r2v:
                return relaying::r2v_cdf(s, g);
            default:
                return metrics::outage(s, g);
            }
        }

        double asymptotic_outage(const Curve &c, const relaying::Scenario &s, double g)
        {
            switch (c.link)
            {
            case Link::fso:
                return metrics::outage_asymptotic_fso(s, g);
            case Link::r2v:
                return metrics::outage_asymptotic_r2v(s, g);
            default:
                return metrics::outage_asymptotic(s, g);
            }
        }

        double exact_ber(const Curve &c, const relaying::Scenario &s, const metrics::ModulationParams &m)
        {
            switch (c.link)
            {
            case Link::fso:
                return metrics::ber_fso(s, m);
            case Link::r2v:
                return metrics::ber_r2v(s, m);
            default:
                return metrics::ber(s, m);
            }
        }
    }

    std::string format_double(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        char buf[64];
        const auto r = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, r.ptr);
    }

    SweepOutput run_sweep(const Config &cfg, const RunOptions &opt)
    {
        Writer w;
        w.out.csv = "sweep,metric,method,value,stderr\n";
        const bool validate = opt.command == Command::validate;
        const unsigned methods = validate ? unsigned(Method::all) : opt.methods;
        const bool ber = opt.command == Command::ber;

        for (const Curve &c : cfg.curves)
        {
            const std::string metric = std::string(ber ? "ber" : "outage") + (c.label.empty() ? "" : "/" + c.label);
            const std::string tag = c.label.empty() ? cfg.name : cfg.name + "/" + c.label;

            std::vector<montecarlo::EmpiricalResult> mc;
            if (methods & Method::mc)
            {
                montecarlo::SimPlan plan;
                plan.scenario = scenario_at(c, cfg.axis, cfg.grid.front());
                plan.seed = opt.seed.value_or(cfg.seed);
                plan.samples = opt.samples.value_or(cfg.samples);
                plan.workers = opt.workers.value_or(cfg.workers);
                std::vector<cascade::SnrScale> scales;
                for (double v : cfg.grid)
                    scales.push_back(scale_at(c, cfg.axis, v));
                try
                {
                    mc = ber ? montecarlo::estimate_ber_sweep(plan, scales, cfg.modulation, observable(c.link))
                             : montecarlo::estimate_outage_sweep(plan, scales, cfg.gamma_th, observable(c.link));
                }
                catch (const std::exception &e)
                {
                    w.failure(tag + " monte carlo: " + e.what());
                    mc.assign(cfg.grid.size(), {nan, nan, 0});
                }
            }

            std::vector<double> exact_col;
            for (std::size_t k = 0; k < cfg.grid.size(); ++k)
            {
                const double v = cfg.grid[k];
                const std::string where = tag + " at " + format_double(v);
                const relaying::Scenario s = scenario_at(c, cfg.axis, v);
                double exact = nan;
                if (methods & Method::exact)
                {
                    exact = w.guarded(where + " exact", [&]
                                      { return ber ? exact_ber(c, s, cfg.modulation) : exact_outage(c, s, cfg.gamma_th); });
                    w.row(v, metric, "exact", exact);
                    exact_col.push_back(exact);
                }
                if ((methods & Method::asymptotic) && !ber)
                    w.row(v, metric, "asymptotic",
                          w.guarded(where + " asymptotic", [&] { return asymptotic_outage(c, s, cfg.gamma_th); }));
                if (methods & Method::mc)
                {
                    w.row(v, metric, "mc", mc[k].estimate, mc[k].std_error);
                    if (validate)
                    {
                        // three standard errors, using the analytic value when the sample saw no events
                        const double n = double(mc[k].n_effective);
                        const double se = std::max(mc[k].std_error, std::sqrt(exact * (1.0 - exact) / n));
                        const double z = std::abs(mc[k].estimate - exact) / se;
                        const bool pass = std::isfinite(z) ? z <= 3.0 : mc[k].estimate == exact;
                        if (!pass)
                            w.failure(where + ": monte carlo differs from exact by " + format_double(z) + " standard errors");
                        w.row(v, metric, "check", pass ? 1.0 : 0.0, z);
                    }
                }
            }
            // metrics fall with SNR; flag rises above rounding on an ascending grid
            for (std::size_t k = 1; k < exact_col.size(); ++k)
            {
                const bool up = cfg.grid[k] > cfg.grid[k - 1];
                if (up && exact_col[k] > exact_col[k - 1] * (1.0 + 1e-9) + 1e-300)
                    w.out.warnings.push_back(tag + ": exact " + (ber ? "ber" : "outage") + " increases between " +
                                             format_double(cfg.grid[k - 1]) + " and " + format_double(cfg.grid[k]));
            }
        }
        return std::move(w.out);
    }
}
