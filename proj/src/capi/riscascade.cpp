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

#include "riscascade/riscascade.h"

#include "common/error.hpp"
#include "metrics/metrics.hpp"
#include "scenario/config.hpp"
#include "scenario/run.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

struct ris_scenario
{
    riscascade::scenario::Config config;
};

namespace
{
    thread_local std::string last_error;

    ris_status code_of(riscascade::ErrorKind k)
    {
        using riscascade::ErrorKind;
        switch (k)
        {
        case ErrorKind::invalid_argument:
            return RIS_ERR_INVALID_ARGUMENT;
        case ErrorKind::config:
            return RIS_ERR_CONFIG;
        case ErrorKind::no_strip:
            return RIS_ERR_NO_STRIP;
        case ErrorKind::not_converged:
            return RIS_ERR_NOT_CONVERGED;
        case ErrorKind::repeated_pole:
            return RIS_ERR_REPEATED_POLE;
        case ErrorKind::out_of_strip:
            return RIS_ERR_OUT_OF_STRIP;
        case ErrorKind::quadrature:
            return RIS_ERR_QUADRATURE;
        }
        return RIS_ERR_INTERNAL;
    }

    template <class F>
    ris_status guard(F &&f)
    {
        try
        {
            last_error.clear();
            f();
            return RIS_OK;
        }
        catch (const riscascade::Error &e)
        {
            last_error = e.what();
            return code_of(e.kind());
        }
        catch (const std::bad_alloc &)
        {
            last_error = "out of memory";
            return RIS_ERR_INTERNAL;
        }
        catch (const std::exception &e)
        {
            last_error = e.what();
            return RIS_ERR_INTERNAL;
        }
    }

    char *dup(const std::string &s)
    {
        char *p = static_cast<char *>(std::malloc(s.size() + 1));
        if (!p)
            throw std::bad_alloc();
        std::memcpy(p, s.c_str(), s.size() + 1);
        return p;
    }

    void need(const void *p, const char *what)
    {
        if (!p)
            throw riscascade::InvalidArgument(std::string(what) + " must not be NULL");
    }

    const riscascade::scenario::Curve &curve_of(const ris_scenario *s, size_t curve)
    {
        need(s, "scenario");
        if (curve >= s->config.curves.size())
            throw riscascade::InvalidArgument("curve index out of range");
        return s->config.curves[curve];
    }

    template <class Load>
    ris_status load(ris_scenario **out, Load &&l)
    {
        return guard(
            [&]
            {
                need(out, "output pointer");
                *out = nullptr;
                *out = new ris_scenario{l()};
            });
    }
}

extern "C"
{
    const char *ris_version(void) { return "0.1.0"; }

    const char *ris_last_error(void) { return last_error.c_str(); }

    ris_status ris_scenario_load_file(const char *path, ris_scenario **out)
    {
        return load(out,
                    [&]
                    {
                        need(path, "path");
                        return riscascade::scenario::load_config_file(path);
                    });
    }

    ris_status ris_scenario_load_string(const char *yaml, ris_scenario **out)
    {
        return load(out,
                    [&]
                    {
                        need(yaml, "configuration text");
                        return riscascade::scenario::parse_config(yaml);
                    });
    }

    ris_status ris_scenario_load_preset(const char *name, ris_scenario **out)
    {
        return load(out,
                    [&]
                    {
                        need(name, "preset name");
                        return riscascade::scenario::load_preset(name);
                    });
    }

    void ris_scenario_free(ris_scenario *scenario) { delete scenario; }

    ris_status ris_preset_names(char **out)
    {
        return guard(
            [&]
            {
                need(out, "output pointer");
                std::string all;
                for (const auto &n : riscascade::scenario::preset_names())
                    all += (all.empty() ? "" : ",") + n;
                *out = dup(all);
            });
    }

    ris_status ris_scenario_curve_count(const ris_scenario *scenario, size_t *out)
    {
        return guard(
            [&]
            {
                need(scenario, "scenario");
                need(out, "output pointer");
                *out = scenario->config.curves.size();
            });
    }

    ris_status ris_scenario_grid(const ris_scenario *scenario, const double **values, size_t *count)
    {
        return guard(
            [&]
            {
                need(scenario, "scenario");
                need(values, "output pointer");
                need(count, "output pointer");
                *values = scenario->config.grid.data();
                *count = scenario->config.grid.size();
            });
    }

    void ris_run_options_init(ris_run_options *options)
    {
        if (!options)
            return;
        *options = ris_run_options{};
        options->command = RIS_COMMAND_OUTAGE;
        options->methods = RIS_METHOD_ALL;
    }

    ris_status ris_run_sweep(const ris_scenario *scenario, const ris_run_options *options, char **csv,
                             size_t *failures, char **messages)
    {
        return guard(
            [&]
            {
                need(scenario, "scenario");
                need(options, "options");
                need(csv, "output pointer");
                *csv = nullptr;
                if (messages)
                    *messages = nullptr;
                namespace sc = riscascade::scenario;
                sc::RunOptions opt;
                switch (options->command)
                {
                case RIS_COMMAND_OUTAGE:
                    opt.command = sc::Command::outage;
                    break;
                case RIS_COMMAND_BER:
                    opt.command = sc::Command::ber;
                    break;
                case RIS_COMMAND_VALIDATE:
                    opt.command = sc::Command::validate;
                    break;
                default:
                    throw riscascade::InvalidArgument("unknown command");
                }
                if (options->methods == 0 || (options->methods & ~unsigned(RIS_METHOD_ALL)))
                    throw riscascade::InvalidArgument("method mask must be a non-empty combination of RIS_METHOD_*");
                opt.methods = options->methods;
                if (options->has_seed)
                    opt.seed = options->seed;
                if (options->samples)
                    opt.samples = options->samples;
                if (options->workers)
                    opt.workers = options->workers;
                const sc::SweepOutput r = sc::run_sweep(scenario->config, opt);
                std::string msg;
                for (const auto &m : r.messages)
                    msg += "error: " + m + "\n";
                for (const auto &m : r.warnings)
                    msg += "warning: " + m + "\n";
                char *c = dup(r.csv);
                if (messages)
                {
                    try
                    {
                        *messages = dup(msg);
                    }
                    catch (...)
                    {
                        std::free(c);
                        throw;
                    }
                }
                *csv = c;
                if (failures)
                    *failures = r.failures;
            });
    }

    void ris_string_free(char *s) { std::free(s); }

    ris_status ris_outage(const ris_scenario *scenario, size_t curve, double x, double *out)
    {
        return guard(
            [&]
            {
                const auto &c = curve_of(scenario, curve);
                need(out, "output pointer");
                const auto s = riscascade::scenario::scenario_at(c, scenario->config.axis, x);
                *out = riscascade::metrics::outage(s, scenario->config.gamma_th);
            });
    }

    ris_status ris_outage_asymptotic(const ris_scenario *scenario, size_t curve, double x, double *out)
    {
        return guard(
            [&]
            {
                const auto &c = curve_of(scenario, curve);
                need(out, "output pointer");
                const auto s = riscascade::scenario::scenario_at(c, scenario->config.axis, x);
                *out = riscascade::metrics::outage_asymptotic(s, scenario->config.gamma_th);
            });
    }

    ris_status ris_ber(const ris_scenario *scenario, size_t curve, double x, double *out)
    {
        return guard(
            [&]
            {
                const auto &c = curve_of(scenario, curve);
                need(out, "output pointer");
                const auto s = riscascade::scenario::scenario_at(c, scenario->config.axis, x);
                *out = riscascade::metrics::ber(s, scenario->config.modulation);
            });
    }

    ris_status ris_mean_snr(const ris_scenario *scenario, size_t curve, double x, double *fso, double *rf, double *los)
    {
        return guard(
            [&]
            {
                const auto &c = curve_of(scenario, curve);
                const auto g = riscascade::scenario::scale_at(c, scenario->config.axis, x);
                if (fso)
                    *fso = g.gbar_fso;
                if (rf)
                    *rf = g.gbar_rf;
                if (los)
                    *los = g.gbar_los;
            });
    }
}
