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

// Command-line front end. Talks to the library only through the C API.
#include "riscascade/riscascade.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_config = 1;
    constexpr int exit_numeric = 2;

    struct Args
    {
        std::string config;
        std::string preset;
        std::string out;
        std::string method = "all";
        unsigned long long seed = 0;
        unsigned long long samples = 0;
        unsigned workers = 0;
        bool strict = false;
    };

    void add_common(CLI::App *sub, Args &a)
    {
        auto *cfg = sub->add_option("--config", a.config, "scenario YAML file")->check(CLI::ExistingFile);
        auto *pre = sub->add_option("--preset", a.preset, "bundled scenario name");
        cfg->excludes(pre);
        sub->add_option("--seed", a.seed, "Monte Carlo seed (overrides the file)");
        sub->add_option("--samples", a.samples, "Monte Carlo sample count (overrides the file)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--workers", a.workers, "Monte Carlo worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", a.out, "write CSV here instead of standard output");
        sub->add_option("--method", a.method, "exact|asymptotic|mc|all")
            ->check(CLI::IsMember({"exact", "asymptotic", "mc", "all"}));
        sub->add_flag("--strict", a.strict, "exit with status 2 when any row fails");
    }

    int run(ris_command cmd, const Args &a, bool seed_given)
    {
        if (a.config.empty() == a.preset.empty())
        {
            std::cerr << "error: exactly one of --config or --preset is required\n";
            return exit_config;
        }
        ris_scenario *scn = nullptr;
        const ris_status st = a.config.empty() ? ris_scenario_load_preset(a.preset.c_str(), &scn)
                                               : ris_scenario_load_file(a.config.c_str(), &scn);
        if (st != RIS_OK)
        {
            std::cerr << "error: " << ris_last_error() << "\n";
            return st == RIS_ERR_CONFIG || st == RIS_ERR_INVALID_ARGUMENT ? exit_config : exit_numeric;
        }

        static const std::map<std::string, unsigned> methods = {{"exact", RIS_METHOD_EXACT},
                                                                {"asymptotic", RIS_METHOD_ASYMPTOTIC},
                                                                {"mc", RIS_METHOD_MC},
                                                                {"all", RIS_METHOD_ALL}};
        ris_run_options opt;
        ris_run_options_init(&opt);
        opt.command = cmd;
        opt.methods = methods.at(a.method);
        opt.has_seed = seed_given ? 1 : 0;
        opt.seed = a.seed;
        opt.samples = a.samples;
        opt.workers = a.workers;

        char *csv = nullptr;
        char *msgs = nullptr;
        size_t failures = 0;
        const ris_status rs = ris_run_sweep(scn, &opt, &csv, &failures, &msgs);
        ris_scenario_free(scn);
        if (rs != RIS_OK)
        {
            std::cerr << "error: " << ris_last_error() << "\n";
            return rs == RIS_ERR_CONFIG || rs == RIS_ERR_INVALID_ARGUMENT ? exit_config : exit_numeric;
        }
        std::cerr << msgs;
        ris_string_free(msgs);

        int code = exit_ok;
        if (a.out.empty())
        {
            std::fputs(csv, stdout);
            std::fflush(stdout);
        }
        else
        {
            std::ofstream f(a.out, std::ios::binary);
            f << csv;
            if (!f)
            {
                std::cerr << "error: cannot write " << a.out << "\n";
                code = exit_config;
            }
        }
        ris_string_free(csv);
        if (failures && code == exit_ok)
        {
            std::cerr << failures << " row(s) failed\n";
            if (a.strict)
                code = exit_numeric;
        }
        return code;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Outage probability and BER of multi-hop RIS-assisted mixed FSO/RF links"};
    app.set_version_flag("--version", std::string(ris_version()));
    app.require_subcommand(0, 1);
    bool list = false;
    app.add_flag("--list-presets", list, "print bundled scenario names");

    Args a;
    auto *outage = app.add_subcommand("outage", "outage probability sweep");
    auto *ber = app.add_subcommand("ber", "average bit error rate sweep");
    auto *validate = app.add_subcommand("validate", "exact, asymptotic and Monte Carlo with 3-sigma checks");
    for (auto *s : {outage, ber, validate})
        add_common(s, a);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    if (list)
    {
        char *names = nullptr;
        if (ris_preset_names(&names) != RIS_OK)
        {
            std::cerr << "error: " << ris_last_error() << "\n";
            return exit_config;
        }
        std::string s = names;
        ris_string_free(names);
        for (char &c : s)
            if (c == ',')
                c = '\n';
        std::cout << s << "\n";
        return exit_ok;
    }

    for (auto [sub, cmd] : {std::pair{outage, RIS_COMMAND_OUTAGE}, std::pair{ber, RIS_COMMAND_BER},
                            std::pair{validate, RIS_COMMAND_VALIDATE}})
        if (sub->parsed())
            return run(cmd, a, sub->count("--seed") > 0);

    std::cerr << app.help();
    return exit_config;
}
