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

#include "scenario/config.hpp"

#include "channels/presets.hpp"
#include "common/error.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace riscascade::scenario
{
    namespace detail
    {
        const std::vector<std::pair<std::string, std::string>> &embedded_presets();
    }

    namespace
    {
        using Keys = std::set<std::string>;

        [[noreturn]] void fail(const std::string &path, const std::string &msg)
        {
            throw ConfigError(path + ": " + msg);
        }

        void allow(const YAML::Node &n, const std::string &path, const Keys &keys)
        {
            if (!n)
                return;
            if (!n.IsMap())
                fail(path, "expected a mapping");
            for (const auto &kv : n)
            {
                const std::string k = kv.first.as<std::string>();
                if (!keys.count(k))
                    fail(path.empty() ? k : path + "." + k, "unknown field");
            }
        }

        // missing or null sections read as an empty mapping, so lookups inside them stay undefined
        YAML::Node section(const YAML::Node &n, const char *key)
        {
            const YAML::Node v = n[key];
            if (!v || v.IsNull())
                return YAML::Node(YAML::NodeType::Map);
            return v;
        }

        std::string join(const std::string &path, const std::string &key)
        {
            return path.empty() ? key : path + "." + key;
        }

        double number(const YAML::Node &n, const std::string &path, double fallback)
        {
            if (!n)
                return fallback;
            try
            {
                const double v = n.as<double>();
                if (!std::isfinite(v))
                    fail(path, "expected a finite number");
                return v;
            }
            catch (const YAML::Exception &)
            {
                fail(path, "expected a number");
            }
        }

        double positive(const YAML::Node &n, const std::string &path, double fallback)
        {
            const double v = number(n, path, fallback);
            if (!(v > 0.0))
                fail(path, "must be positive");
            return v;
        }

        std::uint64_t count(const YAML::Node &n, const std::string &path, std::uint64_t fallback)
        {
            if (!n)
                return fallback;
            const double v = number(n, path, 0.0);
            if (!(v >= 1.0) || v != std::floor(v) || v > 1e15)
                fail(path, "expected a positive integer");
            return std::uint64_t(v);
        }

        std::string text(const YAML::Node &n, const std::string &path, const std::string &fallback)
        {
            if (!n)
                return fallback;
            if (!n.IsScalar())
                fail(path, "expected a string");
            return n.as<std::string>();
        }

        // scalar broadcast to every hop, or one entry per hop
        std::vector<double> per_hop(const YAML::Node &n, const std::string &path, std::size_t hops, double fallback)
        {
            if (!n)
                return std::vector<double>(hops, fallback);
            if (n.IsScalar())
                return std::vector<double>(hops, number(n, path, fallback));
            if (!n.IsSequence() || n.size() != hops)
                fail(path, "expected a number or a list with one entry per hop (" + std::to_string(hops) + ")");
            std::vector<double> v;
            for (std::size_t i = 0; i < hops; ++i)
                v.push_back(number(n[i], path + "[" + std::to_string(i) + "]", fallback));
            return v;
        }

        std::vector<double> distances(const YAML::Node &sec, const std::string &path, std::size_t hops, double total)
        {
            if (sec["hop_distances_m"])
            {
                auto v = per_hop(sec["hop_distances_m"], join(path, "hop_distances_m"), hops, 0.0);
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (!(v[i] > 0.0))
                        fail(join(path, "hop_distances_m"), "distances must be positive");
                return v;
            }
            return std::vector<double>(hops, total / double(hops));
        }

        channels::DGGParams fading(const YAML::Node &n, const std::string &path, const channels::DGGParams &fallback)
        {
            if (!n)
                return fallback;
            if (n.IsScalar())
            {
                const std::string name = n.as<std::string>();
                if (name == "st")
                    return channels::presets::strong_turbulence();
                if (name == "mt")
                    return channels::presets::moderate_turbulence();
                if (name == "rf")
                    return channels::presets::rf_fading();
                fail(path, "unknown preset '" + name + "' (st, mt, rf or a parameter mapping)");
            }
            allow(n, path, {"alpha1", "beta1", "omega1", "alpha2", "beta2", "omega2"});
            channels::DGGParams p;
            p.first = {positive(n["alpha1"], join(path, "alpha1"), fallback.first.alpha),
                       positive(n["beta1"], join(path, "beta1"), fallback.first.beta),
                       positive(n["omega1"], join(path, "omega1"), fallback.first.omega)};
            p.second = {positive(n["alpha2"], join(path, "alpha2"), fallback.second.alpha),
                        positive(n["beta2"], join(path, "beta2"), fallback.second.beta),
                        positive(n["omega2"], join(path, "omega2"), fallback.second.omega)};
            return p;
        }

        YAML::Node merge(const YAML::Node &base, const YAML::Node &over)
        {
            if (!base || !over || !base.IsMap() || !over.IsMap())
                return YAML::Clone(over ? over : base);
            YAML::Node out = YAML::Clone(base);
            for (const auto &kv : over)
            {
                const std::string k = kv.first.as<std::string>();
                out[k] = merge(base[k], kv.second);
            }
            return out;
        }

        const Keys fso_keys = {"hops",          "turbulence",    "rho",          "a0",
                               "distance_m",    "hop_distances_m", "wavelength_nm", "visibility_km",
                               "responsivity",  "noise_density", "bandwidth_ghz"};
        const Keys rf_keys = {"hops",       "fading",          "shadowing",     "exponent", "exponents",
                              "distance_m", "hop_distances_m", "frequency_mhz", "gt_dbi",   "gr_dbi",
                              "noise_dbm",  "bandwidth_mhz",   "los"};
        const Keys los_keys = {"enabled", "fading", "shadowing", "exponent", "distance_m"};
        const Keys relay_keys = {"mode", "c"};
        const Keys curve_keys = {"label", "link", "relay", "fso", "rf"};

        Curve build_curve(const YAML::Node &n, const std::string &label)
        {
            Curve c;
            c.label = label;

            const std::string link = text(n["link"], "link", "end_to_end");
            if (link == "end_to_end")
                c.link = Link::end_to_end;
            else if (link == "fso")
                c.link = Link::fso;
            else if (link == "r2v")
                c.link = Link::r2v;
            else
                fail("link", "expected end_to_end, fso or r2v");

            const YAML::Node relay = section(n, "relay");
            allow(relay, "relay", relay_keys);
            const std::string mode = text(relay["mode"], "relay.mode", "df");
            if (mode == "df")
                c.scenario.relay.kind = relaying::RelayKind::df;
            else if (mode == "af")
                c.scenario.relay.kind = relaying::RelayKind::fixed_gain_af;
            else
                fail("relay.mode", "expected df or af");
            if (relay["c"])
            {
                const YAML::Node cv = relay["c"];
                if (cv.IsScalar() && cv.as<std::string>() == "one-plus-mean-fso")
                    c.scenario.relay.c.reset();
                else
                    c.scenario.relay.c = positive(cv, "relay.c", 1.0);
            }

            // FSO side
            const YAML::Node fso = section(n, "fso");
            allow(fso, "fso", fso_keys);
            const std::size_t k1 = count(fso["hops"], "fso.hops", 1);
            const auto turb = fading(fso["turbulence"], "fso.turbulence", channels::presets::moderate_turbulence());
            const auto rho = per_hop(fso["rho"], "fso.rho", k1, 5.0);
            const double a0 = positive(fso["a0"], "fso.a0", 1.0);
            for (std::size_t i = 0; i < k1; ++i)
            {
                if (!(rho[i] > 0.0))
                    fail("fso.rho", "must be positive");
                c.scenario.fso.hops.push_back({turb, {rho[i] * rho[i], a0}});
            }
            auto &fb = c.fso_budget;
            fb.hop_distances_m = distances(fso, "fso", k1, positive(fso["distance_m"], "fso.distance_m", 1000.0));
            fb.wavelength_nm = positive(fso["wavelength_nm"], "fso.wavelength_nm", fb.wavelength_nm);
            fb.visibility_km = positive(fso["visibility_km"], "fso.visibility_km", fb.visibility_km);
            fb.responsivity = positive(fso["responsivity"], "fso.responsivity", fb.responsivity);
            fb.noise_density = positive(fso["noise_density"], "fso.noise_density", fb.noise_density);
            fb.bandwidth_ghz = positive(fso["bandwidth_ghz"], "fso.bandwidth_ghz", fb.bandwidth_ghz);

            // RF side
            const YAML::Node rf = section(n, "rf");
            allow(rf, "rf", rf_keys);
            const std::size_t k2 = count(rf["hops"], "rf.hops", 1);
            const auto rf_fading = fading(rf["fading"], "rf.fading", channels::presets::rf_fading());
            const auto shadow = per_hop(rf["shadowing"], "rf.shadowing", k2, 1.2);
            for (std::size_t i = 0; i < k2; ++i)
                c.scenario.r2v.rf.hops.push_back({rf_fading, {shadow[i]}});
            auto &rb = c.rf_budget;
            rb.hop_distances_m = distances(rf, "rf", k2, positive(rf["distance_m"], "rf.distance_m", 100.0));
            if (rf["exponents"])
                rb.exponents = per_hop(rf["exponents"], "rf.exponents", k2, 2.0);
            else
            {
                rb.exponents.assign(k2, 2.0);
                rb.exponents.back() = number(rf["exponent"], "rf.exponent", 4.0);
            }
            rb.frequency_mhz = positive(rf["frequency_mhz"], "rf.frequency_mhz", rb.frequency_mhz);
            rb.gt_dbi = number(rf["gt_dbi"], "rf.gt_dbi", rb.gt_dbi);
            rb.gr_dbi = number(rf["gr_dbi"], "rf.gr_dbi", rb.gr_dbi);
            rb.noise_dbm = number(rf["noise_dbm"], "rf.noise_dbm", rb.noise_dbm);
            rb.bandwidth_mhz = positive(rf["bandwidth_mhz"], "rf.bandwidth_mhz", rb.bandwidth_mhz);
            c.scenario.r2v.rf.mobility = {rb.hop_distances_m.back(), rb.exponents.back()};

            const YAML::Node los = section(rf, "los");
            allow(los, "rf.los", los_keys);
            bool los_on = true;
            if (los["enabled"])
            {
                try
                {
                    los_on = los["enabled"].as<bool>();
                }
                catch (const YAML::Exception &)
                {
                    fail("rf.los.enabled", "expected true or false");
                }
            }
            rb.los_distance_m = positive(los["distance_m"], "rf.los.distance_m", 100.0);
            rb.los_exponent = number(los["exponent"], "rf.los.exponent", 4.0);
            if (los_on)
                c.scenario.r2v.los = cascade::LOSLink{
                    fading(los["fading"], "rf.los.fading", rf_fading),
                    {number(los["shadowing"], "rf.los.shadowing", 1.2)}};

            const std::string where = label.empty() ? std::string() : "curve '" + label + "': ";
            auto checked = [&](const char *path, auto &&f)
            {
                try
                {
                    f();
                }
                catch (const InvalidArgument &e)
                {
                    fail(where + path, e.what());
                }
            };
            checked("fso", [&] { cascade::check(c.scenario.fso); });
            checked("fso", [&] { relaying::check(c.fso_budget); });
            checked("rf", [&] { cascade::check(c.scenario.r2v.rf); });
            checked("rf", [&] { relaying::check(c.rf_budget); });
            if (c.scenario.r2v.los)
                checked("rf.los", [&]
                        {
                            channels::check(c.scenario.r2v.los->fading);
                            channels::check(c.scenario.r2v.los->shadow);
                        });
            checked("relay", [&] { relaying::check(c.scenario); });
            return c;
        }
    }

    Config parse_config(const std::string &yaml)
    {
        YAML::Node root;
        try
        {
            root = YAML::Load(yaml);
        }
        catch (const YAML::Exception &e)
        {
            throw ConfigError(std::string("malformed YAML: ") + e.what());
        }
        if (!root.IsMap())
            throw ConfigError("configuration must be a mapping");
        allow(root, "",
              {"name", "link", "relay", "threshold_db", "modulation", "sweep", "montecarlo", "fso", "rf", "curves"});

        Config cfg;
        cfg.name = text(root["name"], "name", "scenario");
        cfg.gamma_th = std::pow(10.0, number(root["threshold_db"], "threshold_db", 0.0) / 10.0);

        const YAML::Node mod = section(root, "modulation");
        allow(mod, "modulation", {"p", "q"});
        cfg.modulation = {positive(mod["p"], "modulation.p", 1.0), positive(mod["q"], "modulation.q", 1.0)};

        const YAML::Node mc = section(root, "montecarlo");
        allow(mc, "montecarlo", {"seed", "samples", "workers"});
        {
            if (mc["seed"])
            {
                try
                {
                    cfg.seed = mc["seed"].as<std::uint64_t>();
                }
                catch (const YAML::Exception &)
                {
                    fail("montecarlo.seed", "expected a non-negative integer");
                }
            }
            cfg.samples = count(mc["samples"], "montecarlo.samples", cfg.samples);
            cfg.workers = unsigned(count(mc["workers"], "montecarlo.workers", cfg.workers));
        }

        const YAML::Node sweep = root["sweep"];
        if (!sweep)
            fail("sweep", "missing");
        allow(sweep, "sweep", {"axis", "start", "stop", "step", "values"});
        const std::string axis = text(sweep["axis"], "sweep.axis", "power_dbm");
        if (axis == "power_dbm")
            cfg.axis = SweepAxis::power_dbm;
        else if (axis == "snr_db")
            cfg.axis = SweepAxis::snr_db;
        else
            fail("sweep.axis", "expected power_dbm or snr_db");
        if (sweep["values"])
        {
            if (!sweep["values"].IsSequence() || sweep["values"].size() == 0)
                fail("sweep.values", "expected a non-empty list");
            for (std::size_t i = 0; i < sweep["values"].size(); ++i)
                cfg.grid.push_back(number(sweep["values"][i], "sweep.values[" + std::to_string(i) + "]", 0.0));
        }
        else
        {
            const double start = number(sweep["start"], "sweep.start", 0.0);
            const double stop = number(sweep["stop"], "sweep.stop", start);
            const double step = positive(sweep["step"], "sweep.step", 1.0);
            if (stop < start)
                fail("sweep.stop", "must not be below sweep.start");
            const double n = std::floor((stop - start) / step + 1e-9);
            if (n > 10000)
                fail("sweep", "more than 10000 points");
            for (int i = 0; i <= int(n); ++i)
                cfg.grid.push_back(start + i * step);
        }

        YAML::Node base = YAML::Clone(root);
        base.remove("curves");
        const YAML::Node curves = root["curves"];
        if (!curves)
            cfg.curves.push_back(build_curve(base, ""));
        else
        {
            if (!curves.IsSequence() || curves.size() == 0)
                fail("curves", "expected a non-empty list");
            for (std::size_t i = 0; i < curves.size(); ++i)
            {
                const std::string path = "curves[" + std::to_string(i) + "]";
                allow(curves[i], path, curve_keys);
                const std::string label = text(curves[i]["label"], path + ".label", std::to_string(i));
                if (label.empty() || label.find_first_of(",\n\"") != std::string::npos)
                    fail(path + ".label", "must be non-empty without commas, quotes or newlines");
                YAML::Node over = YAML::Clone(curves[i]);
                over.remove("label");
                try
                {
                    cfg.curves.push_back(build_curve(merge(base, over), label));
                }
                catch (const ConfigError &e)
                {
                    throw ConfigError(path + " (" + label + "): " + e.what());
                }
            }
        }
        return cfg;
    }

    Config load_config_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open configuration file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::vector<std::string> preset_names()
    {
        std::vector<std::string> names;
        for (const auto &p : detail::embedded_presets())
            names.push_back(p.first);
        return names;
    }

    const std::string &preset_text(const std::string &name)
    {
        for (const auto &p : detail::embedded_presets())
            if (p.first == name)
                return p.second;
        std::string all;
        for (const auto &n : preset_names())
            all += (all.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset '" + name + "' (available: " + all + ")");
    }

    Config load_preset(const std::string &name)
    {
        return parse_config(preset_text(name));
    }

    cascade::SnrScale scale_at(const Curve &c, SweepAxis axis, double value)
    {
        if (axis == SweepAxis::power_dbm)
            return {relaying::fso_mean_snr(c.fso_budget, value), relaying::rf_mean_snr(c.rf_budget, value),
                    relaying::los_mean_snr(c.rf_budget, value)};
        const double g = std::pow(10.0, value / 10.0);
        const auto &mob = c.scenario.r2v.rf.mobility;
        return {g, g * std::pow(mob.d, mob.a), g};
    }

    relaying::Scenario scenario_at(const Curve &c, SweepAxis axis, double value)
    {
        relaying::Scenario s = c.scenario;
        s.scale = scale_at(c, axis, value);
        return s;
    }
}
