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

#include "common/error.hpp"
#include "scenario/config.hpp"
#include "scenario/run.hpp"

#include <doctest.h>

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace riscascade;
using namespace riscascade::scenario;

namespace
{
    std::string config_error(const std::string &yaml)
    {
        try
        {
            parse_config(yaml);
        }
        catch (const ConfigError &e)
        {
            return e.what();
        }
        return "";
    }

    std::vector<std::vector<std::string>> rows(const std::string &csv)
    {
        std::vector<std::vector<std::string>> out;
        std::istringstream in(csv);
        std::string line;
        while (std::getline(in, line))
        {
            std::vector<std::string> f;
            std::size_t start = 0;
            for (;;)
            {
                const auto comma = line.find(',', start);
                f.push_back(line.substr(start, comma - start));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
            out.push_back(f);
        }
        return out;
    }

    const char *small = R"(
name: small
threshold_db: 0
sweep: {axis: power_dbm, values: [0, 20, 40]}
montecarlo: {seed: 7, samples: 20000}
fso: {hops: 2, turbulence: mt, rho: 5}
rf: {hops: 1, shadowing: 7.4, exponent: 3, distance_m: 50, los: {enabled: false}}
)";
}

TEST_CASE("bundled presets parse")
{
    const auto names = preset_names();
    for (const char *n : {"st", "mt", "fig4a", "fig7b", "fig8"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    for (const auto &n : names)
        CHECK_NOTHROW(load_preset(n));
    CHECK_THROWS_AS(load_preset("nope"), ConfigError);
}

TEST_CASE("mt preset expands to the DF K1=3, K2=2 scenario")
{
    const Config c = load_preset("mt");
    REQUIRE(c.curves.size() == 1);
    CHECK(c.grid.size() == 11);
    CHECK(c.grid.front() == 0.0);
    CHECK(c.grid.back() == 50.0);
    CHECK(c.gamma_th == 1.0);
    CHECK(c.modulation.p == 1.0);
    CHECK(c.modulation.q == 1.0);
    const auto &s = c.curves[0].scenario;
    CHECK(s.relay.kind == relaying::RelayKind::df);
    REQUIRE(s.fso.hops.size() == 3);
    CHECK(s.fso.hops[0].turbulence.first.alpha == doctest::Approx(2.169));
    CHECK(s.fso.hops[2].pointing.rho2 == doctest::Approx(25.0));
    REQUIRE(s.r2v.rf.hops.size() == 2);
    CHECK(s.r2v.rf.hops[1].shadow.m == doctest::Approx(1.2));
    CHECK(s.r2v.rf.mobility.d == doctest::Approx(50.0));
    CHECK(s.r2v.rf.mobility.a == doctest::Approx(4.0));
    CHECK(s.r2v.los.has_value());
    CHECK(c.curves[0].rf_budget.exponents == std::vector<double>{2.0, 4.0});
}

TEST_CASE("curves deep-merge over the base configuration")
{
    const Config c = load_preset("fig4a");
    REQUIRE(c.curves.size() == 3);
    CHECK(c.grid.size() == 21);
    const std::size_t hops[] = {2, 3, 4};
    const double rho2[] = {6.25, 25.0, 25.0};
    for (int i = 0; i < 3; ++i)
    {
        const auto &cv = c.curves[i];
        CHECK(cv.link == Link::fso);
        CHECK(cv.scenario.fso.hops.size() == hops[i]);
        CHECK(cv.scenario.fso.hops[0].pointing.rho2 == doctest::Approx(rho2[i]));
        // inherited from the base
        CHECK(cv.scenario.fso.hops[0].turbulence.first.alpha == doctest::Approx(1.8621));
        CHECK(cv.fso_budget.hop_distances_m.size() == hops[i]);
        CHECK(cv.fso_budget.hop_distances_m[0] == doctest::Approx(1000.0 / double(hops[i])));
    }
    const Config b = load_preset("fig7b");
    REQUIRE(b.curves.size() == 4);
    int af = 0;
    for (const auto &cv : b.curves)
        af += cv.scenario.relay.kind == relaying::RelayKind::fixed_gain_af;
    CHECK(af == 2);
}

TEST_CASE("schema errors name the field")
{
    const std::string head = "sweep: {values: [10]}\n";
    CHECK(config_error(head + "fso: {hopz: 2}").find("fso.hopz: unknown field") != std::string::npos);
    CHECK(config_error(head + "fso: {hops: 0}").find("fso.hops") != std::string::npos);
    CHECK(config_error(head + "fso: {hops: 2.5}").find("fso.hops") != std::string::npos);
    CHECK(config_error(head + "fso: {turbulence: weak}").find("fso.turbulence") != std::string::npos);
    CHECK(config_error(head + "fso: {rho: abc}").find("fso.rho") != std::string::npos);
    CHECK(config_error(head + "fso: {hops: 2, rho: [1, 2, 3]}").find("fso.rho") != std::string::npos);
    CHECK(config_error(head + "relay: {mode: cf}").find("relay.mode") != std::string::npos);
    CHECK(config_error(head + "rf: {shadowing: 0.5}").find("rf:") != std::string::npos);
    CHECK(config_error(head + "rf: {los: {enabled: maybe}}").find("rf.los.enabled") != std::string::npos);
    CHECK(config_error(head + "modulation: {p: -1}").find("modulation.p") != std::string::npos);
    CHECK(config_error(head + "colour: red").find("colour: unknown field") != std::string::npos);
    CHECK(config_error("fso: {hops: 2}").find("sweep: missing") != std::string::npos);
    CHECK(config_error("sweep: {start: 5, stop: 0}").find("sweep.stop") != std::string::npos);
    CHECK(config_error(head + "curves: [{label: a, fso: {hops: x}}]").find("curves[0] (a): fso.hops") !=
          std::string::npos);
    CHECK(config_error("[1, 2]").find("mapping") != std::string::npos);
    CHECK(config_error("a: [").find("malformed YAML") != std::string::npos);
    CHECK(config_error(head + "fso:\nrf:\n").empty());
}

TEST_CASE("sweep grid and threshold")
{
    const Config c = parse_config("sweep: {start: -5, stop: 5, step: 2.5}\nthreshold_db: 3\n");
    CHECK(c.grid == std::vector<double>{-5, -2.5, 0, 2.5, 5});
    CHECK(c.gamma_th == doctest::Approx(1.9952623149688795).epsilon(1e-15));
}

TEST_CASE("mean SNR scaling along the sweep axes")
{
    const Config c = load_preset("mt");
    const Curve &cv = c.curves[0];
    const auto a = scale_at(cv, SweepAxis::power_dbm, 20.0);
    const auto b = scale_at(cv, SweepAxis::power_dbm, 30.0);
    // optical SNR is quadratic in transmit power, RF linear
    CHECK(b.gbar_fso / a.gbar_fso == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(b.gbar_rf / a.gbar_rf == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(b.gbar_los / a.gbar_los == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(b.gbar_rf == doctest::Approx(873666344.6421689).epsilon(1e-10));

    const auto s = scale_at(cv, SweepAxis::snr_db, 40.0);
    CHECK(s.gbar_fso == doctest::Approx(1e4).epsilon(1e-14));
    CHECK(s.gbar_los == doctest::Approx(1e4).epsilon(1e-14));
    CHECK(s.gbar_rf == doctest::Approx(1e4 * 50.0 * 50.0 * 50.0 * 50.0).epsilon(1e-14));
}

TEST_CASE("format_double round-trips")
{
    for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 6.02214076e23, 4.9e-324, -2.5e-7})
    {
        const std::string s = format_double(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(HUGE_VAL) == "inf");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("run_sweep output")
{
    const Config c = parse_config(small);
    RunOptions opt;
    const SweepOutput out = run_sweep(c, opt);
    CHECK(out.failures == 0);
    const auto r = rows(out.csv);
    REQUIRE(r.size() == 1 + 3 * 3);
    CHECK(out.csv.rfind("sweep,metric,method,value,stderr\n", 0) == 0);
    for (std::size_t i = 1; i < r.size(); ++i)
    {
        REQUIRE(r[i].size() == 5);
        CHECK(r[i][1] == "outage");
        const bool mc = r[i][2] == "mc";
        CHECK(r[i][4].empty() == !mc);
    }
    CHECK(r[1][2] == "exact");
    CHECK(r[2][2] == "asymptotic");
    CHECK(r[3][2] == "mc");

    SUBCASE("exact column is nonincreasing")
    {
        RunOptions e;
        e.methods = Method::exact;
        const auto x = rows(run_sweep(c, e).csv);
        REQUIRE(x.size() == 4);
        CHECK(std::stod(x[1][3]) >= std::stod(x[2][3]));
        CHECK(std::stod(x[2][3]) >= std::stod(x[3][3]));
    }
    SUBCASE("deterministic for a fixed seed")
    {
        CHECK(run_sweep(c, opt).csv == out.csv);
        RunOptions w = opt;
        w.workers = 3;
        CHECK(run_sweep(c, w).csv == out.csv);
        RunOptions other = opt;
        other.seed = 11;
        CHECK(run_sweep(c, other).csv != out.csv);
    }
    SUBCASE("ber has no asymptotic rows")
    {
        RunOptions b;
        b.command = Command::ber;
        const auto x = rows(run_sweep(c, b).csv);
        REQUIRE(x.size() == 1 + 3 * 2);
        for (std::size_t i = 1; i < x.size(); ++i)
        {
            CHECK(x[i][1] == "ber");
            CHECK(x[i][2] != "asymptotic");
        }
    }
    SUBCASE("validate appends a check row per point")
    {
        RunOptions v;
        v.command = Command::validate;
        v.methods = Method::exact; // ignored
        const SweepOutput o = run_sweep(c, v);
        const auto x = rows(o.csv);
        REQUIRE(x.size() == 1 + 3 * 4);
        int checks = 0;
        for (std::size_t i = 1; i < x.size(); ++i)
            if (x[i][2] == "check")
            {
                ++checks;
                CHECK(x[i][3] == "1");
            }
        CHECK(checks == 3);
        CHECK(o.failures == 0);
    }
    SUBCASE("labelled curves tag the metric")
    {
        const Config f = load_preset("fig4a");
        RunOptions e;
        e.methods = Method::exact;
        const auto x = rows(run_sweep(f, e).csv);
        REQUIRE(x.size() == 1 + 3 * 21);
        CHECK(x[1][1] == "outage/K1=2");
        CHECK(x.back()[1] == "outage/K1=4");
    }
}

TEST_CASE("numeric failures become NaN rows and the sweep continues")
{
    // equal dominant poles on the FSO and relay-to-vehicle sides make the AF asymptote degenerate
    const Config c = parse_config(R"(
relay: {mode: af}
sweep: {axis: snr_db, values: [30, 40]}
fso: {hops: 1, turbulence: {alpha1: 1, beta1: 1, omega1: 1, alpha2: 1, beta2: 3, omega2: 1}, rho: 10}
rf: {hops: 1, fading: {alpha1: 1, beta1: 1, omega1: 1, alpha2: 1, beta2: 3, omega2: 1}, shadowing: 15, exponent: 2,
     los: {enabled: false}}
)");
    RunOptions opt;
    opt.methods = Method::exact | Method::asymptotic;
    const SweepOutput out = run_sweep(c, opt);
    const auto r = rows(out.csv);
    REQUIRE(r.size() == 5);
    CHECK(r[2][2] == "asymptotic");
    CHECK(r[2][3] == "nan");
    CHECK(r[4][3] == "nan");
    CHECK(std::isfinite(std::stod(r[1][3])));
    CHECK(out.failures == 2);
    REQUIRE(out.messages.size() == 2);
    CHECK(out.messages[0].find("asymptotic") != std::string::npos);
}
