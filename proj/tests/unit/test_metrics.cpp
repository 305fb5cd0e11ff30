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

#include <doctest.h>

#include "channels/presets.hpp"
#include "common/error.hpp"
#include "metrics/metrics.hpp"

#include <cmath>
#include <vector>

using namespace riscascade;
using namespace riscascade::metrics;
using relaying::RelayKind;

namespace
{
    // all links at mean SNR gbar, the RF side referred to the nominal last-hop distance
    Scenario scenario(bool strong, int k1, double rho2, int k2, bool los, RelayKind kind, double gbar)
    {
        Scenario s;
        for (int i = 0; i < k1; ++i)
            s.fso.hops.push_back({strong ? channels::presets::strong_turbulence() : channels::presets::moderate_turbulence(),
                                  {rho2, 1.0}});
        for (int i = 0; i < k2; ++i)
            s.r2v.rf.hops.push_back({channels::presets::rf_fading(), {1.2}});
        s.r2v.rf.mobility = {50.0, 4.0};
        if (los)
            s.r2v.los = cascade::LOSLink{channels::presets::rf_fading(), {1.2}};
        s.scale = {gbar, gbar * std::pow(50.0, 4.0), gbar};
        s.relay.kind = kind;
        return s;
    }

    MellinForm exponential_cdf(double mean)
    {
        const auto t = foxh::normalized(channels::gg_template({1.0, 1.0, mean}));
        return {t.psi, {t.zeta}, {1.0}, foxh::univariate(foxh::cdf_block(t.h))};
    }

    double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}

TEST_CASE("dominant poles")
{
    const Scenario s = scenario(true, 2, 6.25, 2, true, RelayKind::df, 1e3);
    const DominantPoles d = diversity_order(s);
    CHECK(d.p1 == doctest::Approx(0.465525).epsilon(1e-12));
    CHECK(d.p2 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(d.p3 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(d.g_out() == doctest::Approx(1.965525).epsilon(1e-12));

    // the same exponents read off the Mellin-Barnes forms
    const MellinForm f = relaying::fso_cdf_form(s.fso, 1.0);
    CHECK(-foxh::leading_cluster(f.spec, 0).leading == doctest::Approx(d.p1).epsilon(1e-12));
    const MellinForm z = relaying::r2v_cdf_form(s.r2v, s.scale);
    CHECK(-foxh::leading_cluster(z.spec, 0).leading == doctest::Approx(d.p2).epsilon(1e-12));
    CHECK(-foxh::leading_cluster(z.spec, 1).leading == doctest::Approx(d.p3).epsilon(1e-12));

    Scenario nolos = s;
    nolos.r2v.los.reset();
    CHECK(diversity_order(nolos).p3 == 0.0);
}

TEST_CASE("BER quadrature reference values")
{
    const ModulationParams dbpsk{1.0, 1.0};
    CHECK(ber_quadrature([](double) { return 1.0; }, dbpsk) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(ber_quadrature([](double) { return 0.0; }, dbpsk) == 0.0);
    for (double mean : {0.5, 10.0, 1e3})
    {
        auto cdf = [&](double g) { return -std::expm1(-g / mean); };
        CHECK(std::abs(ber_quadrature(cdf, dbpsk) - 0.5 / (1.0 + mean)) < 1e-6);
        CHECK(std::abs(ber_from_form(exponential_cdf(mean), dbpsk) - 0.5 / (1.0 + mean)) < 1e-6);

        // coherent BPSK over Rayleigh fading
        const ModulationParams bpsk{0.5, 1.0};
        const double ref = 0.5 * (1.0 - std::sqrt(mean / (1.0 + mean)));
        CHECK(rel(ber_quadrature(cdf, bpsk), ref) < 1e-6);
        CHECK(rel(ber_from_form(exponential_cdf(mean), bpsk), ref) < 1e-5);
    }
    CHECK_THROWS_AS(ber_quadrature([](double) { return 1.0; }, {0.0, 1.0}), InvalidArgument);
}

TEST_CASE("closed-form BER agrees with quadrature")
{
    const ModulationParams m{1.0, 1.0};
    const Scenario s = scenario(false, 2, 6.25, 2, true, RelayKind::df, 300.0);
    CHECK(rel(ber_fso(s, m), ber_quadrature([&](double g) { return relaying::fso_cdf(s, g); }, m)) < 1e-4);
    CHECK(rel(ber_r2v(s, m), ber_quadrature([&](double g) { return relaying::r2v_cdf(s, g); }, m)) < 1e-4);

    Scenario af = s;
    af.relay.kind = RelayKind::fixed_gain_af;
    CHECK(rel(ber_af_closed(af, m), ber_quadrature([&](double g) { return relaying::af_cdf(af, g); }, m)) < 2e-2);

    CHECK(ber_df_combine(0.1, 0.2) == doctest::Approx(0.26).epsilon(1e-15));
    CHECK(ber_df_combine(0.5, 0.3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ber_df_combine(0.2, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ber_df(s, m) == doctest::Approx(ber_df_combine(ber_fso(s, m), ber_r2v(s, m))).epsilon(1e-15));
}

TEST_CASE("BER falls with the mean SNR and tends to one half at low SNR")
{
    const ModulationParams m{1.0, 1.0};
    for (RelayKind kind : {RelayKind::df, RelayKind::fixed_gain_af})
    {
        CHECK(ber(scenario(false, 2, 6.25, 2, true, kind, 1e-9), m) > 0.49);
        double prev = 0.5;
        for (double db = 0.0; db <= 60.0; db += 10.0)
        {
            const double v = ber(scenario(false, 2, 6.25, 2, true, kind, std::pow(10.0, db / 10.0)), m);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("outage limits")
{
    const Scenario s = scenario(false, 2, 6.25, 2, true, RelayKind::df, 1e3);
    CHECK(outage(s, 1e-12) < 1e-4);
    CHECK(outage(s, 1e12) > 1.0 - 1e-4);
    CHECK_THROWS_AS(outage(s, 0.0), InvalidArgument);
}

TEST_CASE("asymptotic outage approaches the exact value")
{
    for (RelayKind kind : {RelayKind::df, RelayKind::fixed_gain_af})
    {
        std::vector<double> gap;
        for (double db : {50.0, 60.0, 70.0})
        {
            const Scenario s = scenario(false, 2, 6.25, 2, true, kind, std::pow(10.0, db / 10.0));
            gap.push_back(std::abs(std::log(outage_asymptotic(s, 1.0) / outage(s, 1.0))));
        }
        CHECK(gap[2] < gap[1]);
        CHECK(gap[1] < gap[0]);
        CHECK(gap[2] < std::log(1.1));
    }

    // single dominant pole: the asymptote falls exactly as gbar^-p1
    const double a1 = outage_asymptotic(scenario(false, 1, 6.25, 2, true, RelayKind::df, 1e8), 1.0);
    const double a2 = outage_asymptotic(scenario(false, 1, 6.25, 2, true, RelayKind::df, 1e9), 1.0);
    const double p1 = diversity_order(scenario(false, 1, 6.25, 2, true, RelayKind::df, 1.0)).p1;
    CHECK(std::log10(a1 / a2) == doctest::Approx(p1).epsilon(1e-3));
}

TEST_CASE("AF asymptote rejects coinciding exponents")
{
    Scenario s = scenario(false, 1, 100.0, 1, false, RelayKind::fixed_gain_af, 1e6);
    s.fso.hops[0].turbulence = {{1.5, 1.0, 1.0}, {1.0, 1.5, 1.0}};
    CHECK_THROWS_AS(outage_asymptotic_af(s, 1.0), RepeatedPole);
}
