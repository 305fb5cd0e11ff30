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

// Acceptance checks. One line per criterion: "criterion N: PASS|FAIL ...".
// Usage: acceptance [--only N] [--cli path-to-command-line-tool]
#include "cascade/cascade.hpp"
#include "channels/channels.hpp"
#include "channels/presets.hpp"
#include "foxh/foxh.hpp"
#include "metrics/metrics.hpp"
#include "montecarlo/stats.hpp"
#include "relaying/relaying.hpp"
#include "scenario/config.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace riscascade;

namespace
{
    // pinned tolerances
    constexpr double norm_tol = 1e-5;           // 1: |integral - 1|
    constexpr double exp_identity_tol = 1e-10;  // 2: absolute
    constexpr double separability_tol = 1e-8;   // 2: relative
    constexpr double moment_tol = 1e-8;         // 2: relative
    constexpr std::size_t mc_samples = 10'000'000;
    constexpr double ks_slack = 2e-3;           // 3: sup-distance < 1.95/sqrt(N) + slack
    constexpr std::size_t ks_nodes = 4000;
    constexpr double af_rel = 1e-2, af_abs = 1e-4; // 3: |exact - oracle| <= max(rel*oracle, abs)
    constexpr double slope_rel_tol = 0.05;      // 4
    constexpr double ratio_lo = 0.8, ratio_hi = 1.25;
    constexpr double gap_target_db = 10.0, gap_tol_db = 2.0, gap_level = 1e-3; // 5
    constexpr double ber_slope_st = 0.93, ber_slope_mt = 1.12, ber_slope_tol = 0.15; // 6
    constexpr double ber_fit_lo_dbm = 40.0, ber_fit_hi_dbm = 50.0;
    constexpr double df_ulps = 4.0;             // 7

    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        void require(bool ok, const std::string &what)
        {
            if (!ok)
            {
                pass = false;
                detail << " [failed: " << what << "]";
            }
        }
    };

    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

    double integrate_log(const std::function<double(double)> &f, double lo, double hi)
    {
        return GK::integrate([&](double y) { const double x = std::exp(y); return f(x) * x; }, lo, hi, 15, 1e-12);
    }

    std::string fmt(double v, int prec = 4)
    {
        std::ostringstream o;
        o.precision(prec);
        o << v;
        return o.str();
    }

    const channels::DGGParams ST = channels::presets::strong_turbulence();
    const channels::DGGParams MT = channels::presets::moderate_turbulence();
    const channels::DGGParams RF = channels::presets::rf_fading();

    cascade::HopChainFSO fso_chain(const channels::DGGParams &t, int k, double rho)
    {
        cascade::HopChainFSO c;
        for (int i = 0; i < k; ++i)
            c.hops.push_back({t, {rho * rho, 1.0}});
        return c;
    }

    cascade::HopChainRF rf_chain(int k, double m, double d, double a)
    {
        cascade::HopChainRF c;
        for (int i = 0; i < k; ++i)
            c.hops.push_back({RF, {m}});
        c.mobility = {d, a};
        return c;
    }

    // ---------------------------------------------------------------- 1
    void normalisation(Outcome &o)
    {
        struct Case
        {
            const char *name;
            std::function<double()> integral;
        };
        const channels::MobilityParams mob{50.0, 4.0}, mob3{100.0, 3.0};
        const std::vector<Case> cases = {
            {"gg", [] { return integrate_log([](double x) { return channels::gg_pdf(ST.first, x); }, -40, 8); }},
            {"gg", [] { return integrate_log([](double x) { return channels::gg_pdf(MT.second, x); }, -40, 8); }},
            {"pe", [] { return GK::integrate([](double x) { return channels::pe_pdf({6.25, 1.0}, x); }, 0.0, 1.0, 15, 1e-13); }},
            {"pe", [] { return GK::integrate([](double x) { return channels::pe_pdf({25.0, 0.8}, x); }, 0.0, 0.8, 15, 1e-13); }},
            {"shadow", [] { return integrate_log([](double x) { return channels::ig_sqrt_pdf({1.2}, x); }, -10, 40); }},
            {"shadow", [] { return integrate_log([](double x) { return channels::ig_sqrt_pdf({15.0}, x); }, -10, 30); }},
            {"rwp", [&] { return GK::integrate([&](double r) { return channels::rwp_pdf(mob, r); }, 0.0, mob.d, 15, 1e-13); }},
            {"dgg", [] { return integrate_log([](double x) { return channels::dgg_pdf(ST, x); }, -40, 8); }},
            {"dgg", [] { return integrate_log([](double x) { return channels::dgg_pdf(MT, x); }, -40, 8); }},
            {"dgg_pe", [] { return integrate_log([](double x) { return channels::dgg_pe_pdf(ST, {6.25, 1.0}, x); }, -40, 8); }},
            {"dgg_pe", [] { return integrate_log([](double x) { return channels::dgg_pe_pdf(MT, {25.0, 1.0}, x); }, -40, 8); }},
            {"dgg_shadow", [] { return integrate_log([](double x) { return channels::dgg_shadow_pdf(RF, {1.2}, x); }, -30, 30); }},
            {"dgg_shadow", [] { return integrate_log([](double x) { return channels::dgg_shadow_pdf(RF, {7.4}, x); }, -30, 30); }},
            {"lasthop", [&] { return integrate_log([&](double x) { return channels::lasthop_pdf(RF, {1.2}, mob, x); }, -40, 25); }},
            {"lasthop", [&] { return integrate_log([&](double x) { return channels::lasthop_pdf(RF, {7.4}, mob3, x); }, -40, 25); }},
            {"fso_cascade", [] { return integrate_log([](double x) { return cascade::fso_cascade_pdf(fso_chain(ST, 2, 2.5), x); }, -40, 6); }},
            {"fso_cascade", [] { return integrate_log([](double x) { return cascade::fso_cascade_pdf(fso_chain(MT, 3, 5.0), x); }, -40, 6); }},
            {"rf_cascade", [] { return integrate_log([](double x) { return cascade::rf_cascade_pdf(rf_chain(2, 1.2, 50, 4), x); }, -40, 25); }},
            {"rf_cascade", [] { return integrate_log([](double x) { return cascade::rf_cascade_pdf(rf_chain(3, 7.4, 100, 3), x); }, -40, 25); }},
        };
        double worst = 0.0;
        std::string worst_name;
        for (const auto &c : cases)
        {
            double err = INFINITY;
            try
            {
                err = std::abs(c.integral() - 1.0);
            }
            catch (const std::exception &e)
            {
                o.require(false, std::string(c.name) + ": " + e.what());
            }
            if (!(err <= worst))
            {
                worst = err;
                worst_name = c.name;
            }
            o.require(err <= norm_tol, std::string(c.name) + " off by " + fmt(err));
        }
        o.detail << cases.size() << " densities, worst |integral-1| = " << fmt(worst, 3) << " (" << worst_name
                 << "), tol " << norm_tol;
    }

    // ---------------------------------------------------------------- 2
    double gg_moment(const channels::GGParams &p, double r)
    {
        return boost::math::tgamma(p.beta + r / p.alpha) / boost::math::tgamma(p.beta) * std::pow(p.omega / p.beta, r / p.alpha);
    }

    void foxh_identities(Outcome &o)
    {
        const auto e = foxh::univariate(foxh::Block{1, 0, {}, {{0.0, 1.0}}});
        double worst_exp = 0.0;
        for (int i = 0; i <= 60; ++i)
        {
            const double x = 0.01 * std::pow(2000.0, i / 60.0);
            worst_exp = std::max(worst_exp, std::abs(foxh::eval_1d(e, {}, x) - std::exp(-x)));
        }
        o.require(worst_exp <= exp_identity_tol, "exponential identity");

        foxh::ContourPolicy tight;
        tight.rel_tol = 1e-11;
        const auto t1 = channels::gg_template(MT.first), t2 = channels::gg_template(ST.second),
                   t3 = channels::dgg_template(RF);
        double worst_sep = 0.0;
        for (auto [x1, x2, x3] : std::vector<std::array<double, 3>>{{0.3, 1.7, 0.9}, {2.0, 0.05, 3.0}, {1.0, 1.0, 0.2}})
        {
            const double a = foxh::eval_1d(foxh::univariate(t1.h), tight, x1);
            const double b = foxh::eval_1d(foxh::univariate(t2.h), tight, x2);
            const double c = foxh::eval_1d(foxh::univariate(t3.h), tight, x3);
            foxh::FoxHSpec s2, s3;
            s2.blocks = {t1.h, t2.h};
            s3.blocks = {t1.h, t2.h, t3.h};
            worst_sep = std::max(worst_sep, std::abs(foxh::eval_2d(s2, tight, x1, x2) / (a * b) - 1.0));
            worst_sep = std::max(worst_sep, std::abs(foxh::eval_3d(s3, tight, x1, x2, x3) / (a * b * c) - 1.0));
        }
        o.require(worst_sep <= separability_tol, "separability");

        double worst_mom = 0.0;
        auto mom = [&](const foxh::DensityTemplate &t, double r, double ref)
        { worst_mom = std::max(worst_mom, std::abs(foxh::mellin_moment(t, r) / ref - 1.0)); };
        for (const auto &p : {ST, MT, RF})
            for (double r : {0.0, 0.5, 1.0, 2.0, 3.0})
            {
                mom(channels::gg_template(p.first), r, gg_moment(p.first, r));
                mom(channels::gg_template(p.second), r, gg_moment(p.second, r));
                mom(channels::dgg_template(p), r, gg_moment(p.first, r) * gg_moment(p.second, r));
                // pointing: rho^2 / (rho^2 + r) A0^r; shadowing: Gamma(m - r/2)/Gamma(m) (m-1)^(r/2)
                mom(channels::dgg_pe_template(p, {6.25, 0.8}), r,
                    gg_moment(p.first, r) * gg_moment(p.second, r) * 6.25 / (6.25 + r) * std::pow(0.8, r));
                mom(channels::dgg_shadow_template(p, {7.4}), r,
                    gg_moment(p.first, r) * gg_moment(p.second, r) * boost::math::tgamma(7.4 - r / 2.0) /
                        boost::math::tgamma(7.4) * std::pow(6.4, r / 2.0));
            }
        o.require(worst_mom <= moment_tol, "Mellin moments");
        o.detail << "exp identity max abs err " << fmt(worst_exp, 3) << " (tol " << exp_identity_tol
                 << "), separability max rel err " << fmt(worst_sep, 3) << " (tol " << separability_tol
                 << "), moments max rel err " << fmt(worst_mom, 3) << " (tol " << moment_tol << ")";
    }

    // ---------------------------------------------------------------- 3
    void oracle_equivalence(Outcome &o)
    {
        const double band = 1.95 / std::sqrt(double(mc_samples)) + ks_slack;
        channels::Rng rng(20260);
        std::vector<double> xs(mc_samples);
        double worst_ks = 0.0;
        int cases = 0;
        auto ks = [&](const std::string &name, const std::function<double(channels::Rng &)> &draw,
                      const std::function<double(double)> &cdf)
        {
            for (auto &x : xs)
                x = draw(rng);
            std::sort(xs.begin(), xs.end());
            const double d = montecarlo::ks_distance(xs, cdf, ks_nodes);
            worst_ks = std::max(worst_ks, d);
            ++cases;
            o.require(d < band, name + " KS " + fmt(d));
        };
        for (const auto &[tname, t] : {std::pair{"ST", ST}, std::pair{"MT", MT}})
            for (int k : {1, 2})
            {
                const auto chain = fso_chain(t, k, 2.5);
                ks(std::string("fso ") + tname + " K1=" + std::to_string(k),
                   [&](channels::Rng &r)
                   {
                       double x = 1.0;
                       for (const auto &h : chain.hops)
                           x *= channels::sample_dgg_pe(h.turbulence, h.pointing, r);
                       return x;
                   },
                   [&](double x) { return cascade::fso_cascade_cdf(chain, x); });
            }
        for (int k : {1, 2})
        {
            const auto chain = rf_chain(k, 1.2, 50.0, 4.0);
            ks("rf K2=" + std::to_string(k),
               [&](channels::Rng &r)
               {
                   double x = 1.0;
                   for (std::size_t i = 0; i + 1 < chain.hops.size(); ++i)
                       x *= channels::sample_dgg_shadow(chain.hops[i].fading, chain.hops[i].shadow, r);
                   return x * channels::sample_lasthop(chain.hops.back().fading, chain.hops.back().shadow,
                                                       chain.mobility, r);
               },
               [&](double x) { return cascade::rf_cascade_cdf(chain, x); });
        }
        xs.clear();
        xs.shrink_to_fit();

        // trivariate AF CDF against the single-integral oracle, mean SNR 0..95 dB, threshold 0 dB
        double worst_af = 0.0;
        int points = 0;
        for (const auto &t : {ST, MT})
            for (int k1 : {1, 2})
                for (int k2 : {1, 2})
                {
                    relaying::Scenario s;
                    s.fso = fso_chain(t, k1, 2.5);
                    s.r2v.rf = rf_chain(k2, 1.2, 50.0, 4.0);
                    s.r2v.los = cascade::LOSLink{RF, {1.2}};
                    s.relay.kind = relaying::RelayKind::fixed_gain_af;
                    for (int i = 0; i < 20; ++i)
                    {
                        const double g = std::pow(10.0, 0.5 * i);
                        s.scale = {g, g * std::pow(50.0, 4.0), g};
                        const double exact = relaying::af_cdf_exact(s, 1.0);
                        const double oracle = relaying::af_cdf_seminumeric(s, 1.0);
                        const double err = std::abs(exact - oracle);
                        worst_af = std::max(worst_af, err / std::max(af_rel * oracle, af_abs));
                        ++points;
                        o.require(err <= std::max(af_rel * oracle, af_abs),
                                  "AF K1=" + std::to_string(k1) + " K2=" + std::to_string(k2) + " at " +
                                      fmt(5.0 * i) + " dB: " + fmt(exact) + " vs " + fmt(oracle));
                    }
                }
        o.detail << cases << " cascade CDFs at N=" << mc_samples << ", worst KS " << fmt(worst_ks, 3) << " < "
                 << fmt(band, 3) << "; AF vs single-integral oracle on " << points
                 << " points, worst error / allowance " << fmt(worst_af, 3);
    }

    // ---------------------------------------------------------------- 4
    void diversity(Outcome &o)
    {
        for (const char *name : {"st", "mt"})
        {
            const auto cfg = scenario::load_preset(name);
            const auto &c = cfg.curves[0];
            const auto s60 = scenario::scenario_at(c, scenario::SweepAxis::snr_db, 60.0);
            const auto s70 = scenario::scenario_at(c, scenario::SweepAxis::snr_db, 70.0);
            const auto poles = metrics::diversity_order(s60);
            const double p60 = metrics::outage(s60, cfg.gamma_th), p70 = metrics::outage(s70, cfg.gamma_th);
            const double slope = -std::log10(p70 / p60);
            const double ratio = metrics::outage_asymptotic(s70, cfg.gamma_th) / p70;
            o.require(std::abs(slope / poles.g_out() - 1.0) <= slope_rel_tol, std::string(name) + " slope");
            o.require(ratio >= ratio_lo && ratio <= ratio_hi, std::string(name) + " asymptotic/exact ratio");
            o.detail << name << ": slope " << fmt(slope) << " vs G_out " << fmt(poles.g_out()) << " (p1 "
                     << fmt(poles.p1) << ", p2 " << fmt(poles.p2) << ", p3 " << fmt(poles.p3) << "), ratio@70dB "
                     << fmt(ratio) << "; ";
        }
    }

    // ---------------------------------------------------------------- 5
    double power_for(const scenario::Curve &c, double gamma_th, double level)
    {
        auto f = [&](double p)
        { return std::log(relaying::fso_cdf(scenario::scenario_at(c, scenario::SweepAxis::power_dbm, p), gamma_th) / level); };
        double lo = -40.0, hi = 160.0;
        if (f(lo) < 0.0 || f(hi) > 0.0)
            return NAN;
        for (int i = 0; i < 60; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (f(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    void fig4a_trend(Outcome &o)
    {
        const auto cfg = scenario::load_preset("fig4a");
        if (cfg.curves.size() != 3)
            return o.require(false, "fig4a must have three curves");
        int ordered = 0;
        for (double p : cfg.grid)
        {
            double v[3];
            for (int i = 0; i < 3; ++i)
                v[i] = relaying::fso_cdf(scenario::scenario_at(cfg.curves[i], cfg.axis, p), cfg.gamma_th);
            ordered += v[0] > v[1] && v[1] > v[2];
        }
        o.require(ordered == int(cfg.grid.size()), "ordering K1=2 > 3 > 4");
        double p[3];
        for (int i = 0; i < 3; ++i)
            p[i] = power_for(cfg.curves[i], cfg.gamma_th, gap_level);
        const double gap = p[0] - p[2];
        o.require(std::abs(gap - gap_target_db) <= gap_tol_db, "power gap");
        o.detail << "strict ordering at " << ordered << "/" << cfg.grid.size() << " powers; power for outage "
                 << gap_level << ": K1=2 " << fmt(p[0]) << " dBm, K1=3 " << fmt(p[1]) << " dBm, K1=4 " << fmt(p[2])
                 << " dBm; gap " << fmt(gap) << " dB vs " << gap_target_db << " +/- " << gap_tol_db;
    }

    // ---------------------------------------------------------------- 6
    void ber_slope(Outcome &o)
    {
        for (auto [name, target] : {std::pair{"st", ber_slope_st}, std::pair{"mt", ber_slope_mt}})
        {
            const auto cfg = scenario::load_preset(name);
            const auto &c = cfg.curves[0];
            auto ber = [&](double p)
            { return metrics::ber_fso(scenario::scenario_at(c, scenario::SweepAxis::power_dbm, p), cfg.modulation); };
            // decades of BER per decade of transmit power
            const double slope = -std::log10(ber(ber_fit_hi_dbm) / ber(ber_fit_lo_dbm)) * 10.0 / (ber_fit_hi_dbm - ber_fit_lo_dbm);
            const auto poles = metrics::diversity_order(scenario::scenario_at(c, cfg.axis, ber_fit_hi_dbm));
            o.require(std::abs(slope - target) <= ber_slope_tol, std::string(name) + " slope");
            o.detail << name << ": slope " << fmt(slope) << " vs " << target << " +/- " << ber_slope_tol
                     << " (limit 2 p1 = " << fmt(2.0 * poles.p1) << "); ";
        }
        o.detail << "fit " << ber_fit_lo_dbm << "-" << ber_fit_hi_dbm << " dBm";
    }

    // ---------------------------------------------------------------- 7
    void df_identity(Outcome &o)
    {
        const double eps = std::numeric_limits<double>::epsilon();
        double worst_ulps = 0.0;
        int points = 0;
        for (const char *name : {"st", "mt"})
        {
            const auto cfg = scenario::load_preset(name);
            for (double p : cfg.grid)
                for (double g : {0.1, 1.0, 10.0})
                {
                    const auto s = scenario::scenario_at(cfg.curves[0], cfg.axis, p);
                    const double ff = relaying::fso_cdf(s, g), fr = relaying::r2v_cdf(s, g);
                    const double df = relaying::df_cdf(s, g);
                    const double expanded = ff + fr - ff * fr;
                    worst_ulps = std::max(worst_ulps, std::abs(df - expanded) / (eps * std::max(df, 1e-300)));
                    ++points;
                }
        }
        o.require(worst_ulps <= df_ulps, "DF identity");

        int af_points = 0, violations = 0;
        const auto fig7b = scenario::load_preset("fig7b");
        for (const auto &c : fig7b.curves)
        {
            if (c.scenario.relay.kind != relaying::RelayKind::fixed_gain_af)
                continue;
            for (double p : fig7b.grid)
            {
                const auto s = scenario::scenario_at(c, fig7b.axis, p);
                ++af_points;
                if (!(relaying::af_cdf(s, fig7b.gamma_th) >= relaying::fso_cdf(s, fig7b.gamma_th)))
                    ++violations;
            }
        }
        for (int i = 0; i < 20; ++i)
        {
            relaying::Scenario s;
            s.fso = fso_chain(ST, 2, 2.5);
            s.r2v.rf = rf_chain(2, 1.2, 50.0, 4.0);
            s.r2v.los = cascade::LOSLink{RF, {1.2}};
            s.relay.kind = relaying::RelayKind::fixed_gain_af;
            const double g = std::pow(10.0, 0.5 * i);
            s.scale = {g, g * std::pow(50.0, 4.0), g};
            ++af_points;
            if (!(relaying::af_cdf(s, 1.0) >= relaying::fso_cdf(s, 1.0)))
                ++violations;
        }
        o.require(violations == 0, "AF below FSO");
        o.detail << "DF identity on " << points << " points, worst " << fmt(worst_ulps, 3) << " ulp (tol " << df_ulps
                 << "); F_AF >= F_FSO on " << af_points - violations << "/" << af_points << " points";
    }

    // ---------------------------------------------------------------- 8
    std::string capture(const std::string &cmd, int &status)
    {
        std::string out;
        FILE *p = popen(cmd.c_str(), "r");
        if (!p)
        {
            status = -1;
            return out;
        }
        char buf[65536];
        std::size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, p)) > 0)
            out.append(buf, n);
        status = pclose(p);
        return out;
    }

    void reproducibility(Outcome &o, const std::string &cli)
    {
        if (cli.empty())
            return o.require(false, "no --cli given");
        for (const char *preset : {"mt", "st"})
        {
            const std::string base = "'" + cli + "' validate --preset " + preset + " --seed 99";
            int s1 = 0, s2 = 0, s4 = 0;
            const std::string a = capture(base + " --workers 1", s1);
            const std::string b = capture(base + " --workers 1", s2);
            const std::string c = capture(base + " --workers 4", s4);
            o.require(s1 == 0 && s2 == 0 && s4 == 0, std::string(preset) + " exit status");
            o.require(!a.empty() && a == b, std::string(preset) + " repeated run differs");
            o.require(!a.empty() && a == c, std::string(preset) + " 4 workers differ");
            std::size_t rows = std::count(a.begin(), a.end(), '\n');
            o.detail << preset << ": " << a.size() << " bytes, " << rows << " lines identical across 2 runs and workers {1,4}; ";
        }
    }
}

int main(int argc, char **argv)
{
    int only = 0;
    std::string cli;
    for (int i = 1; i < argc; ++i)
    {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (a == "--cli" && i + 1 < argc)
            cli = argv[++i];
        else
        {
            std::cerr << "usage: acceptance [--only N] [--cli path]\n";
            return 2;
        }
    }

    struct Criterion
    {
        int id;
        const char *title;
        std::function<void(Outcome &)> run;
    };
    const std::vector<Criterion> all = {
        {1, "density normalisation", normalisation},
        {2, "Fox-H identities", foxh_identities},
        {3, "analytic CDFs vs Monte Carlo and AF vs single-integral oracle", oracle_equivalence},
        {4, "outage diversity order", diversity},
        {5, "hop-count trend and power gap", fig4a_trend},
        {6, "FSO BER slope", ber_slope},
        {7, "DF identity and AF/FSO ordering", df_identity},
        {8, "validate reproducibility", [&](Outcome &o) { reproducibility(o, cli); }},
    };

    int failed = 0;
    for (const auto &c : all)
    {
        if (only && c.id != only)
            continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            c.run(o);
        }
        catch (const std::exception &e)
        {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %d: %s %s: %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.str().c_str(),
                    secs);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
