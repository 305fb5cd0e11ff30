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

#include "metrics/metrics.hpp"

#include "common/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace riscascade::metrics
{
    namespace
    {
        double residue_term(const MellinForm &form, double gamma, std::span<foxh::PoleCluster> clusters,
                            const foxh::ExtraFactor &extra = {})
        {
            std::vector<double> x(form.base.size());
            for (std::size_t k = 0; k < x.size(); ++k)
                x[k] = form.base[k] * std::pow(gamma, form.power[k]);
            return form.prefactor * foxh::cluster_residue(form.spec, x, clusters, extra);
        }

        std::vector<foxh::PoleCluster> clusters_of(const MellinForm &form)
        {
            std::vector<foxh::PoleCluster> c;
            for (std::size_t k = 0; k < form.spec.variables(); ++k)
                c.push_back(foxh::leading_cluster(form.spec, k));
            return c;
        }

        double exponent(std::span<const foxh::PoleCluster> c)
        {
            double p = 0.0;
            for (const auto &k : c)
                p -= k.leading;
            return p;
        }

        double clamp_ber(double v) { return std::clamp(v, 0.0, 0.5); }
    }

    void check(const ModulationParams &m)
    {
        require(m.p > 0.0 && m.q > 0.0 && std::isfinite(m.p) && std::isfinite(m.q),
                "modulation parameters p and q must be positive");
    }

    double outage(const Scenario &s, double gamma_th)
    {
        require(gamma_th > 0.0, "outage threshold must be positive");
        return relaying::cdf(s, gamma_th);
    }

    DominantPoles diversity_order(const Scenario &s)
    {
        relaying::check(s);
        DominantPoles d;
        d.p1 = d.p2 = std::numeric_limits<double>::infinity();
        for (const auto &h : s.fso.hops)
            d.p1 = std::min({d.p1, 0.5 * h.turbulence.first.alpha * h.turbulence.first.beta,
                             0.5 * h.turbulence.second.alpha * h.turbulence.second.beta, 0.5 * h.pointing.rho2});
        for (const auto &h : s.r2v.rf.hops)
            d.p2 = std::min({d.p2, 0.5 * h.fading.first.alpha * h.fading.first.beta,
                             0.5 * h.fading.second.alpha * h.fading.second.beta});
        if (s.r2v.los)
            d.p3 = std::min(0.5 * s.r2v.los->fading.first.alpha * s.r2v.los->fading.first.beta,
                            0.5 * s.r2v.los->fading.second.alpha * s.r2v.los->fading.second.beta);
        return d;
    }

    double outage_asymptotic_fso(const Scenario &s, double gamma_th)
    {
        require(gamma_th > 0.0, "outage threshold must be positive");
        relaying::check(s);
        const MellinForm f = relaying::fso_cdf_form(s.fso, s.scale.gbar_fso);
        auto c = clusters_of(f);
        return residue_term(f, gamma_th, c);
    }

    double outage_asymptotic_r2v(const Scenario &s, double gamma_th)
    {
        require(gamma_th > 0.0, "outage threshold must be positive");
        relaying::check(s);
        const MellinForm z = relaying::r2v_cdf_form(s.r2v, s.scale);
        auto c = clusters_of(z);
        return residue_term(z, gamma_th, c);
    }

    // leading terms of F_FSO + F_R2V; the product term is of higher order
    double outage_asymptotic_df(const Scenario &s, double gamma_th)
    {
        return outage_asymptotic_fso(s, gamma_th) + outage_asymptotic_r2v(s, gamma_th);
    }

    double outage_asymptotic_af(const Scenario &s, double gamma_th)
    {
        require(gamma_th > 0.0, "outage threshold must be positive");
        relaying::check(s);
        const double c = relaying::resolve_c(s.relay, s.scale);
        const MellinForm f = relaying::fso_cdf_form(s.fso, s.scale.gbar_fso);
        MellinForm z = relaying::r2v_cdf_form(s.r2v, s.scale);
        auto cf = clusters_of(f), cz = clusters_of(z);
        const double p1 = exponent(cf), pz = exponent(cz);
        if (std::abs(p1 - pz) < 1e-3 * std::max(p1, pz))
            throw RepeatedPole("FSO and R2V dominant exponents coincide");

        if (p1 < pz)
        {
            // FSO-limited: residue of F_FSO weighted by E[(1 + C/Z)^-s]
            cf[0].radius = std::min(cf[0].radius, 0.5 * (pz - p1));
            const relaying::LogGridDensity g = relaying::tabulate_r2v_density(s);
            std::vector<double> lg(g.z.size());
            for (std::size_t j = 0; j < lg.size(); ++j)
                lg[j] = std::log1p(c / g.z[j]);
            auto extra = [&](std::span<const foxh::cplx> v)
            {
                foxh::cplx m = 0.0;
                for (std::size_t j = 0; j < lg.size(); ++j)
                    m += g.w[j] * std::exp(-v[0] * lg[j]);
                return m;
            };
            return residue_term(f, gamma_th, cf, extra);
        }

        // R2V-limited: F_Z(gamma C / gamma_FSO) averaged over the FSO SNR
        for (auto &k : cz)
            k.radius = std::min(k.radius, 0.5 * (p1 - pz) / double(cz.size()));
        for (auto &b : z.base)
            b *= c;
        const foxh::DensityTemplate fso =
            cascade::snr_template(cascade::fso_cascade_template(s.fso), s.scale.gbar_fso);
        auto extra = [&](std::span<const foxh::cplx> u)
        {
            foxh::cplx r = 0.0;
            for (auto v : u)
                r += v;
            return std::exp(foxh::log_mellin_moment(fso, r));
        };
        return residue_term(z, gamma_th, cz, extra);
    }

    double outage_asymptotic(const Scenario &s, double gamma_th)
    {
        return s.relay.kind == relaying::RelayKind::df ? outage_asymptotic_df(s, gamma_th)
                                                        : outage_asymptotic_af(s, gamma_th);
    }

    double ber_quadrature(const std::function<double(double)> &cdf, const ModulationParams &m)
    {
        check(m);
        const double norm = std::exp(m.p * std::log(m.q) - std::lgamma(m.p));
        auto log_kernel = [&](double g) { return (m.p - 1.0) * std::log(g) - m.q * g; };
        const double ref = std::max((m.p - 1.0) / m.q, 1.0 / m.q);
        double hi = ref;
        while (log_kernel(hi) - log_kernel(ref) > std::log(1e-14))
            hi *= 1.1;
        const double y_hi = std::log(hi), y_lo = y_hi - std::max(40.0, 40.0 / m.p);
        auto f = [&](double y)
        {
            const double g = std::exp(y);
            return std::exp(log_kernel(g) + y) * cdf(g);
        };
        using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
        double err = 0.0;
        const double v = GK::integrate(f, y_lo, y_hi, 15, 1e-9, &err);
        if (!std::isfinite(v))
            throw QuadratureError("BER quadrature failed");
        return clamp_ber(0.5 * norm * v);
    }

    MellinForm ber_form(const MellinForm &cdf, const ModulationParams &m)
    {
        check(m);
        MellinForm b = cdf;
        foxh::JointGamma j{m.p, {}, true};
        for (std::size_t k = 0; k < b.base.size(); ++k)
        {
            j.coeffs.push_back(-b.power[k]);
            b.base[k] *= std::pow(m.q, -b.power[k]);
            b.power[k] = 0.0;
        }
        b.spec.joint.push_back(j);
        b.prefactor /= 2.0 * boost::math::tgamma(m.p);
        return b;
    }

    double ber_from_form(const MellinForm &cdf, const ModulationParams &m)
    {
        return relaying::evaluate(ber_form(cdf, m), 1.0);
    }

    double ber_fso(const Scenario &s, const ModulationParams &m)
    {
        try
        {
            return clamp_ber(ber_from_form(relaying::fso_cdf_form(s.fso, s.scale.gbar_fso), m));
        }
        catch (const NotConverged &)
        {
            return ber_quadrature([&](double g) { return relaying::fso_cdf(s, g); }, m);
        }
    }

    double ber_r2v(const Scenario &s, const ModulationParams &m)
    {
        try
        {
            return clamp_ber(ber_from_form(relaying::r2v_cdf_form(s.r2v, s.scale), m));
        }
        catch (const NotConverged &)
        {
            return ber_quadrature([&](double g) { return relaying::r2v_cdf(s, g); }, m);
        }
    }

    double ber_df_combine(double ber_fso, double ber_r2v)
    {
        return ber_fso + ber_r2v - 2.0 * ber_fso * ber_r2v;
    }

    double ber_df(const Scenario &s, const ModulationParams &m)
    {
        return clamp_ber(ber_df_combine(ber_fso(s, m), ber_r2v(s, m)));
    }

    double ber_af_closed(const Scenario &s, const ModulationParams &m)
    {
        try
        {
            const double delta =
                ber_from_form(relaying::af_delta_form(s, relaying::resolve_c(s.relay, s.scale)), m);
            return clamp_ber(ber_fso(s, m) + std::max(delta, 0.0));
        }
        catch (const NotConverged &)
        {
            return ber_quadrature([&](double g) { return relaying::af_cdf(s, g); }, m);
        }
    }

    double ber(const Scenario &s, const ModulationParams &m)
    {
        return s.relay.kind == relaying::RelayKind::df ? ber_df(s, m) : ber_af_closed(s, m);
    }
}
