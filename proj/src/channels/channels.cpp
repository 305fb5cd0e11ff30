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

#include "channels/channels.hpp"

#include "common/error.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace riscascade::channels
{
    using foxh::Block;
    using foxh::DensityTemplate;

    namespace
    {
        bool pos(double v) { return v > 0.0 && std::isfinite(v); }

        double uniform_open(Rng &rng) // (0, 1]
        {
            return 1.0 - std::generate_canonical<double, 53>(rng);
        }
    }

    void check(const GGParams &p)
    {
        require(pos(p.alpha) && pos(p.beta) && pos(p.omega), "GG parameters must be positive and finite");
    }
    void check(const DGGParams &p)
    {
        check(p.first);
        check(p.second);
    }
    void check(const PointingParams &p)
    {
        require(pos(p.rho2), "pointing error rho^2 must be positive");
        require(p.a0 > 0.0 && p.a0 <= 1.0, "pointing error A0 must lie in (0, 1]");
    }
    void check(const ShadowParams &p)
    {
        require(p.m > 1.0 && std::isfinite(p.m), "shadowing severity m must exceed 1");
    }
    void check(const MobilityParams &p)
    {
        require(pos(p.d), "mobility hop length must be positive");
        require(p.a >= 0.0 && p.a <= 5.0, "path loss exponent must lie in [0, 5]");
    }

    DensityTemplate gg_template(const GGParams &p)
    {
        check(p);
        return {1.0 / std::tgamma(p.beta), 0.0, std::pow(p.beta / p.omega, 1.0 / p.alpha),
                Block{1, 0, {}, {{p.beta, 1.0 / p.alpha}}}};
    }

    DensityTemplate dgg_template(const DGGParams &p)
    {
        const std::array<DensityTemplate, 2> parts = {gg_template(p.first), gg_template(p.second)};
        return foxh::compose_product(parts);
    }

    DensityTemplate pe_template(const PointingParams &p)
    {
        check(p);
        return {p.rho2, 0.0, 1.0 / p.a0, Block{1, 0, {{p.rho2 + 1.0, 1.0}}, {{p.rho2, 1.0}}}};
    }

    // S = G^(-1/2), G ~ Gamma(m, 1/(m-1)):  E[S^s] = Gamma(m - s/2) (m-1)^(s/2) / Gamma(m)
    DensityTemplate shadow_template(const ShadowParams &p)
    {
        check(p);
        return {1.0 / std::tgamma(p.m), 0.0, 1.0 / std::sqrt(p.m - 1.0), Block{0, 1, {{1.0 - p.m, 0.5}}, {}}};
    }

    // L = r^(-a/2):  E[L^s] = 6 d^(-a s/2) Gamma(2 - a s/2) / Gamma(4 - a s/2)
    DensityTemplate mobility_template(const MobilityParams &p)
    {
        check(p);
        const double h = 0.5 * p.a;
        return {6.0, 0.0, std::pow(p.d, h), Block{0, 1, {{-1.0, h}}, {{-3.0, h}}}};
    }

    DensityTemplate dgg_pe_template(const DGGParams &p, const PointingParams &q)
    {
        const std::array<DensityTemplate, 3> parts = {gg_template(p.first), gg_template(p.second), pe_template(q)};
        return foxh::compose_product(parts);
    }

    DensityTemplate dgg_shadow_template(const DGGParams &p, const ShadowParams &s)
    {
        const std::array<DensityTemplate, 3> parts = {gg_template(p.first), gg_template(p.second), shadow_template(s)};
        return foxh::compose_product(parts);
    }

    DensityTemplate lasthop_template(const DGGParams &p, const ShadowParams &s, const MobilityParams &mob)
    {
        check(mob);
        if (mob.a == 0.0)
            return dgg_shadow_template(p, s);
        const std::array<DensityTemplate, 4> parts = {gg_template(p.first), gg_template(p.second), shadow_template(s),
                                                      mobility_template(mob)};
        return foxh::compose_product(parts);
    }

    double gg_pdf(const GGParams &p, double x)
    {
        check(p);
        if (!(x > 0.0))
        {
            const double ab = p.alpha * p.beta;
            if (ab < 1.0)
                return std::numeric_limits<double>::infinity();
            return ab == 1.0 ? p.alpha * std::pow(p.beta / p.omega, p.beta) / std::tgamma(p.beta) : 0.0;
        }
        const double lb = std::log(p.beta / p.omega);
        const double l = std::log(p.alpha) + p.beta * lb - std::lgamma(p.beta) + (p.alpha * p.beta - 1.0) * std::log(x) -
                         p.beta / p.omega * std::pow(x, p.alpha);
        return std::exp(l);
    }

    double gg_cdf(const GGParams &p, double x)
    {
        check(p);
        if (!(x > 0.0))
            return 0.0;
        return boost::math::gamma_p(p.beta, p.beta / p.omega * std::pow(x, p.alpha));
    }

    double dgg_pdf(const DGGParams &p, double x)
    {
        return foxh::template_pdf(dgg_template(p), x);
    }

    double pe_pdf(const PointingParams &p, double x)
    {
        check(p);
        if (!(x > 0.0) || x > p.a0)
            return 0.0;
        return p.rho2 / std::pow(p.a0, p.rho2) * std::pow(x, p.rho2 - 1.0);
    }

    double dgg_pe_pdf(const DGGParams &p, const PointingParams &q, double x)
    {
        return foxh::template_pdf(dgg_pe_template(p, q), x);
    }

    double ig_sqrt_pdf(const ShadowParams &p, double x)
    {
        check(p);
        if (!(x > 0.0))
            return 0.0;
        const double m = p.m;
        const double l = std::log(2.0) + m * std::log(m - 1.0) - std::lgamma(m) - (2.0 * m + 1.0) * std::log(x) - (m - 1.0) / (x * x);
        return std::exp(l);
    }

    double dgg_shadow_pdf(const DGGParams &p, const ShadowParams &s, double x)
    {
        return foxh::template_pdf(dgg_shadow_template(p, s), x);
    }

    double rwp_pdf(const MobilityParams &p, double r)
    {
        check(p);
        if (r < 0.0 || r > p.d)
            return 0.0;
        return 6.0 * r / (p.d * p.d) - 6.0 * r * r / (p.d * p.d * p.d);
    }

    double rwp_cdf(const MobilityParams &p, double r)
    {
        check(p);
        const double u = std::clamp(r / p.d, 0.0, 1.0);
        return u * u * (3.0 - 2.0 * u);
    }

    double lasthop_pdf(const DGGParams &p, const ShadowParams &s, const MobilityParams &mob, double x)
    {
        return foxh::template_pdf(lasthop_template(p, s, mob), x);
    }

    double sample_gg(const GGParams &p, Rng &rng)
    {
        std::gamma_distribution<double> g(p.beta, p.omega / p.beta);
        return std::pow(g(rng), 1.0 / p.alpha);
    }

    double sample_dgg(const DGGParams &p, Rng &rng)
    {
        const double a = sample_gg(p.first, rng);
        return a * sample_gg(p.second, rng);
    }

    double sample_pe(const PointingParams &p, Rng &rng)
    {
        return p.a0 * std::pow(uniform_open(rng), 1.0 / p.rho2);
    }

    double sample_shadow(const ShadowParams &p, Rng &rng)
    {
        std::gamma_distribution<double> g(p.m, 1.0 / (p.m - 1.0));
        return 1.0 / std::sqrt(g(rng));
    }

    // inverse of 3u^2 - 2u^3
    double sample_rwp(const MobilityParams &p, Rng &rng)
    {
        const double U = uniform_open(rng);
        const double u = 0.5 - std::sin(std::asin(1.0 - 2.0 * U) / 3.0);
        return p.d * std::clamp(u, 0.0, 1.0);
    }

    double sample_dgg_pe(const DGGParams &p, const PointingParams &q, Rng &rng)
    {
        const double a = sample_dgg(p, rng);
        return a * sample_pe(q, rng);
    }

    double sample_dgg_shadow(const DGGParams &p, const ShadowParams &s, Rng &rng)
    {
        const double a = sample_dgg(p, rng);
        return a * sample_shadow(s, rng);
    }

    double sample_lasthop(const DGGParams &p, const ShadowParams &s, const MobilityParams &mob, Rng &rng)
    {
        const double a = sample_dgg_shadow(p, s, rng);
        if (mob.a == 0.0)
            return a;
        double r = sample_rwp(mob, rng);
        while (!(r > 0.0))
            r = sample_rwp(mob, rng);
        return a * std::pow(r, -0.5 * mob.a);
    }
}
