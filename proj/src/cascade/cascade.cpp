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

#include "cascade/cascade.hpp"

#include "common/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace riscascade::cascade
{
    void check(const HopChainFSO &c)
    {
        require(!c.hops.empty(), "FSO chain needs at least one hop");
        for (const auto &h : c.hops)
        {
            channels::check(h.turbulence);
            channels::check(h.pointing);
        }
    }

    void check(const HopChainRF &c)
    {
        require(!c.hops.empty(), "RF chain needs at least one hop");
        for (const auto &h : c.hops)
        {
            channels::check(h.fading);
            channels::check(h.shadow);
        }
        channels::check(c.mobility);
    }

    void check(const SnrScale &s)
    {
        for (double v : {s.gbar_fso, s.gbar_rf, s.gbar_los})
            require(v > 0.0 && std::isfinite(v), "average SNRs must be positive and finite");
    }

    DensityTemplate product_pdf_spec(std::span<const DensityTemplate> parts)
    {
        return foxh::compose_product(parts);
    }

    CdfSpec product_cdf_spec(std::span<const DensityTemplate> parts)
    {
        const DensityTemplate t = foxh::compose_product(parts);
        return {t.psi, t.zeta, foxh::cdf_block(t.h)};
    }

    double cdf_value(const CdfSpec &spec, double x, const foxh::ContourPolicy &policy)
    {
        if (!(x > 0.0))
            return 0.0;
        const double v = spec.psi * foxh::eval_1d(foxh::univariate(spec.h), policy, spec.zeta * x);
        return std::clamp(v, 0.0, 1.0);
    }

    DensityTemplate fso_cascade_template(const HopChainFSO &chain)
    {
        check(chain);
        std::vector<DensityTemplate> parts;
        for (const auto &h : chain.hops)
        {
            parts.push_back(channels::gg_template(h.turbulence.first));
            parts.push_back(channels::gg_template(h.turbulence.second));
            parts.push_back(channels::pe_template(h.pointing));
        }
        return foxh::compose_product(parts);
    }

    DensityTemplate rf_cascade_template(const HopChainRF &chain)
    {
        check(chain);
        std::vector<DensityTemplate> parts;
        for (const auto &h : chain.hops)
        {
            parts.push_back(channels::gg_template(h.fading.first));
            parts.push_back(channels::gg_template(h.fading.second));
            parts.push_back(channels::shadow_template(h.shadow));
        }
        if (chain.mobility.a != 0.0)
            parts.push_back(channels::mobility_template(chain.mobility));
        return foxh::compose_product(parts);
    }

    DensityTemplate los_template(const LOSLink &los)
    {
        return channels::dgg_shadow_template(los.fading, los.shadow);
    }

    double fso_cascade_pdf(const HopChainFSO &chain, double x)
    {
        return foxh::template_pdf(fso_cascade_template(chain), x);
    }

    double fso_cascade_cdf(const HopChainFSO &chain, double x)
    {
        return foxh::template_cdf(fso_cascade_template(chain), x);
    }

    double rf_cascade_pdf(const HopChainRF &chain, double x)
    {
        return foxh::template_pdf(rf_cascade_template(chain), x);
    }

    double rf_cascade_cdf(const HopChainRF &chain, double x)
    {
        return foxh::template_cdf(rf_cascade_template(chain), x);
    }

    double snr_pdf_from_amplitude(const std::function<double(double)> &amplitude_pdf, double gbar, double gamma)
    {
        require(gbar > 0.0, "average SNR must be positive");
        if (!(gamma > 0.0))
            return 0.0;
        return amplitude_pdf(std::sqrt(gamma / gbar)) / (2.0 * std::sqrt(gamma * gbar));
    }

    DensityTemplate snr_template(const DensityTemplate &amplitude, double gbar)
    {
        return foxh::power_transform(amplitude, 2.0, gbar);
    }

    double fso_snr_pdf(const HopChainFSO &chain, double gbar, double gamma)
    {
        return foxh::template_pdf(snr_template(fso_cascade_template(chain), gbar), gamma);
    }

    double fso_snr_cdf(const HopChainFSO &chain, double gbar, double gamma)
    {
        return foxh::template_cdf(snr_template(fso_cascade_template(chain), gbar), gamma);
    }

    namespace
    {
        foxh::Block with_gamma_minus_s(const foxh::Block &b)
        {
            foxh::Block o = b;
            o.upper.insert(o.upper.begin(), foxh::GammaPair{1.0, 1.0});
            o.n += 1;
            return o;
        }

        SumSpec sum_spec(const DensityTemplate &y1, const DensityTemplate &y2, double joint_offset)
        {
            const DensityTemplate a = foxh::normalized(y1), b = foxh::normalized(y2);
            SumSpec s;
            s.prefactor = a.psi * b.psi;
            s.zeta1 = a.zeta;
            s.zeta2 = b.zeta;
            s.spec.blocks = {with_gamma_minus_s(a.h), with_gamma_minus_s(b.h)};
            s.spec.joint.push_back({joint_offset, {-1.0, -1.0}, false});
            return s;
        }

        DensityTemplate rf_snr(const R2VLink &link, const SnrScale &scale)
        {
            return snr_template(rf_cascade_template(link.rf), scale.gbar_rf);
        }

        DensityTemplate los_snr(const R2VLink &link, const SnrScale &scale)
        {
            return snr_template(los_template(*link.los), scale.gbar_los);
        }

        double bivariate(const SumSpec &s, double gamma, const foxh::ContourPolicy &pol = {})
        {
            return s.prefactor * foxh::eval_2d(s.spec, pol, s.zeta1 * gamma, s.zeta2 * gamma);
        }

        template <class F>
        double integrate_0_to(F f, double upper)
        {
            boost::math::quadrature::tanh_sinh<double> ts(12);
            double err = 0.0, l1 = 0.0;
            const double v = ts.integrate(f, 0.0, upper, 1e-9, &err, &l1);
            if (!std::isfinite(v))
                throw QuadratureError("convolution quadrature failed");
            return v;
        }
    }

    SumSpec r2v_sum_cdf_spec(const DensityTemplate &snr1, const DensityTemplate &snr2)
    {
        return sum_spec(snr1, snr2, 1.0);
    }

    SumSpec r2v_sum_pdf_spec(const DensityTemplate &snr1, const DensityTemplate &snr2)
    {
        return sum_spec(snr1, snr2, 0.0);
    }

    double r2v_snr_cdf(const R2VLink &link, const SnrScale &scale, double gamma)
    {
        check(scale);
        if (!(gamma > 0.0))
            return 0.0;
        const DensityTemplate y1 = rf_snr(link, scale);
        if (!link.los)
            return foxh::template_cdf(y1, gamma);
        try
        {
            return std::clamp(bivariate(r2v_sum_cdf_spec(y1, los_snr(link, scale)), gamma), 0.0, 1.0);
        }
        catch (const NotConverged &)
        {
            return r2v_snr_cdf_convolution(link, scale, gamma);
        }
    }

    double r2v_snr_pdf(const R2VLink &link, const SnrScale &scale, double gamma)
    {
        check(scale);
        if (!(gamma > 0.0))
            return 0.0;
        const DensityTemplate y1 = rf_snr(link, scale);
        if (!link.los)
            return foxh::template_pdf(y1, gamma);
        try
        {
            return std::max(0.0, bivariate(r2v_sum_pdf_spec(y1, los_snr(link, scale)), gamma) / gamma);
        }
        catch (const NotConverged &)
        {
            return r2v_snr_pdf_convolution(link, scale, gamma);
        }
    }

    double r2v_snr_cdf_convolution(const R2VLink &link, const SnrScale &scale, double gamma)
    {
        check(scale);
        if (!(gamma > 0.0))
            return 0.0;
        const DensityTemplate y1 = rf_snr(link, scale);
        if (!link.los)
            return foxh::template_cdf(y1, gamma);
        const DensityTemplate y2 = los_snr(link, scale);
        // P(Y1 + Y2 <= g) = int_0^g F1(g - y) f2(y) dy
        auto f = [&](double y, double yc)
        {
            const double rest = (y > 0.5 * gamma) ? yc : gamma - y;
            return foxh::template_cdf(y1, rest) * foxh::template_pdf(y2, y);
        };
        return std::clamp(integrate_0_to(f, gamma), 0.0, 1.0);
    }

    double r2v_snr_pdf_convolution(const R2VLink &link, const SnrScale &scale, double gamma)
    {
        check(scale);
        if (!(gamma > 0.0))
            return 0.0;
        const DensityTemplate y1 = rf_snr(link, scale);
        if (!link.los)
            return foxh::template_pdf(y1, gamma);
        const DensityTemplate y2 = los_snr(link, scale);
        auto f = [&](double y, double yc)
        {
            const double rest = (y > 0.5 * gamma) ? yc : gamma - y;
            return foxh::template_pdf(y1, rest) * foxh::template_pdf(y2, y);
        };
        return std::max(0.0, integrate_0_to(f, gamma));
    }
}
