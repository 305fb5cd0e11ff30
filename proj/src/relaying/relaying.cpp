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

#include "relaying/relaying.hpp"

#include "common/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>

namespace riscascade::relaying
{
    using cascade::DensityTemplate;

    namespace
    {
        foxh::Block with_gamma_minus_s(foxh::Block b)
        {
            b.upper.insert(b.upper.begin(), foxh::GammaPair{1.0, 1.0});
            b.n += 1;
            return b;
        }

        DensityTemplate fso_snr(const Scenario &s)
        {
            return foxh::normalized(cascade::snr_template(cascade::fso_cascade_template(s.fso), s.scale.gbar_fso));
        }

        DensityTemplate rf_snr(const Scenario &s)
        {
            return foxh::normalized(cascade::snr_template(cascade::rf_cascade_template(s.r2v.rf), s.scale.gbar_rf));
        }

        DensityTemplate los_snr(const Scenario &s)
        {
            return foxh::normalized(cascade::snr_template(cascade::los_template(*s.r2v.los), s.scale.gbar_los));
        }

        MellinForm cdf_form(const DensityTemplate &t)
        {
            const DensityTemplate n = foxh::normalized(t);
            return {n.psi, {n.zeta}, {1.0}, foxh::univariate(foxh::cdf_block(n.h))};
        }
    }

    void check(const Scenario &s)
    {
        cascade::check(s.fso);
        cascade::check(s.r2v.rf);
        cascade::check(s.scale);
        if (s.relay.c)
            require(*s.relay.c > 0.0, "relay constant C must be positive");
    }

    double resolve_c(const RelayMode &mode, const cascade::SnrScale &scale)
    {
        const double c = mode.c ? *mode.c : 1.0 + scale.gbar_fso;
        require(c > 0.0 && std::isfinite(c), "relay constant C must be positive");
        return c;
    }

    double evaluate(const MellinForm &form, double gamma, const foxh::ContourPolicy &policy)
    {
        std::vector<double> x(form.base.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            x[k] = form.base[k] * std::pow(gamma, form.power[k]);
        return form.prefactor * foxh::evaluate(form.spec, x, policy).value;
    }

    MellinForm fso_cdf_form(const cascade::HopChainFSO &chain, double gbar)
    {
        return cdf_form(cascade::snr_template(cascade::fso_cascade_template(chain), gbar));
    }

    MellinForm r2v_cdf_form(const cascade::R2VLink &link, const cascade::SnrScale &scale)
    {
        const DensityTemplate y1 = cascade::snr_template(cascade::rf_cascade_template(link.rf), scale.gbar_rf);
        if (!link.los)
            return cdf_form(y1);
        const DensityTemplate y2 = cascade::snr_template(cascade::los_template(*link.los), scale.gbar_los);
        const cascade::SumSpec sum = cascade::r2v_sum_cdf_spec(y1, y2);
        return {sum.prefactor, {sum.zeta1, sum.zeta2}, {1.0, 1.0}, sum.spec};
    }

    MellinForm af_delta_form(const Scenario &s, double c)
    {
        const DensityTemplate f = fso_snr(s), y1 = rf_snr(s);
        foxh::Block fb = f.h;
        fb.upper.push_back({1.0, 1.0}); // 1 / G(1 + s)

        MellinForm form;
        form.spec.blocks = {fb, with_gamma_minus_s(y1.h)};
        form.prefactor = f.psi * y1.psi;
        form.base = {f.zeta, y1.zeta * c};
        form.power = {1.0, 0.0};
        if (!s.r2v.los)
        {
            form.spec.joint = {{1.0, {0.0, 1.0}, true}, {0.0, {1.0, -1.0}, true}, {1.0, {0.0, -1.0}, false}};
            return form;
        }
        const DensityTemplate y2 = los_snr(s);
        form.spec.blocks.push_back(with_gamma_minus_s(y2.h));
        form.prefactor *= y2.psi;
        form.base.push_back(y2.zeta * c);
        form.power.push_back(0.0);
        form.spec.joint = {{1.0, {0.0, 1.0, 1.0}, true}, {0.0, {1.0, -1.0, -1.0}, true}, {1.0, {0.0, -1.0, -1.0}, false}};
        return form;
    }

    double fso_cdf(const Scenario &s, double gamma)
    {
        return cascade::fso_snr_cdf(s.fso, s.scale.gbar_fso, gamma);
    }

    double r2v_cdf(const Scenario &s, double gamma)
    {
        return cascade::r2v_snr_cdf(s.r2v, s.scale, gamma);
    }

    double df_combine(double f_fso, double f_r2v)
    {
        // larger term first: exact at 1, no cancellation when both are small
        const double hi = std::max(f_fso, f_r2v), lo = std::min(f_fso, f_r2v);
        return hi + lo * (1.0 - hi);
    }

    double df_cdf(const Scenario &s, double gamma)
    {
        return std::clamp(df_combine(fso_cdf(s, gamma), r2v_cdf(s, gamma)), 0.0, 1.0);
    }

    double af_cdf_exact(const Scenario &s, double gamma, const foxh::ContourPolicy &policy)
    {
        check(s);
        if (!(gamma > 0.0))
            return 0.0;
        const double base = fso_cdf(s, gamma);
        const double delta = evaluate(af_delta_form(s, resolve_c(s.relay, s.scale)), gamma, policy);
        return std::clamp(base + std::max(delta, 0.0), 0.0, 1.0);
    }

    double af_cdf(const Scenario &s, double gamma)
    {
        try
        {
            return af_cdf_exact(s, gamma);
        }
        catch (const NotConverged &)
        {
            return af_cdf_seminumeric(s, gamma);
        }
    }

    LogGridDensity tabulate_r2v_density(const Scenario &s, bool convolution_density)
    {
        check(s);
        using GL = boost::math::quadrature::gauss<double, 10>;
        const double centre = std::log(s.scale.gbar_rf + (s.r2v.los ? s.scale.gbar_los : 0.0));
        const double lo = centre - 30.0, hi = centre + 30.0;
        const int panels = 90;
        const double width = (hi - lo) / panels;
        const auto &abscissa = GL::abscissa();
        const auto &weights = GL::weights();
        LogGridDensity g;
        for (int p = 0; p < panels; ++p)
        {
            const double mid = lo + (p + 0.5) * width;
            for (std::size_t i = 0; i < abscissa.size(); ++i)
                for (int sign : {-1, 1})
                {
                    if (abscissa[i] == 0.0 && sign < 0)
                        continue;
                    const double z = std::exp(mid + sign * abscissa[i] * 0.5 * width);
                    const double f = convolution_density ? cascade::r2v_snr_pdf_convolution(s.r2v, s.scale, z)
                                                         : cascade::r2v_snr_pdf(s.r2v, s.scale, z);
                    if (f == 0.0)
                        continue;
                    g.z.push_back(z);
                    g.w.push_back(weights[i] * 0.5 * width * z * f);
                }
        }
        return g;
    }

    AfSeminumeric::AfSeminumeric(const Scenario &s, bool convolution_density)
        : fso_(cascade::snr_template(cascade::fso_cascade_template(s.fso), s.scale.gbar_fso)),
          c_(resolve_c(s.relay, s.scale)), z_(tabulate_r2v_density(s, convolution_density))
    {
    }

    double AfSeminumeric::cdf(double gamma) const
    {
        if (!(gamma > 0.0))
            return 0.0;
        const double base = foxh::template_cdf(fso_, gamma);
        double delta = 0.0;
        for (std::size_t j = 0; j < z_.z.size(); ++j)
            delta += z_.w[j] * (foxh::template_cdf(fso_, gamma * (1.0 + c_ / z_.z[j])) - base);
        return std::clamp(base + std::max(delta, 0.0), 0.0, 1.0);
    }

    double af_cdf_seminumeric(const Scenario &s, double gamma)
    {
        return AfSeminumeric(s).cdf(gamma);
    }

    double cdf(const Scenario &s, double gamma)
    {
        return s.relay.kind == RelayKind::df ? df_cdf(s, gamma) : af_cdf(s, gamma);
    }
}
