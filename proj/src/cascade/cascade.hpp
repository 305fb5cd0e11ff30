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

#pragma once

#include "channels/channels.hpp"
#include "foxh/foxh.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace riscascade::cascade
{
    using channels::DGGParams;
    using channels::MobilityParams;
    using channels::PointingParams;
    using channels::ShadowParams;
    using foxh::DensityTemplate;

    struct FsoHop
    {
        DGGParams turbulence;
        PointingParams pointing;
    };

    struct HopChainFSO
    {
        std::vector<FsoHop> hops;
    };

    struct RfHop
    {
        DGGParams fading;
        ShadowParams shadow;
    };

    // mobility applies to the last hop only
    struct HopChainRF
    {
        std::vector<RfHop> hops;
        MobilityParams mobility;
    };

    struct LOSLink
    {
        DGGParams fading;
        ShadowParams shadow;
    };

    // average SNRs without fading (linear)
    struct SnrScale
    {
        double gbar_fso = 1.0;
        double gbar_rf = 1.0;
        double gbar_los = 1.0;
    };

    void check(const HopChainFSO &c);
    void check(const HopChainRF &c);
    void check(const SnrScale &s);

    // F(x) = psi H[zeta x]
    struct CdfSpec
    {
        double psi = 1.0;
        double zeta = 1.0;
        foxh::Block h;
    };

    DensityTemplate product_pdf_spec(std::span<const DensityTemplate> parts);
    CdfSpec product_cdf_spec(std::span<const DensityTemplate> parts);
    double cdf_value(const CdfSpec &spec, double x, const foxh::ContourPolicy &policy = {});

    // amplitude laws of the cascades
    DensityTemplate fso_cascade_template(const HopChainFSO &chain);
    DensityTemplate rf_cascade_template(const HopChainRF &chain);
    DensityTemplate los_template(const LOSLink &los);

    double fso_cascade_pdf(const HopChainFSO &chain, double x);
    double fso_cascade_cdf(const HopChainFSO &chain, double x);
    double rf_cascade_pdf(const HopChainRF &chain, double x);
    double rf_cascade_cdf(const HopChainRF &chain, double x);

    // gamma = gbar |h|^2
    double snr_pdf_from_amplitude(const std::function<double(double)> &amplitude_pdf, double gbar, double gamma);
    DensityTemplate snr_template(const DensityTemplate &amplitude, double gbar);

    double fso_snr_pdf(const HopChainFSO &chain, double gbar, double gamma);
    double fso_snr_cdf(const HopChainFSO &chain, double gbar, double gamma);

    // gamma_R2V = gamma_RF + gamma_LOS; without a LOS link it is gamma_RF alone
    struct R2VLink
    {
        HopChainRF rf;
        std::optional<LOSLink> los;
    };

    // Bivariate Mellin-Barnes form of the sum law; arguments are (zeta_1 gamma, zeta_2 gamma).
    struct SumSpec
    {
        double prefactor = 1.0;
        double zeta1 = 1.0;
        double zeta2 = 1.0;
        foxh::FoxHSpec spec;
    };
    SumSpec r2v_sum_cdf_spec(const DensityTemplate &snr1, const DensityTemplate &snr2);
    SumSpec r2v_sum_pdf_spec(const DensityTemplate &snr1, const DensityTemplate &snr2);

    double r2v_snr_cdf(const R2VLink &link, const SnrScale &scale, double gamma);
    double r2v_snr_pdf(const R2VLink &link, const SnrScale &scale, double gamma);

    // quadrature convolution of the two SNR laws; fallback and oracle for the bivariate forms
    double r2v_snr_cdf_convolution(const R2VLink &link, const SnrScale &scale, double gamma);
    double r2v_snr_pdf_convolution(const R2VLink &link, const SnrScale &scale, double gamma);
}
