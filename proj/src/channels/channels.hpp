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

#include "foxh/foxh.hpp"

#include <random>

namespace riscascade::channels
{
    struct GGParams
    {
        double alpha = 1.0;
        double beta = 1.0;
        double omega = 1.0;
    };

    struct DGGParams
    {
        GGParams first;
        GGParams second;
    };

    struct PointingParams
    {
        double rho2 = 1.0;
        double a0 = 1.0;
    };

    struct ShadowParams
    {
        double m = 2.0;
    };

    // a = 0 switches the random path loss off
    struct MobilityParams
    {
        double d = 100.0;
        double a = 2.0;
    };

    void check(const GGParams &p);
    void check(const DGGParams &p);
    void check(const PointingParams &p);
    void check(const ShadowParams &p);
    void check(const MobilityParams &p);

    // Mellin templates f(x) = psi x^(phi-1) H[zeta x]
    foxh::DensityTemplate gg_template(const GGParams &p);
    foxh::DensityTemplate dgg_template(const DGGParams &p);
    foxh::DensityTemplate pe_template(const PointingParams &p);
    foxh::DensityTemplate shadow_template(const ShadowParams &p);
    foxh::DensityTemplate mobility_template(const MobilityParams &p);
    foxh::DensityTemplate dgg_pe_template(const DGGParams &p, const PointingParams &q);
    foxh::DensityTemplate dgg_shadow_template(const DGGParams &p, const ShadowParams &s);
    foxh::DensityTemplate lasthop_template(const DGGParams &p, const ShadowParams &s, const MobilityParams &mob);

    double gg_pdf(const GGParams &p, double x);
    double gg_cdf(const GGParams &p, double x);
    double dgg_pdf(const DGGParams &p, double x);
    double pe_pdf(const PointingParams &p, double x);
    double dgg_pe_pdf(const DGGParams &p, const PointingParams &q, double x);
    double ig_sqrt_pdf(const ShadowParams &p, double x);
    double dgg_shadow_pdf(const DGGParams &p, const ShadowParams &s, double x);
    double rwp_pdf(const MobilityParams &p, double r);
    double rwp_cdf(const MobilityParams &p, double r);
    double lasthop_pdf(const DGGParams &p, const ShadowParams &s, const MobilityParams &mob, double x);

    // one generator per execution context
    using Rng = std::mt19937_64;

    double sample_gg(const GGParams &p, Rng &rng);
    double sample_dgg(const DGGParams &p, Rng &rng);
    double sample_pe(const PointingParams &p, Rng &rng);
    double sample_shadow(const ShadowParams &p, Rng &rng);
    double sample_rwp(const MobilityParams &p, Rng &rng);
    double sample_dgg_pe(const DGGParams &p, const PointingParams &q, Rng &rng);
    double sample_dgg_shadow(const DGGParams &p, const ShadowParams &s, Rng &rng);
    double sample_lasthop(const DGGParams &p, const ShadowParams &s, const MobilityParams &mob, Rng &rng);
}
