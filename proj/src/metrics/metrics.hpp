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

#include "relaying/relaying.hpp"

#include <functional>

namespace riscascade::metrics
{
    using relaying::MellinForm;
    using relaying::Scenario;

    // conditional error probability Gamma(p, q g) / (2 Gamma(p)); DBPSK is p = q = 1
    struct ModulationParams
    {
        double p = 1.0;
        double q = 1.0;
    };

    void check(const ModulationParams &m);

    double outage(const Scenario &s, double gamma_th);

    struct DominantPoles
    {
        double p1 = 0.0; // FSO hops
        double p2 = 0.0; // RF hops
        double p3 = 0.0; // LOS link, 0 without one
        double g_out() const { return p1 + p2 + p3; }
    };

    DominantPoles diversity_order(const Scenario &s);

    // leading high-SNR terms from the residues at the dominant poles; throws RepeatedPole when the
    // FSO and R2V exponents coincide
    double outage_asymptotic_fso(const Scenario &s, double gamma_th);
    double outage_asymptotic_r2v(const Scenario &s, double gamma_th);
    double outage_asymptotic_df(const Scenario &s, double gamma_th);
    double outage_asymptotic_af(const Scenario &s, double gamma_th);
    double outage_asymptotic(const Scenario &s, double gamma_th);

    // q^p / (2 G(p)) int_0^inf g^(p-1) e^(-q g) F(g) dg, kernel cut where it drops below 1e-14 of its peak
    double ber_quadrature(const std::function<double(double)> &cdf, const ModulationParams &m);

    // the same integral taken inside the Mellin-Barnes form
    MellinForm ber_form(const MellinForm &cdf, const ModulationParams &m);
    double ber_from_form(const MellinForm &cdf, const ModulationParams &m);

    double ber_fso(const Scenario &s, const ModulationParams &m);
    double ber_r2v(const Scenario &s, const ModulationParams &m);
    double ber_df_combine(double ber_fso, double ber_r2v);
    double ber_df(const Scenario &s, const ModulationParams &m);
    double ber_af_closed(const Scenario &s, const ModulationParams &m);
    double ber(const Scenario &s, const ModulationParams &m);
}
