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

#include "cascade/cascade.hpp"
#include "foxh/foxh.hpp"

#include <optional>
#include <vector>

namespace riscascade::relaying
{
    enum class RelayKind
    {
        fixed_gain_af,
        df
    };

    struct RelayMode
    {
        RelayKind kind = RelayKind::df;
        std::optional<double> c; // empty: C = 1 + mean FSO SNR
    };

    struct Scenario
    {
        cascade::HopChainFSO fso;
        cascade::R2VLink r2v;
        cascade::SnrScale scale;
        RelayMode relay;
    };

    void check(const Scenario &s);
    double resolve_c(const RelayMode &mode, const cascade::SnrScale &scale);

    // F(gamma) = prefactor * H(base_k * gamma^power_k)
    struct MellinForm
    {
        double prefactor = 1.0;
        std::vector<double> base;
        std::vector<double> power;
        foxh::FoxHSpec spec;
    };

    double evaluate(const MellinForm &form, double gamma, const foxh::ContourPolicy &policy = {});

    MellinForm fso_cdf_form(const cascade::HopChainFSO &chain, double gbar);
    MellinForm r2v_cdf_form(const cascade::R2VLink &link, const cascade::SnrScale &scale);
    // E_Z[F_FSO(gamma (1 + C/Z))] - F_FSO(gamma) for Z the R2V SNR
    MellinForm af_delta_form(const Scenario &s, double c);

    double fso_cdf(const Scenario &s, double gamma);
    double r2v_cdf(const Scenario &s, double gamma);

    // min of two independent SNRs
    double df_combine(double f_fso, double f_r2v);
    double df_cdf(const Scenario &s, double gamma);

    // Mellin-Barnes form; throws NotConverged
    double af_cdf_exact(const Scenario &s, double gamma, const foxh::ContourPolicy &policy = {});
    // exact form with the semi-numeric integral as fallback
    double af_cdf(const Scenario &s, double gamma);

    // quadrature nodes z_j with weights f_Z(z_j) dz for the R2V SNR, 10-point Gauss-Legendre panels in log z
    struct LogGridDensity
    {
        std::vector<double> z, w;
    };
    LogGridDensity tabulate_r2v_density(const Scenario &s, bool convolution_density = false);

    // F_FSO(g) + int [F_FSO(g (1 + C/z)) - F_FSO(g)] f_Z(z) dz on a log grid; the R2V density is tabulated once
    class AfSeminumeric
    {
    public:
        explicit AfSeminumeric(const Scenario &s, bool convolution_density = false);
        double cdf(double gamma) const;
        double c() const { return c_; }

    private:
        foxh::DensityTemplate fso_;
        double c_ = 1.0;
        LogGridDensity z_;
    };

    double af_cdf_seminumeric(const Scenario &s, double gamma);

    // end-to-end CDF per relay mode
    double cdf(const Scenario &s, double gamma);
}
