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

#include "relaying/budget.hpp"

#include "common/error.hpp"

#include <cmath>
#include <numbers>

namespace riscascade::relaying
{
    namespace
    {
        constexpr double light_speed = 3e8;

        double wavelength_factor(const RfLinkBudget &b)
        {
            return light_speed / (4.0 * std::numbers::pi * b.frequency_mhz * 1e6);
        }
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

    void check(const FsoLinkBudget &b)
    {
        require(b.wavelength_nm > 0 && b.visibility_km > 0 && b.responsivity > 0 && b.noise_density > 0 &&
                    b.bandwidth_ghz > 0,
                "FSO budget entries must be positive");
        require(!b.hop_distances_m.empty(), "FSO budget needs hop distances");
        for (double d : b.hop_distances_m)
            require(d > 0, "FSO hop distances must be positive");
    }

    void check(const RfLinkBudget &b)
    {
        require(b.frequency_mhz > 0 && b.bandwidth_mhz > 0 && b.los_distance_m > 0, "RF budget entries must be positive");
        require(!b.hop_distances_m.empty() && b.hop_distances_m.size() == b.exponents.size(),
                "RF budget needs one distance and one exponent per hop");
        for (double d : b.hop_distances_m)
            require(d > 0, "RF hop distances must be positive");
        for (double a : b.exponents)
            require(a >= 2.0 && a <= 5.0, "path loss exponent must lie in [2, 5]");
        require(b.los_exponent >= 2.0 && b.los_exponent <= 5.0, "path loss exponent must lie in [2, 5]");
    }

    double kim_attenuation(double visibility_km, double wavelength_nm)
    {
        require(visibility_km > 0 && wavelength_nm > 0, "visibility and wavelength must be positive");
        const double v = visibility_km;
        double q = 0.0;
        if (v > 50.0)
            q = 1.6;
        else if (v > 6.0)
            q = 1.3;
        else if (v > 1.0)
            q = 0.16 * v + 0.34;
        else if (v > 0.5)
            q = v - 0.5;
        return 3.91 / v * std::pow(wavelength_nm / 550.0, -q);
    }

    double fso_path_gain(const FsoLinkBudget &b)
    {
        check(b);
        const double sigma = kim_attenuation(b.visibility_km, b.wavelength_nm);
        double g = 1.0;
        for (double d : b.hop_distances_m)
            g *= std::exp(-sigma * d * 1e-3);
        return g;
    }

    double fso_mean_snr(const FsoLinkBudget &b, double power_dbm)
    {
        // IM/DD electrical SNR (R P h_l)^2 / sigma^2
        const double i = b.responsivity * dbm_to_watt(power_dbm) * fso_path_gain(b);
        return i * i / (b.noise_density * b.bandwidth_ghz);
    }

    double rf_path_gain(const RfLinkBudget &b, std::size_t hop)
    {
        check(b);
        require(hop < b.hop_distances_m.size(), "hop index out of range");
        const double w = wavelength_factor(b);
        if (hop + 1 == b.hop_distances_m.size())
            return w;
        return w * std::pow(b.hop_distances_m[hop], -0.5 * b.exponents[hop]);
    }

    double rf_mean_snr(const RfLinkBudget &b, double power_dbm)
    {
        double g2 = 1.0;
        for (std::size_t i = 0; i < b.hop_distances_m.size(); ++i)
        {
            const double g = rf_path_gain(b, i);
            g2 *= g * g;
        }
        return dbm_to_watt(power_dbm) * db_to_linear(b.gt_dbi + b.gr_dbi) * g2 / dbm_to_watt(b.noise_dbm);
    }

    double los_mean_snr(const RfLinkBudget &b, double power_dbm)
    {
        check(b);
        const double w = wavelength_factor(b);
        const double g2 = w * w * std::pow(b.los_distance_m, -b.los_exponent);
        return dbm_to_watt(power_dbm) * db_to_linear(b.gt_dbi + b.gr_dbi) * g2 / dbm_to_watt(b.noise_dbm);
    }
}
