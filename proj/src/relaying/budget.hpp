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

#include <cstddef>
#include <vector>

namespace riscascade::relaying
{
    double db_to_linear(double db);
    double dbm_to_watt(double dbm);

    struct FsoLinkBudget
    {
        double wavelength_nm = 1550.0;
        double visibility_km = 3.0;
        double responsivity = 0.41;   // A/W
        double noise_density = 1e-14; // A^2 per GHz
        double bandwidth_ghz = 1.0;
        std::vector<double> hop_distances_m{500.0, 500.0};
    };

    struct RfLinkBudget
    {
        double frequency_mhz = 800.0;
        double gt_dbi = 25.0;
        double gr_dbi = 25.0;
        double noise_dbm = -104.4; // total noise power over the channel bandwidth
        double bandwidth_mhz = 20.0;
        std::vector<double> hop_distances_m{50.0, 50.0};
        std::vector<double> exponents{2.0, 4.0}; // last entry drives the mobility model
        double los_distance_m = 100.0;
        double los_exponent = 4.0;
    };

    void check(const FsoLinkBudget &b);
    void check(const RfLinkBudget &b);

    // Kim visibility model, attenuation coefficient in 1/km
    double kim_attenuation(double visibility_km, double wavelength_nm);

    double fso_path_gain(const FsoLinkBudget &b);
    double fso_mean_snr(const FsoLinkBudget &b, double power_dbm);

    // amplitude gain (c / 4 pi f) d^(-a/2); the last hop keeps only the wavelength factor,
    // its distance enters through the mobility model
    double rf_path_gain(const RfLinkBudget &b, std::size_t hop);
    double rf_mean_snr(const RfLinkBudget &b, double power_dbm);
    double los_mean_snr(const RfLinkBudget &b, double power_dbm);
}
