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

#include "foxh/complex_gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace riscascade::foxh
{
    namespace
    {
        constexpr double lanczos_g = 7.0;
        constexpr std::array<double, 9> lanczos_p = {
            0.99999999999980993, 676.5203681218851, -1259.1392167224028,
            771.32342877765313, -176.61502916214059, 12.507343278686905,
            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

        const double log_sqrt_2pi = 0.5 * std::log(2.0 * std::numbers::pi);

        cplx clog_fast(double re, double im)
        {
            return {0.5 * std::log(re * re + im * im), std::atan2(im, re)};
        }

        cplx lanczos_log(cplx z) // requires Re z >= 1/2
        {
            const double zr = z.real() - 1.0, zi = z.imag();
            double ar = lanczos_p[0], ai = 0.0;
            for (int k = 1; k < 9; ++k)
            {
                const double dr = zr + double(k);
                const double w = lanczos_p[k] / (dr * dr + zi * zi);
                ar += w * dr;
                ai -= w * zi;
            }
            const double tr = zr + lanczos_g + 0.5;
            const cplx lt = clog_fast(tr, zi);
            const cplx la = clog_fast(ar, ai);
            // (z - 1 + 1/2) log t - t + log a
            const double hr = zr + 0.5;
            return {log_sqrt_2pi + hr * lt.real() - zi * lt.imag() - tr + la.real(),
                    hr * lt.imag() + zi * lt.real() - zi + la.imag()};
        }

        // log sin(w), stable for large |Im w|
        cplx log_sin(cplx w)
        {
            if (std::abs(w.imag()) < 15.0)
                return std::log(std::sin(w));
            if (w.imag() < 0.0)
                return std::conj(log_sin(std::conj(w)));
            // sin w = (i/2) e^{-iw} (1 - e^{2iw})
            const cplx I(0.0, 1.0);
            return std::log(0.5 * I) - I * w + std::log(1.0 - std::exp(2.0 * I * w));
        }
    }

    cplx log_gamma(cplx z)
    {
        if (z.real() >= 0.5)
            return lanczos_log(z);
        if (z.imag() == 0.0 && at_gamma_pole(z.real(), 0.0))
            return {std::numeric_limits<double>::infinity(), 0.0};
        const double pi = std::numbers::pi;
        return std::log(pi) - log_sin(pi * z) - lanczos_log(1.0 - z);
    }

    cplx log_gamma(double x)
    {
        if (at_gamma_pole(x, 0.0))
            return {std::numeric_limits<double>::infinity(), 0.0};
        if (x >= 0.5)
            return {lanczos_log(cplx(x, 0.0)).real(), 0.0};
        const double pi = std::numbers::pi;
        const double s = std::sin(pi * x);
        const double lr = std::log(pi) - std::log(std::abs(s)) - lanczos_log(cplx(1.0 - x, 0.0)).real();
        return {lr, s < 0.0 ? pi : 0.0};
    }

    bool at_gamma_pole(double x, double tol)
    {
        if (x > tol)
            return false;
        return std::abs(x - std::round(x)) <= tol;
    }
}
