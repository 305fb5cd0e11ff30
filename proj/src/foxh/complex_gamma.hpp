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

#include <complex>

namespace riscascade::foxh
{
    using cplx = std::complex<double>;

    // log Gamma(z) on the principal sheet up to multiples of 2*pi*i.
    // Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
    cplx log_gamma(cplx z);

    // log|Gamma(x)| + i*pi*k where (-1)^k is the sign of Gamma(x); +inf at poles
    cplx log_gamma(double x);

    // true if x is within tol of a non-positive integer
    bool at_gamma_pole(double x, double tol = 1e-12);
}
