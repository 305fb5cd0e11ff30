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
#include <functional>
#include <span>

namespace riscascade::montecarlo
{
    // Kolmogorov-Smirnov distance between sorted samples and a continuous CDF.
    // The CDF is evaluated at `nodes` sample quantiles and interpolated linearly in between.
    double ks_distance(std::span<const double> sorted, const std::function<double(double)> &cdf, std::size_t nodes = 4000);
}
