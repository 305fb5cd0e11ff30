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

#include "montecarlo/stats.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace riscascade::montecarlo
{
    double ks_distance(std::span<const double> sorted, const std::function<double(double)> &cdf, std::size_t nodes)
    {
        const std::size_t n = sorted.size();
        require(n > 0, "ks_distance: no samples");
        nodes = std::clamp<std::size_t>(nodes, 2, n);
        std::vector<std::size_t> at(nodes);
        std::vector<double> f(nodes);
        for (std::size_t j = 0; j < nodes; ++j)
        {
            at[j] = (j * (n - 1)) / (nodes - 1);
            f[j] = cdf(sorted[at[j]]);
        }
        double d = 0.0;
        std::size_t seg = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            while (seg + 1 < nodes - 1 && at[seg + 1] < i)
                ++seg;
            const double x0 = sorted[at[seg]], x1 = sorted[at[seg + 1]];
            double F;
            if (i == at[seg])
                F = f[seg];
            else if (i == at[seg + 1])
                F = f[seg + 1];
            else
                F = (x1 > x0) ? f[seg] + (f[seg + 1] - f[seg]) * (sorted[i] - x0) / (x1 - x0) : f[seg];
            const double lo = double(i) / double(n), hi = double(i + 1) / double(n);
            d = std::max({d, std::abs(F - lo), std::abs(hi - F)});
        }
        return d;
    }
}
