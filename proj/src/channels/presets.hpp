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

namespace riscascade::channels::presets
{
    // strong turbulence
    inline DGGParams strong_turbulence() { return {{1.8621, 0.5, 1.5074}, {1.0, 1.8, 0.928}}; }
    // moderate turbulence
    inline DGGParams moderate_turbulence() { return {{2.169, 0.55, 1.5793}, {1.0, 2.35, 0.9671}}; }
    // RF small-scale fading, also used for the LOS link
    inline DGGParams rf_fading() { return {{1.5, 1.5, 1.5793}, {1.0, 1.5, 0.9671}}; }
}
