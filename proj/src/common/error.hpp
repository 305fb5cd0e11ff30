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

#include <stdexcept>
#include <string>

namespace riscascade
{
    // Numeric failure classes. The C API maps each onto a status code.
    enum class ErrorKind
    {
        invalid_argument,
        config,
        no_strip,
        not_converged,
        repeated_pole,
        out_of_strip,
        quadrature
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &msg) : std::runtime_error(msg), kind_(kind) {}
        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };

    struct InvalidArgument : Error
    {
        explicit InvalidArgument(const std::string &m) : Error(ErrorKind::invalid_argument, m) {}
    };
    struct ConfigError : Error
    {
        explicit ConfigError(const std::string &m) : Error(ErrorKind::config, m) {}
    };
    struct NoStrip : Error
    {
        explicit NoStrip(const std::string &m) : Error(ErrorKind::no_strip, m) {}
    };
    struct NotConverged : Error
    {
        explicit NotConverged(const std::string &m) : Error(ErrorKind::not_converged, m) {}
    };
    struct RepeatedPole : Error
    {
        explicit RepeatedPole(const std::string &m) : Error(ErrorKind::repeated_pole, m) {}
    };
    struct OutOfStrip : Error
    {
        explicit OutOfStrip(const std::string &m) : Error(ErrorKind::out_of_strip, m) {}
    };
    struct QuadratureError : Error
    {
        explicit QuadratureError(const std::string &m) : Error(ErrorKind::quadrature, m) {}
    };

    inline void require(bool cond, const std::string &msg)
    {
        if (!cond)
            throw InvalidArgument(msg);
    }
}
