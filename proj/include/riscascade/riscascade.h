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

#ifndef RISCASCADE_RISCASCADE_H
#define RISCASCADE_RISCASCADE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RIS_API __declspec(dllexport)
#else
#define RIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ris_status
{
    RIS_OK = 0,
    RIS_ERR_INVALID_ARGUMENT = 1,
    RIS_ERR_CONFIG = 2,
    RIS_ERR_NO_STRIP = 3,
    RIS_ERR_NOT_CONVERGED = 4,
    RIS_ERR_REPEATED_POLE = 5,
    RIS_ERR_OUT_OF_STRIP = 6,
    RIS_ERR_QUADRATURE = 7,
    RIS_ERR_INTERNAL = 8
} ris_status;

typedef enum ris_command
{
    RIS_COMMAND_OUTAGE = 0,
    RIS_COMMAND_BER = 1,
    RIS_COMMAND_VALIDATE = 2
} ris_command;

enum
{
    RIS_METHOD_EXACT = 1,
    RIS_METHOD_ASYMPTOTIC = 2,
    RIS_METHOD_MC = 4,
    RIS_METHOD_ALL = 7
};

/* Opaque parsed scenario configuration (one or more curves over a sweep grid). */
typedef struct ris_scenario ris_scenario;

typedef struct ris_run_options
{
    ris_command command;
    unsigned methods; /* RIS_METHOD_* bits; validate always runs all three */
    uint64_t seed;    /* used when has_seed is non-zero, else the configuration value */
    int has_seed;
    uint64_t samples; /* used when non-zero, else the configuration value */
    unsigned workers; /* used when non-zero, else the configuration value */
} ris_run_options;

RIS_API const char *ris_version(void);

/* Message of the last failed call on this thread; empty when none. */
RIS_API const char *ris_last_error(void);

RIS_API ris_status ris_scenario_load_file(const char *path, ris_scenario **out);
RIS_API ris_status ris_scenario_load_string(const char *yaml, ris_scenario **out);
RIS_API ris_status ris_scenario_load_preset(const char *name, ris_scenario **out);
RIS_API void ris_scenario_free(ris_scenario *scenario);

/* Comma-separated preset names; free with ris_string_free. */
RIS_API ris_status ris_preset_names(char **out);

RIS_API ris_status ris_scenario_curve_count(const ris_scenario *scenario, size_t *out);
RIS_API ris_status ris_scenario_grid(const ris_scenario *scenario, const double **values, size_t *count);

RIS_API void ris_run_options_init(ris_run_options *options);

/* Runs the sweep and returns CSV (header sweep,metric,method,value,stderr). Numeric failures give
   NaN rows and are counted in *failures. Diagnostics go to *messages when it is not NULL, one per
   line, prefixed "error: " (counted failures) or "warning: " (non-monotone exact curves). Free both strings with ris_string_free. */
RIS_API ris_status ris_run_sweep(const ris_scenario *scenario, const ris_run_options *options, char **csv,
                                 size_t *failures, char **messages);

RIS_API void ris_string_free(char *s);

/* Point evaluators for curve `curve` at sweep value `x` (dBm or dB per the configured axis). */
RIS_API ris_status ris_outage(const ris_scenario *scenario, size_t curve, double x, double *out);
RIS_API ris_status ris_outage_asymptotic(const ris_scenario *scenario, size_t curve, double x, double *out);
RIS_API ris_status ris_ber(const ris_scenario *scenario, size_t curve, double x, double *out);
RIS_API ris_status ris_mean_snr(const ris_scenario *scenario, size_t curve, double x, double *fso, double *rf,
                                double *los);

#ifdef __cplusplus
}
#endif

#endif
