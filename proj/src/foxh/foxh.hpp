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

#include "foxh/complex_gamma.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace riscascade::foxh
{
    struct GammaPair
    {
        double a = 0.0;
        double A = 1.0;
    };

    // Univariate Mellin-Barnes block with orders (m, n, p, q), p = upper.size(), q = lower.size():
    //   Theta(s) = prod_{j<m} G(b_j + B_j s) prod_{j<n} G(1 - a_j - A_j s)
    //            / ( prod_{j>=n} G(a_j + A_j s) prod_{j>=m} G(1 - b_j - B_j s) )
    struct Block
    {
        int m = 0;
        int n = 0;
        std::vector<GammaPair> upper;
        std::vector<GammaPair> lower;
    };

    // Gamma factor G(offset + sum_k coeffs[k] s_k) coupling the contour variables
    struct JointGamma
    {
        double offset = 0.0;
        std::vector<double> coeffs;
        bool numerator = true;
    };

    // H(x_1..x_d) = (2 pi i)^-d  int prod_k Theta_k(s_k) prod_j J_j(s) prod_k x_k^{-s_k} ds
    struct FoxHSpec
    {
        std::vector<Block> blocks;
        std::vector<JointGamma> joint;
        std::size_t variables() const { return blocks.size(); }
    };

    FoxHSpec univariate(Block b);

    struct StripReport
    {
        std::vector<double> anchor;                       // point of maximal pole clearance
        std::vector<std::pair<double, double>> interval; // per variable, others held at the anchor
        double slack = 0.0;                               // clearance of the anchor
    };

    // Throws NoStrip when the left and right pole families cannot be separated.
    StripReport validate(const FoxHSpec &spec);

    enum class AnchorRule
    {
        saddle,  // minimise the integrand modulus on the real section (default)
        midpoint // centre of the admissible strip
    };

    struct ContourPolicy
    {
        std::vector<double> anchor; // explicit anchor, empty for automatic
        AnchorRule rule = AnchorRule::saddle;
        double rel_tol = 0.0; // 0 selects 1e-6 / 1e-4 / 1e-3 for 1 / 2 / 3 variables
        double abs_tol = 0.0;
        double step = 0.0;       // initial node spacing, 0 for automatic
        double truncation = 0.0; // initial half-length, 0 for automatic
        int max_refinements = 7;
        std::size_t max_nodes = 400'000'000;
    };

    struct Evaluation
    {
        double value = 0.0;
        double error = 0.0;
        std::size_t nodes = 0;
        std::vector<double> anchor;
    };

    Evaluation evaluate(const FoxHSpec &spec, std::span<const double> x, const ContourPolicy &policy = {});

    double eval_1d(const FoxHSpec &spec, const ContourPolicy &policy, double x);
    double eval_2d(const FoxHSpec &spec, const ContourPolicy &policy, double x1, double x2);
    double eval_3d(const FoxHSpec &spec, const ContourPolicy &policy, double x1, double x2, double x3);

    // log of the Gamma-ratio part of the integrand (without the x^-s kernel)
    cplx log_kernel(const FoxHSpec &spec, std::span<const cplx> s);

    // ---- residue series

    struct ResidueTerm
    {
        double coefficient = 0.0;
        std::vector<double> exponents; // H(x) ~ sum coefficient * prod x_k^exponents[k]
    };

    struct PoleSelector
    {
        double window = 0.0; // keep poles within this distance of the rightmost left pole
    };

    // Left-pole residues for x -> 0. Throws RepeatedPole on coinciding selected poles.
    std::vector<ResidueTerm> residue_expansion(const FoxHSpec &spec, std::span<const PoleSelector> select);
    double sum_terms(std::span<const ResidueTerm> terms, std::span<const double> x);

    // Group of left poles around the rightmost one, enclosed by a circle that keeps clear of all others.
    struct PoleCluster
    {
        double leading = 0.0; // rightmost left pole
        double center = 0.0;
        double radius = 0.0;
        int size = 0;
    };

    PoleCluster leading_cluster(const FoxHSpec &spec, std::size_t variable, double rel_window = 1e-3);

    using ExtraFactor = std::function<cplx(std::span<const cplx>)>;

    // Total residue inside the given circles (one per variable), computed by contour integration.
    // Stays accurate for repeated and nearly repeated poles.
    double cluster_residue(const FoxHSpec &spec, std::span<const double> x, std::span<const PoleCluster> clusters,
                           const ExtraFactor &extra = {}, int nodes = 64);

    // ---- Mellin templates: f(x) = psi x^(phi-1) H[zeta x]

    struct DensityTemplate
    {
        double psi = 1.0;
        double phi = 0.0;
        double zeta = 1.0;
        Block h;
    };

    DensityTemplate normalized(const DensityTemplate &t);                      // phi -> 0
    DensityTemplate compose_product(std::span<const DensityTemplate> parts); // law of prod X_i
    DensityTemplate power_transform(const DensityTemplate &t, double k, double gain); // law of gain * X^k
    Block cdf_block(const Block &b);                                          // kernel of int_0^x f

    double mellin_moment(const DensityTemplate &t, double r); // throws OutOfStrip
    cplx log_mellin_moment(const DensityTemplate &t, cplx r); // no strip check
    std::pair<double, double> moment_strip(const DensityTemplate &t);

    double template_pdf(const DensityTemplate &t, double x, const ContourPolicy &policy = {});
    double template_cdf(const DensityTemplate &t, double x, const ContourPolicy &policy = {});
}
