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

#include "foxh/foxh.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace riscascade::foxh
{
    namespace
    {
        constexpr double inf = std::numeric_limits<double>::infinity();
        constexpr double pi = std::numbers::pi;
        constexpr std::size_t max_vars = 3;
        constexpr double clearance_cap = 1.0; // unbounded strips: anchor one unit off the boundary
        constexpr double box = 60.0;

        // G(offset + coef . s)^(+1 or -1)
        struct LinGamma
        {
            double offset = 0.0;
            std::array<double, max_vars> coef{};
            bool num = true;
            std::string label;

            double norm() const { return std::sqrt(coef[0] * coef[0] + coef[1] * coef[1] + coef[2] * coef[2]); }
            int single_var() const // index of the only nonzero coefficient, -1 otherwise
            {
                int k = -1;
                for (int i = 0; i < int(max_vars); ++i)
                    if (coef[i] != 0.0)
                    {
                        if (k >= 0)
                            return -1;
                        k = i;
                    }
                return k;
            }
            bool constant() const { return coef[0] == 0.0 && coef[1] == 0.0 && coef[2] == 0.0; }
            double real_arg(std::span<const double> c) const
            {
                double v = offset;
                for (std::size_t k = 0; k < c.size(); ++k)
                    v += coef[k] * c[k];
                return v;
            }
            cplx arg(std::span<const cplx> s) const
            {
                cplx v = offset;
                for (std::size_t k = 0; k < s.size(); ++k)
                    v += coef[k] * s[k];
                return v;
            }
        };

        std::string fmt(double v)
        {
            std::ostringstream o;
            o.precision(6);
            o << v;
            return o.str();
        }

        std::vector<LinGamma> compile(const FoxHSpec &spec)
        {
            const std::size_t d = spec.variables();
            if (d < 1 || d > max_vars)
                throw InvalidArgument("Fox H spec must have 1 to 3 variables");
            std::vector<LinGamma> out;
            for (std::size_t k = 0; k < d; ++k)
            {
                const Block &b = spec.blocks[k];
                const int p = int(b.upper.size()), q = int(b.lower.size());
                if (b.m < 0 || b.n < 0 || b.m > q || b.n > p)
                    throw InvalidArgument("Fox H block " + std::to_string(k) + ": orders must satisfy 0<=m<=q, 0<=n<=p");
                auto add = [&](double off, double c, bool num, std::string lab)
                {
                    if (!std::isfinite(off) || !std::isfinite(c))
                        throw InvalidArgument("Fox H block " + std::to_string(k) + ": non-finite pair");
                    LinGamma g;
                    g.offset = off;
                    g.coef[k] = c;
                    g.num = num;
                    g.label = std::move(lab);
                    out.push_back(std::move(g));
                };
                const std::string tag = "var " + std::to_string(k + 1) + " ";
                for (int j = 0; j < q; ++j)
                {
                    const auto &pr = b.lower[j];
                    const std::string lab = tag + "lower pair (" + fmt(pr.a) + "," + fmt(pr.A) + ")";
                    if (j < b.m)
                        add(pr.a, pr.A, true, lab);
                    else
                        add(1.0 - pr.a, -pr.A, false, lab);
                }
                for (int j = 0; j < p; ++j)
                {
                    const auto &pr = b.upper[j];
                    const std::string lab = tag + "upper pair (" + fmt(pr.a) + "," + fmt(pr.A) + ")";
                    if (j < b.n)
                        add(1.0 - pr.a, -pr.A, true, lab);
                    else
                        add(pr.a, pr.A, false, lab);
                }
            }
            for (std::size_t j = 0; j < spec.joint.size(); ++j)
            {
                const auto &jg = spec.joint[j];
                if (jg.coeffs.size() != d)
                    throw InvalidArgument("joint Gamma factor " + std::to_string(j) + " needs one coefficient per variable");
                LinGamma g;
                g.offset = jg.offset;
                for (std::size_t k = 0; k < d; ++k)
                    g.coef[k] = jg.coeffs[k];
                g.num = jg.numerator;
                g.label = "joint factor " + std::to_string(j);
                out.push_back(std::move(g));
            }
            return out;
        }

        struct Strip
        {
            std::size_t d = 0;
            std::vector<const LinGamma *> cons; // numerator, non-constant, deduplicated
            std::vector<const LinGamma *> all;  // numerator, non-constant, with multiplicity
            std::vector<double> center;
            double clearance = 0.0;

            double min_clearance(std::span<const double> c) const
            {
                double m = inf;
                for (auto *g : cons)
                    m = std::min(m, g->real_arg(c) / g->norm());
                return m;
            }
            // feasible interval of variable k with others fixed, keeping normalised clearance >= mu
            std::pair<double, double> interval(std::span<const double> c, std::size_t k, double mu) const
            {
                double lo = -inf, hi = inf;
                for (auto *g : cons)
                {
                    const double e = g->coef[k];
                    if (e == 0.0)
                        continue;
                    double rest = g->offset - mu * g->norm();
                    for (std::size_t l = 0; l < d; ++l)
                        if (l != k)
                            rest += g->coef[l] * c[l];
                    const double bound = -rest / e;
                    if (e > 0)
                        lo = std::max(lo, bound);
                    else
                        hi = std::min(hi, bound);
                }
                return {lo, hi};
            }
        };

        bool solve_small(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double> &x)
        {
            const std::size_t n = b.size();
            for (std::size_t c = 0; c < n; ++c)
            {
                std::size_t piv = c;
                for (std::size_t r = c + 1; r < n; ++r)
                    if (std::abs(a[r][c]) > std::abs(a[piv][c]))
                        piv = r;
                if (std::abs(a[piv][c]) < 1e-13)
                    return false;
                std::swap(a[piv], a[c]);
                std::swap(b[piv], b[c]);
                for (std::size_t r = 0; r < n; ++r)
                {
                    if (r == c)
                        continue;
                    const double f = a[r][c] / a[c][c];
                    for (std::size_t k = c; k < n; ++k)
                        a[r][k] -= f * a[c][k];
                    b[r] -= f * b[c];
                }
            }
            x.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = b[i] / a[i][i];
            return true;
        }

        [[noreturn]] void report_no_strip(const Strip &st)
        {
            // look for a directly opposing pair
            for (std::size_t i = 0; i < st.cons.size(); ++i)
                for (std::size_t j = i + 1; j < st.cons.size(); ++j)
                {
                    auto *a = st.cons[i];
                    auto *b = st.cons[j];
                    const double na = a->norm(), nb = b->norm();
                    double dot = 0.0;
                    for (std::size_t k = 0; k < st.d; ++k)
                        dot += a->coef[k] * b->coef[k];
                    if (dot < -(1.0 - 1e-12) * na * nb && a->offset / na + b->offset / nb <= 1e-12)
                        throw NoStrip("no admissible contour: poles of " + a->label + " and " + b->label + " overlap");
                }
            throw NoStrip("no admissible contour: left and right pole families overlap");
        }

        Strip build_strip(const std::vector<LinGamma> &lg, std::size_t d)
        {
            Strip st;
            st.d = d;
            for (const auto &g : lg)
            {
                if (!g.num)
                    continue;
                if (g.constant())
                {
                    if (at_gamma_pole(g.offset, 1e-12))
                        throw NoStrip("constant Gamma factor (" + g.label + ") sits on a pole");
                    continue;
                }
                st.all.push_back(&g);
                bool dup = false;
                for (auto *h : st.cons)
                    if (h->offset == g.offset && h->coef == g.coef)
                    {
                        dup = true;
                        break;
                    }
                if (!dup)
                    st.cons.push_back(&g);
            }

            if (d == 1)
            {
                double lo = -inf, hi = inf;
                for (auto *g : st.cons)
                {
                    const double b = -g->offset / g->coef[0];
                    if (g->coef[0] > 0)
                        lo = std::max(lo, b);
                    else
                        hi = std::min(hi, b);
                }
                if (!(lo < hi))
                    report_no_strip(st);
                double c;
                if (std::isfinite(lo) && std::isfinite(hi))
                    c = 0.5 * (lo + hi);
                else if (std::isfinite(lo))
                    c = lo + clearance_cap;
                else if (std::isfinite(hi))
                    c = hi - clearance_cap;
                else
                    c = 0.0;
                st.center = {c};
                st.clearance = st.cons.empty() ? clearance_cap : st.min_clearance(st.center);
                return st;
            }

            // maximise t subject to clearance >= t, t <= cap, |c_k| <= box; vertex enumeration
            struct Row
            {
                std::vector<double> a; // over (c_1..c_d, t)
                double b;
            };
            std::vector<Row> rows;
            for (auto *g : st.cons)
            {
                Row r;
                r.a.assign(d + 1, 0.0);
                const double nrm = g->norm();
                for (std::size_t k = 0; k < d; ++k)
                    r.a[k] = -g->coef[k] / nrm;
                r.a[d] = 1.0;
                r.b = g->offset / nrm;
                rows.push_back(std::move(r));
            }
            {
                Row r;
                r.a.assign(d + 1, 0.0);
                r.a[d] = 1.0;
                r.b = clearance_cap;
                rows.push_back(std::move(r));
            }
            for (std::size_t k = 0; k < d; ++k)
                for (double sgn : {1.0, -1.0})
                {
                    Row r;
                    r.a.assign(d + 1, 0.0);
                    r.a[k] = sgn;
                    r.b = box;
                    rows.push_back(std::move(r));
                }

            const std::size_t nr = rows.size(), nv = d + 1;
            std::vector<std::size_t> idx(nv);
            for (std::size_t i = 0; i < nv; ++i)
                idx[i] = i;
            double best_t = -inf, best_norm = inf;
            std::vector<double> best;
            std::vector<double> x;
            while (true)
            {
                std::vector<std::vector<double>> a(nv);
                std::vector<double> b(nv);
                for (std::size_t i = 0; i < nv; ++i)
                {
                    a[i] = rows[idx[i]].a;
                    b[i] = rows[idx[i]].b;
                }
                if (solve_small(a, b, x))
                {
                    bool ok = true;
                    for (const auto &r : rows)
                    {
                        double v = 0.0;
                        for (std::size_t k = 0; k < nv; ++k)
                            v += r.a[k] * x[k];
                        if (v > r.b + 1e-10)
                        {
                            ok = false;
                            break;
                        }
                    }
                    if (ok)
                    {
                        double nrm = 0.0;
                        for (std::size_t k = 0; k < d; ++k)
                            nrm += x[k] * x[k];
                        if (x[d] > best_t + 1e-10 || (x[d] > best_t - 1e-10 && nrm < best_norm))
                        {
                            best_t = x[d];
                            best_norm = nrm;
                            best.assign(x.begin(), x.begin() + long(d));
                        }
                    }
                }
                // next combination
                long i = long(nv) - 1;
                while (i >= 0 && idx[i] == nr - nv + std::size_t(i))
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (std::size_t j = std::size_t(i) + 1; j < nv; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
            if (best.empty() || best_t <= 1e-12)
                report_no_strip(st);
            st.center = best;
            st.clearance = st.cons.empty() ? clearance_cap : st.min_clearance(st.center);
            return st;
        }

        // convex proxy of log|integrand| on the real section
        double saddle_objective(const Strip &st, std::span<const double> c, std::span<const double> logx)
        {
            double v = 0.0;
            for (auto *g : st.all)
                v += std::lgamma(g->real_arg(c));
            for (std::size_t k = 0; k < c.size(); ++k)
                v -= c[k] * logx[k];
            return v;
        }

        std::vector<double> saddle_anchor(const Strip &st, std::span<const double> logx)
        {
            std::vector<double> c = st.center;
            if (st.cons.empty())
                return c;
            // the log-Gamma barrier keeps a 1-D saddle off the poles; at extreme arguments it sits
            // about 1/|log x| from the dominant pole, so a wide fixed margin would cost cancellation
            const double mu = st.d == 1 ? std::min(0.3 * st.clearance, 1e-3) : 0.3 * st.clearance;
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            for (int sweep = 0; sweep < (st.d == 1 ? 1 : 6); ++sweep)
                for (std::size_t k = 0; k < st.d; ++k)
                {
                    auto [lo, hi] = st.interval(c, k, mu);
                    lo = std::max(lo, -box);
                    hi = std::min(hi, box);
                    if (!(hi > lo))
                        continue;
                    auto f = [&](double v)
                    {
                        std::vector<double> t = c;
                        t[k] = v;
                        return saddle_objective(st, t, logx);
                    };
                    double a = lo, b = hi;
                    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
                    double f1 = f(x1), f2 = f(x2);
                    for (int it = 0; it < 80 && (b - a) > 1e-9 * (1.0 + std::abs(a)); ++it)
                    {
                        if (f1 < f2)
                        {
                            b = x2;
                            x2 = x1;
                            f2 = f1;
                            x1 = b - gr * (b - a);
                            f1 = f(x1);
                        }
                        else
                        {
                            a = x1;
                            x1 = x2;
                            f1 = f2;
                            x2 = a + gr * (b - a);
                            f2 = f(x2);
                        }
                    }
                    c[k] = 0.5 * (a + b);
                }
            return c;
        }

        cplx log_integrand(const std::vector<LinGamma> &lg, std::span<const cplx> s, std::span<const double> logx)
        {
            cplx v = 0.0;
            for (const auto &g : lg)
            {
                const cplx l = log_gamma(g.arg(s));
                v += g.num ? l : -l;
            }
            for (std::size_t k = 0; k < s.size(); ++k)
                v -= s[k] * logx[k];
            return v;
        }

        double default_tol(std::size_t d)
        {
            return d == 1 ? 1e-6 : (d == 2 ? 1e-4 : 1e-3);
        }

        // joint factor tabulated by the integer key sum_k mult[k] * i_k
        struct JointTable
        {
            const LinGamma *g = nullptr;
            std::array<long, max_vars> mult{};
            long kmin = 0, kmax = 0;
            std::vector<cplx> val;
            double shift = 0.0;
        };

        bool integer_multiples(const LinGamma &g, std::size_t d, double &unit, std::array<long, max_vars> &mult)
        {
            unit = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                if (g.coef[k] != 0.0)
                {
                    unit = std::abs(g.coef[k]);
                    break;
                }
            for (std::size_t k = 0; k < d; ++k)
                unit = std::min(unit, g.coef[k] != 0.0 ? std::abs(g.coef[k]) : unit);
            for (std::size_t k = 0; k < d; ++k)
            {
                const double r = g.coef[k] / unit;
                const double ri = std::round(r);
                if (std::abs(r - ri) > 1e-12 || std::abs(ri) > 64)
                    return false;
                mult[k] = long(ri);
            }
            return true;
        }

        // all coupling factors see variables 2 and 3 only through t2 + t3
        bool convolvable(const std::vector<LinGamma> &lg, std::size_t d)
        {
            if (d != 3)
                return false;
            for (const auto &g : lg)
            {
                if (g.constant() || g.single_var() >= 0)
                    continue;
                double unit;
                std::array<long, max_vars> mult{};
                if (!integer_multiples(g, d, unit, mult) || mult[1] != mult[2])
                    return false;
            }
            return true;
        }

        struct Grid
        {
            std::size_t d;
            double h;
            std::array<long, max_vars> N{}; // var 0 uses [0, N0], others [-Nk, Nk]
        };

        struct Sum
        {
            cplx s = 0.0;
            double mag = 0.0;
            std::size_t nodes = 0;
        };

        // Trapezoid sum over the grid of prod tables; result scaled by exp(shift)
        // log tables of the previous (twice coarser) level, reused at even nodes
        struct LevelCache
        {
            double h = 0.0;
            std::array<std::vector<cplx>, max_vars> logB;
            std::array<long, max_vars> lo{};
            std::vector<std::vector<cplx>> logJ;
            std::vector<long> jmin;
        };

        Sum grid_sum(const std::vector<LinGamma> &lg, std::span<const double> c, std::span<const double> logx,
                     const Grid &grid, double &shift, LevelCache &cache)
        {
            const std::size_t d = grid.d;
            const double h = grid.h;
            const bool reuse = cache.h > 0.0 && std::abs(cache.h - 2.0 * h) <= 1e-12 * h;
            std::array<std::vector<cplx>, max_vars> B;
            std::array<double, max_vars> bshift{};
            std::vector<JointTable> joint;
            std::vector<const LinGamma *> direct;

            cplx constants = 0.0;
            std::array<std::vector<const LinGamma *>, max_vars> single;
            for (const auto &g : lg)
            {
                if (g.constant())
                {
                    const cplx l = log_gamma(cplx(g.offset, 0.0));
                    constants += g.num ? l : -l;
                }
                else if (g.single_var() >= 0)
                    single[std::size_t(g.single_var())].push_back(&g);
            }

            LevelCache next;
            next.h = h;
            for (std::size_t k = 0; k < d; ++k)
            {
                const long lo = (k == 0) ? 0 : -grid.N[k];
                const long n = grid.N[k] - lo + 1;
                std::vector<cplx> lv(static_cast<std::size_t>(n));
                const auto &prev = cache.logB[k];
                for (long i = 0; i < n; ++i)
                {
                    const long ti = i + lo;
                    if (reuse && ti % 2 == 0)
                    {
                        const long pi2 = ti / 2 - cache.lo[k];
                        if (pi2 >= 0 && pi2 < long(prev.size()))
                        {
                            lv[std::size_t(i)] = prev[std::size_t(pi2)];
                            continue;
                        }
                    }
                    const cplx s(c[k], double(ti) * h);
                    cplx v = -s * logx[k];
                    if (k == 0)
                        v += constants;
                    for (auto *g : single[k])
                    {
                        const cplx l = log_gamma(g->offset + g->coef[k] * s);
                        v += g->num ? l : -l;
                    }
                    lv[std::size_t(i)] = v;
                }
                next.logB[k] = lv;
                next.lo[k] = lo;
                B[k] = std::move(lv);
            }
            for (const auto &g : lg)
            {
                if (g.constant() || g.single_var() >= 0)
                    continue;
                double unit;
                std::array<long, max_vars> mult{};
                if (!integer_multiples(g, d, unit, mult))
                {
                    direct.push_back(&g);
                    continue;
                }
                JointTable jt;
                jt.g = &g;
                jt.mult = mult;
                for (std::size_t k2 = 0; k2 < d; ++k2)
                {
                    const long lo = (k2 == 0) ? 0 : -grid.N[k2];
                    const long a = mult[k2] * lo, b = mult[k2] * grid.N[k2];
                    jt.kmin += std::min(a, b);
                    jt.kmax += std::max(a, b);
                }
                const double re = g.real_arg(c);
                const std::size_t ji = joint.size();
                const bool have_prev = reuse && ji < cache.logJ.size();
                jt.val.resize(std::size_t(jt.kmax - jt.kmin + 1));
                for (long key = jt.kmin; key <= jt.kmax; ++key)
                {
                    if (have_prev && key % 2 == 0)
                    {
                        const long pk = key / 2 - cache.jmin[ji];
                        if (pk >= 0 && pk < long(cache.logJ[ji].size()))
                        {
                            jt.val[std::size_t(key - jt.kmin)] = cache.logJ[ji][std::size_t(pk)];
                            continue;
                        }
                    }
                    const cplx l = log_gamma(cplx(re, unit * double(key) * h));
                    jt.val[std::size_t(key - jt.kmin)] = g.num ? l : -l;
                }
                next.logJ.push_back(jt.val);
                next.jmin.push_back(jt.kmin);
                joint.push_back(std::move(jt));
            }
            cache = std::move(next);

            // exponentiate with per-table shifts
            shift = 0.0;
            for (std::size_t k = 0; k < d; ++k)
            {
                double mx = -inf;
                for (auto &v : B[k])
                    if (std::isfinite(v.real()))
                        mx = std::max(mx, v.real());
                if (!std::isfinite(mx))
                    mx = 0.0;
                bshift[k] = mx;
                shift += mx;
                for (auto &v : B[k])
                    v = std::isfinite(v.real()) ? std::exp(v - mx) : cplx(0.0);
            }
            for (auto &jt : joint)
            {
                double mx = -inf;
                for (auto &v : jt.val)
                    if (std::isfinite(v.real()))
                        mx = std::max(mx, v.real());
                if (!std::isfinite(mx))
                    mx = 0.0;
                jt.shift = mx;
                shift += mx;
                for (auto &v : jt.val)
                    v = std::isfinite(v.real()) ? std::exp(v - mx) : cplx(0.0);
            }
            double dshift = 0.0;
            if (!direct.empty())
            {
                // crude shift from the anchor
                for (auto *g : direct)
                {
                    const double l = log_gamma(cplx(g->real_arg(c), 0.0)).real();
                    dshift += std::isfinite(l) ? (g->num ? l : -l) : 0.0;
                }
                shift += dshift;
            }

            auto jprod = [&](const std::array<long, max_vars> &i) -> cplx
            {
                cplx v = 1.0;
                for (const auto &jt : joint)
                {
                    long key = 0;
                    for (std::size_t k = 0; k < d; ++k)
                        key += jt.mult[k] * i[k];
                    v *= jt.val[std::size_t(key - jt.kmin)];
                }
                if (!direct.empty())
                {
                    std::array<cplx, max_vars> s{};
                    for (std::size_t k = 0; k < d; ++k)
                        s[k] = cplx(c[k], double(i[k]) * h);
                    cplx l = -dshift;
                    for (auto *g : direct)
                    {
                        const cplx lgv = log_gamma(g->arg(std::span<const cplx>(s.data(), d)));
                        l += g->num ? lgv : -lgv;
                    }
                    v *= std::exp(l);
                }
                return v;
            };

            Sum out;
            std::array<long, max_vars> i{};
            if (d == 1)
            {
                for (long i0 = 0; i0 <= grid.N[0]; ++i0)
                {
                    i[0] = i0;
                    const double w = (i0 == 0) ? 1.0 : 2.0;
                    const cplx t = B[0][std::size_t(i0)] * jprod(i);
                    out.s += w * t.real();
                    out.mag += w * std::abs(t);
                }
                out.nodes = std::size_t(grid.N[0] + 1);
            }
            else if (d == 2)
            {
                const bool simple = direct.empty();
                for (long i0 = 0; i0 <= grid.N[0]; ++i0)
                {
                    i[0] = i0;
                    const double w = (i0 == 0) ? 1.0 : 2.0;
                    const cplx b0 = B[0][std::size_t(i0)];
                    cplx inner = 0.0;
                    double mag = 0.0;
                    for (long i1 = -grid.N[1]; i1 <= grid.N[1]; ++i1)
                    {
                        i[1] = i1;
                        cplx t = B[1][std::size_t(i1 + grid.N[1])];
                        if (simple)
                            for (const auto &jt : joint)
                                t *= jt.val[std::size_t(jt.mult[0] * i0 + jt.mult[1] * i1 - jt.kmin)];
                        else
                            t *= jprod(i);
                        inner += t;
                        mag += std::abs(t.real()) + std::abs(t.imag());
                    }
                    out.s += w * (b0 * inner).real();
                    out.mag += w * std::abs(b0) * mag;
                }
                out.nodes = std::size_t(grid.N[0] + 1) * std::size_t(2 * grid.N[1] + 1);
            }
            else
            {
                const bool simple = direct.empty();
                bool conv = simple;
                for (const auto &jt : joint)
                    conv = conv && jt.mult[1] == jt.mult[2];
                const long N1 = grid.N[1], N2 = grid.N[2];
                out.nodes = std::size_t(grid.N[0] + 1) * std::size_t(2 * N1 + 1) * std::size_t(2 * N2 + 1);
                if (conv)
                {
                    // joint factors see variables 2 and 3 only through t2 + t3: contract them first
                    const long K = N1 + N2;
                    std::vector<cplx> C(std::size_t(2 * K + 1), 0.0);
                    std::vector<double> Cm(std::size_t(2 * K + 1), 0.0);
                    for (long i1 = -N1; i1 <= N1; ++i1)
                    {
                        const cplx b1 = B[1][std::size_t(i1 + N1)];
                        const double a1 = std::abs(b1);
                        for (long i2 = -N2; i2 <= N2; ++i2)
                        {
                            const cplx t = b1 * B[2][std::size_t(i2 + N2)];
                            C[std::size_t(i1 + i2 + K)] += t;
                            Cm[std::size_t(i1 + i2 + K)] += a1 * std::abs(B[2][std::size_t(i2 + N2)]);
                        }
                    }
                    for (long i0 = 0; i0 <= grid.N[0]; ++i0)
                    {
                        const double w = (i0 == 0) ? 1.0 : 2.0;
                        const cplx b0 = B[0][std::size_t(i0)];
                        cplx acc = 0.0;
                        double mag = 0.0;
                        for (long k = -K; k <= K; ++k)
                        {
                            cplx t = C[std::size_t(k + K)];
                            double tm = Cm[std::size_t(k + K)];
                            for (const auto &jt : joint)
                            {
                                const cplx jv = jt.val[std::size_t(jt.mult[0] * i0 + jt.mult[1] * k - jt.kmin)];
                                t *= jv;
                                tm *= std::abs(jv);
                            }
                            acc += t;
                            mag += tm;
                        }
                        out.s += w * (b0 * acc).real();
                        out.mag += w * std::abs(b0) * mag;
                    }
                    return out;
                }
                std::vector<cplx> row(std::size_t(2 * N2 + 1));
                for (long i0 = 0; i0 <= grid.N[0]; ++i0)
                {
                    i[0] = i0;
                    const double w = (i0 == 0) ? 1.0 : 2.0;
                    const cplx b0 = B[0][std::size_t(i0)];
                    cplx acc0 = 0.0;
                    double mag0 = 0.0;
                    for (long i1 = -N1; i1 <= N1; ++i1)
                    {
                        i[1] = i1;
                        const cplx b1 = B[1][std::size_t(i1 + N1)];
                        cplx acc1 = 0.0;
                        double mag1 = 0.0;
                        if (simple)
                        {
                            for (long i2 = -N2; i2 <= N2; ++i2)
                                row[std::size_t(i2 + N2)] = B[2][std::size_t(i2 + N2)];
                            for (const auto &jt : joint)
                            {
                                const long base = jt.mult[0] * i0 + jt.mult[1] * i1 - jt.kmin;
                                const long m2 = jt.mult[2];
                                for (long i2 = -N2; i2 <= N2; ++i2)
                                    row[std::size_t(i2 + N2)] *= jt.val[std::size_t(base + m2 * i2)];
                            }
                            for (const auto &t : row)
                            {
                                acc1 += t;
                                mag1 += std::abs(t.real()) + std::abs(t.imag());
                            }
                        }
                        else
                        {
                            for (long i2 = -N2; i2 <= N2; ++i2)
                            {
                                i[2] = i2;
                                const cplx t = B[2][std::size_t(i2 + N2)] * jprod(i);
                                acc1 += t;
                                mag1 += std::abs(t.real()) + std::abs(t.imag());
                            }
                        }
                        acc0 += b1 * acc1;
                        mag0 += std::abs(b1) * mag1;
                    }
                    out.s += w * (b0 * acc0).real();
                    out.mag += w * std::abs(b0) * mag0;
                }
            }
            return out;
        }

        // half-length along axis k beyond which the integrand is negligible
        double axis_truncation(const std::vector<LinGamma> &lg, std::span<const double> c, std::span<const double> logx,
                               std::size_t k, double drop)
        {
            const std::size_t d = c.size();
            std::array<cplx, max_vars> s{};
            for (std::size_t l = 0; l < d; ++l)
                s[l] = c[l];
            // |I| is even in t_k when the other imaginary parts vanish (conjugate symmetry)
            const double dt = 0.4;
            double peak = -inf;
            for (double t = 0.0; t <= 400.0; t += dt)
            {
                s[k] = cplx(c[k], t);
                const double m = log_integrand(lg, std::span<const cplx>(s.data(), d), logx).real();
                if (std::isnan(m))
                    throw NotConverged("non-finite Mellin-Barnes integrand");
                peak = std::max(peak, m);
                if (t > 1.0 && m < peak - drop)
                    return t;
            }
            throw NotConverged("Mellin-Barnes integrand does not decay along the contour");
        }
    }

    FoxHSpec univariate(Block b)
    {
        FoxHSpec s;
        s.blocks.push_back(std::move(b));
        return s;
    }

    StripReport validate(const FoxHSpec &spec)
    {
        const auto lg = compile(spec);
        const Strip st = build_strip(lg, spec.variables());
        StripReport r;
        r.anchor = st.center;
        r.slack = st.clearance;
        for (std::size_t k = 0; k < st.d; ++k)
            r.interval.push_back(st.interval(st.center, k, 0.0));
        return r;
    }

    cplx log_kernel(const FoxHSpec &spec, std::span<const cplx> s)
    {
        const auto lg = compile(spec);
        std::array<double, max_vars> zero{};
        return log_integrand(lg, s, std::span<const double>(zero.data(), s.size()));
    }

    Evaluation evaluate(const FoxHSpec &spec, std::span<const double> x, const ContourPolicy &policy)
    {
        const std::size_t d = spec.variables();
        if (x.size() != d)
            throw InvalidArgument("Fox H evaluation: argument count does not match the number of variables");
        std::array<double, max_vars> logx{};
        for (std::size_t k = 0; k < d; ++k)
        {
            if (!(x[k] > 0.0) || !std::isfinite(x[k]))
                throw InvalidArgument("Fox H evaluation: arguments must be positive and finite");
            logx[k] = std::log(x[k]);
        }
        const std::span<const double> lx(logx.data(), d);
        const auto lg = compile(spec);
        const Strip st = build_strip(lg, d);

        std::vector<double> c;
        if (!policy.anchor.empty())
        {
            if (policy.anchor.size() != d)
                throw InvalidArgument("contour anchor needs one value per variable");
            c = policy.anchor;
            if (!st.cons.empty() && !(st.min_clearance(c) > 0.0))
                throw OutOfStrip("contour anchor lies outside the admissible strip");
        }
        else if (policy.rule == AnchorRule::midpoint)
            c = st.center;
        else
            c = saddle_anchor(st, lx);

        // analyticity half-width of the integrand in each imaginary direction
        double width = clearance_cap;
        for (auto *g : st.cons)
            for (std::size_t k = 0; k < d; ++k)
                if (g->coef[k] != 0.0)
                    width = std::min(width, g->real_arg(c) / std::abs(g->coef[k]));
        if (!(width > 0.0))
            throw OutOfStrip("contour anchor touches a pole");

        const double rel = policy.rel_tol > 0.0 ? policy.rel_tol : default_tol(d);
        double h = policy.step > 0.0 ? policy.step : std::min(0.5, width / (d == 1 ? 2.0 : 1.5));
        const double drop = std::log(1.0 / rel) + 14.0;
        std::array<double, max_vars> T{};
        for (std::size_t k = 0; k < d; ++k)
            T[k] = policy.truncation > 0.0 ? policy.truncation : 1.1 * axis_truncation(lg, c, lx, k, drop) + 1.0;

        const double cpow = std::pow(2.0 * pi, -double(d));
        const bool conv = convolvable(lg, d);
        double prev = std::numeric_limits<double>::quiet_NaN();
        std::size_t total_nodes = 0;
        LevelCache cache;
        for (int level = 0; level <= policy.max_refinements; ++level)
        {
            Grid g;
            g.d = d;
            g.h = h;
            double count = 1.0;
            for (std::size_t k = 0; k < d; ++k)
            {
                g.N[k] = long(std::ceil(T[k] / h));
                count *= (k == 0 ? 1.0 : 2.0) * double(g.N[k]) + 1.0;
            }
            if (conv)
                count = double(g.N[0] + 1) * double(2 * (g.N[1] + g.N[2]) + 1) +
                        double(2 * g.N[1] + 1) * double(2 * g.N[2] + 1);
            if (count > double(policy.max_nodes))
                throw NotConverged("Mellin-Barnes node budget exhausted (h=" + fmt(h) + ")");
            double shift = 0.0;
            const Sum s = grid_sum(lg, c, lx, g, shift, cache);
            total_nodes += s.nodes;
            const double scale = std::exp(shift) * std::pow(h, double(d)) * cpow;
            const double value = s.s.real() * scale;
            const double floor = 64.0 * std::numeric_limits<double>::epsilon() * s.mag * scale;
            if (!std::isfinite(value))
                throw NotConverged("Mellin-Barnes sum is not finite");
            if (level > 0)
            {
                const double err = std::abs(value - prev);
                if (err <= std::max({rel * std::abs(value), policy.abs_tol, floor}))
                    return {value, std::max(err, floor), total_nodes, c};
            }
            prev = value;
            h *= 0.5;
            for (std::size_t k = 0; k < d; ++k)
                T[k] *= 1.2;
        }
        throw NotConverged("Mellin-Barnes quadrature did not converge within the refinement budget");
    }

    double eval_1d(const FoxHSpec &spec, const ContourPolicy &policy, double x)
    {
        const double xs[1] = {x};
        return evaluate(spec, xs, policy).value;
    }

    double eval_2d(const FoxHSpec &spec, const ContourPolicy &policy, double x1, double x2)
    {
        const double xs[2] = {x1, x2};
        return evaluate(spec, xs, policy).value;
    }

    double eval_3d(const FoxHSpec &spec, const ContourPolicy &policy, double x1, double x2, double x3)
    {
        const double xs[3] = {x1, x2, x3};
        return evaluate(spec, xs, policy).value;
    }

    // ------------------------------------------------------------------ residues

    namespace
    {
        struct Pole
        {
            double s;
            std::size_t gamma; // index into compiled list
            int n;
        };

        bool same_pole(double a, double b)
        {
            return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
        }

        // left poles of variable k down to `floor`
        std::vector<Pole> left_poles(const std::vector<LinGamma> &lg, std::size_t k, double floor)
        {
            std::vector<Pole> out;
            for (std::size_t j = 0; j < lg.size(); ++j)
            {
                const auto &g = lg[j];
                if (!g.num || g.single_var() != int(k) || g.coef[k] <= 0.0)
                    continue;
                for (int n = 0; n < 10000; ++n)
                {
                    const double s = -(g.offset + n) / g.coef[k];
                    if (s < floor)
                        break;
                    out.push_back({s, j, n});
                }
            }
            std::sort(out.begin(), out.end(), [](const Pole &a, const Pole &b) { return a.s > b.s; });
            return out;
        }

        double leading_left_pole(const std::vector<LinGamma> &lg, std::size_t k)
        {
            double best = -inf;
            for (const auto &g : lg)
                if (g.num && g.single_var() == int(k) && g.coef[k] > 0.0)
                    best = std::max(best, -g.offset / g.coef[k]);
            if (!std::isfinite(best))
                throw InvalidArgument("variable " + std::to_string(k + 1) + " has no left pole family");
            return best;
        }
    }

    std::vector<ResidueTerm> residue_expansion(const FoxHSpec &spec, std::span<const PoleSelector> select)
    {
        const auto lg = compile(spec);
        const std::size_t d = spec.variables();
        if (select.size() != d)
            throw InvalidArgument("residue_expansion needs one pole selector per variable");
        std::vector<std::vector<Pole>> chosen(d);
        for (std::size_t k = 0; k < d; ++k)
        {
            const double lead = leading_left_pole(lg, k);
            const double floor = lead - std::max(0.0, select[k].window) - 1e-12;
            chosen[k] = left_poles(lg, k, floor);
            for (std::size_t i = 0; i + 1 < chosen[k].size(); ++i)
                if (same_pole(chosen[k][i].s, chosen[k][i + 1].s))
                    throw RepeatedPole("repeated pole at s=" + fmt(chosen[k][i].s) + " from " +
                                       lg[chosen[k][i].gamma].label + " and " + lg[chosen[k][i + 1].gamma].label);
        }

        std::vector<ResidueTerm> out;
        std::vector<std::size_t> idx(d, 0);
        while (true)
        {
            std::array<double, max_vars> s{};
            double logc = 0.0, sign = 1.0;
            bool zero = false;
            for (std::size_t k = 0; k < d; ++k)
            {
                const Pole &p = chosen[k][idx[k]];
                s[k] = p.s;
                logc -= std::lgamma(double(p.n) + 1.0) + std::log(lg[p.gamma].coef[k]);
                if (p.n % 2)
                    sign = -sign;
            }
            for (std::size_t j = 0; j < lg.size(); ++j)
            {
                bool selected = false;
                for (std::size_t k = 0; k < d; ++k)
                    if (chosen[k][idx[k]].gamma == j)
                        selected = true;
                if (selected)
                    continue;
                const double arg = lg[j].real_arg(std::span<const double>(s.data(), d));
                if (at_gamma_pole(arg, 1e-9))
                {
                    if (lg[j].num)
                        throw RepeatedPole("selected pole coincides with a pole of " + lg[j].label);
                    zero = true;
                    break;
                }
                const cplx l = log_gamma(arg);
                logc += lg[j].num ? l.real() : -l.real();
                if (l.imag() != 0.0)
                    sign = -sign;
            }
            if (!zero)
            {
                ResidueTerm t;
                t.coefficient = sign * std::exp(logc);
                for (std::size_t k = 0; k < d; ++k)
                    t.exponents.push_back(-s[k]);
                out.push_back(std::move(t));
            }
            std::size_t k = 0;
            while (k < d && ++idx[k] == chosen[k].size())
                idx[k++] = 0;
            if (k == d)
                break;
        }
        return out;
    }

    double sum_terms(std::span<const ResidueTerm> terms, std::span<const double> x)
    {
        double v = 0.0;
        for (const auto &t : terms)
        {
            double p = t.coefficient;
            for (std::size_t k = 0; k < x.size(); ++k)
                p *= std::pow(x[k], t.exponents[k]);
            v += p;
        }
        return v;
    }

    PoleCluster leading_cluster(const FoxHSpec &spec, std::size_t variable, double rel_window)
    {
        const auto lg = compile(spec);
        if (variable >= spec.variables())
            throw InvalidArgument("leading_cluster: variable index out of range");
        const std::size_t k = variable;
        const double lead = leading_left_pole(lg, k);
        const double win = rel_window * std::max(1.0, std::abs(lead));
        PoleCluster cl;
        cl.leading = lead;
        double lowest = lead;
        // every pole of every single-variable numerator factor near the cluster
        std::vector<double> others;
        for (const auto &g : lg)
        {
            if (!g.num || g.single_var() != int(k))
                continue;
            for (int n = 0; n < 200; ++n)
            {
                const double s = -(g.offset + n) / g.coef[k];
                if (std::abs(s - lead) > 20.0)
                    break;
                if (g.coef[k] > 0.0 && s <= lead + 1e-12 && s >= lead - win)
                {
                    ++cl.size;
                    lowest = std::min(lowest, s);
                }
                else
                    others.push_back(s);
            }
        }
        cl.center = 0.5 * (lead + lowest);
        const double spread = 0.5 * (lead - lowest);
        double dist = 20.0;
        for (double s : others)
            dist = std::min(dist, std::abs(s - cl.center));
        cl.radius = std::min(0.5 * (dist + spread), 1.0);
        if (!(cl.radius > 1.5 * spread) || !(cl.radius > 0.0))
            throw RepeatedPole("pole cluster at s=" + fmt(lead) + " is not isolated");
        return cl;
    }

    double cluster_residue(const FoxHSpec &spec, std::span<const double> x, std::span<const PoleCluster> clusters,
                           const ExtraFactor &extra, int nodes)
    {
        const auto lg = compile(spec);
        const std::size_t d = spec.variables();
        if (clusters.size() != d || x.size() != d)
            throw InvalidArgument("cluster_residue: one cluster and one argument per variable required");
        std::array<double, max_vars> logx{};
        for (std::size_t k = 0; k < d; ++k)
            logx[k] = std::log(x[k]);
        const std::span<const double> lx(logx.data(), d);
        std::vector<std::size_t> idx(d, 0);
        cplx acc = 0.0;
        std::array<cplx, max_vars> s{};
        while (true)
        {
            cplx w = 1.0;
            for (std::size_t k = 0; k < d; ++k)
            {
                const double th = 2.0 * pi * (double(idx[k]) + 0.5) / double(nodes);
                const cplx e = std::polar(1.0, th);
                s[k] = clusters[k].center + clusters[k].radius * e;
                w *= clusters[k].radius * e / double(nodes);
            }
            const std::span<const cplx> ss(s.data(), d);
            cplx v = std::exp(log_integrand(lg, ss, lx));
            if (extra)
                v *= extra(ss);
            acc += w * v;
            std::size_t k = 0;
            while (k < d && ++idx[k] == std::size_t(nodes))
                idx[k++] = 0;
            if (k == d)
                break;
        }
        return acc.real();
    }

    // ------------------------------------------------------------------ templates

    DensityTemplate normalized(const DensityTemplate &t)
    {
        if (t.phi == 0.0)
            return t;
        DensityTemplate o = t;
        for (auto &p : o.h.upper)
            p.a += p.A * t.phi;
        for (auto &p : o.h.lower)
            p.a += p.A * t.phi;
        o.psi = t.psi * std::pow(t.zeta, -t.phi);
        o.phi = 0.0;
        return o;
    }

    DensityTemplate compose_product(std::span<const DensityTemplate> parts)
    {
        if (parts.empty())
            throw InvalidArgument("product of an empty set of densities");
        DensityTemplate o;
        std::vector<GammaPair> up_n, up_r, lo_m, lo_r;
        for (const auto &raw : parts)
        {
            if (!(raw.psi > 0.0) || !(raw.zeta > 0.0) || !std::isfinite(raw.psi) || !std::isfinite(raw.zeta))
                throw InvalidArgument("density template needs positive finite psi and zeta");
            const DensityTemplate t = normalized(raw);
            const auto &b = t.h;
            if (b.n < 0 || b.m < 0 || b.n > int(b.upper.size()) || b.m > int(b.lower.size()))
                throw InvalidArgument("density template has inconsistent orders");
            o.psi *= t.psi;
            o.zeta *= t.zeta;
            up_n.insert(up_n.end(), b.upper.begin(), b.upper.begin() + b.n);
            up_r.insert(up_r.end(), b.upper.begin() + b.n, b.upper.end());
            lo_m.insert(lo_m.end(), b.lower.begin(), b.lower.begin() + b.m);
            lo_r.insert(lo_r.end(), b.lower.begin() + b.m, b.lower.end());
            o.h.m += b.m;
            o.h.n += b.n;
        }
        o.h.upper = up_n;
        o.h.upper.insert(o.h.upper.end(), up_r.begin(), up_r.end());
        o.h.lower = lo_m;
        o.h.lower.insert(o.h.lower.end(), lo_r.begin(), lo_r.end());
        return o;
    }

    DensityTemplate power_transform(const DensityTemplate &t, double k, double gain)
    {
        if (!(k > 0.0) || !(gain > 0.0))
            throw InvalidArgument("power transform needs positive exponent and gain");
        DensityTemplate o = normalized(t);
        for (auto &p : o.h.upper)
            p.A *= k;
        for (auto &p : o.h.lower)
            p.A *= k;
        o.zeta = std::pow(o.zeta, k) / gain;
        return o;
    }

    Block cdf_block(const Block &b)
    {
        Block o = b;
        o.upper.insert(o.upper.begin(), GammaPair{1.0, 1.0});
        o.n += 1;
        o.lower.push_back(GammaPair{0.0, 1.0});
        return o;
    }

    std::pair<double, double> moment_strip(const DensityTemplate &t)
    {
        const auto lg = compile(univariate(t.h));
        double lo = -inf, hi = inf;
        for (const auto &g : lg)
        {
            if (!g.num || g.constant())
                continue;
            const double b = -g.offset / g.coef[0];
            if (g.coef[0] > 0)
                lo = std::max(lo, b);
            else
                hi = std::min(hi, b);
        }
        return {lo - t.phi, hi - t.phi};
    }

    cplx log_mellin_moment(const DensityTemplate &t, cplx r)
    {
        const cplx s = r + t.phi;
        const cplx ss[1] = {s};
        return std::log(t.psi) - s * std::log(t.zeta) + log_kernel(univariate(t.h), ss);
    }

    double mellin_moment(const DensityTemplate &t, double r)
    {
        const auto [lo, hi] = moment_strip(t);
        if (!(r > lo && r < hi))
            throw OutOfStrip("moment order " + fmt(r) + " outside (" + fmt(lo) + ", " + fmt(hi) + ")");
        const cplx l = log_mellin_moment(t, cplx(r, 0.0));
        return std::exp(l.real()) * std::cos(l.imag());
    }

    double template_pdf(const DensityTemplate &t, double x, const ContourPolicy &policy)
    {
        if (!(x > 0.0))
            return 0.0;
        const DensityTemplate n = normalized(t);
        return n.psi / x * eval_1d(univariate(n.h), policy, n.zeta * x);
    }

    double template_cdf(const DensityTemplate &t, double x, const ContourPolicy &policy)
    {
        if (!(x > 0.0))
            return 0.0;
        const DensityTemplate n = normalized(t);
        const double v = n.psi * eval_1d(univariate(cdf_block(n.h)), policy, n.zeta * x);
        return std::clamp(v, 0.0, 1.0);
    }
}
