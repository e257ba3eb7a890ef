#include "heckekit/identities.hpp"

#include "heckekit/arith.hpp"
#include "heckekit/dirichlet.hpp"
#include "heckekit/eisenstein.hpp"
#include "heckekit/error.hpp"
#include "heckekit/kloosterman.hpp"
#include "heckekit/matgroup.hpp"
#include "heckekit/specfun.hpp"
#include "heckekit/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace heckekit {

namespace {

using json = nlohmann::json;
using u64 = std::uint64_t;
using i64 = std::int64_t;
constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- parameters

bool is_cplx_json(const json& j) {
    if (j.is_number()) return true;
    return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

bool kind_matches(ParamKind k, const json& j) {
    auto all = [&](auto pred) {
        if (!j.is_array()) return false;
        return std::all_of(j.begin(), j.end(), pred);
    };
    switch (k) {
    case ParamKind::INT: return j.is_number_integer();
    case ParamKind::REAL: return j.is_number();
    case ParamKind::COMPLEX: return is_cplx_json(j);
    case ParamKind::INT_LIST: return all([](const json& e) { return e.is_number_integer(); });
    case ParamKind::REAL_LIST: return all([](const json& e) { return e.is_number(); });
    case ParamKind::COMPLEX_LIST: return all([](const json& e) { return is_cplx_json(e); });
    }
    return false;
}

cplx to_cplx(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    return {j[0].get<double>(), j[1].get<double>()};
}

// Resolved parameters plus the error accumulator of one verification.
struct Ctx {
    std::string id;
    json params;
    std::size_t N = 2048;
    double tol = 1e-8;
    u64 seed = 0;
    double err = 0.0;
    bool nan = false;
    std::vector<std::string> notes;

    bool has(const std::string& k) const { return params.contains(k) && !params[k].is_null(); }
    i64 i(const std::string& k) const { return params.at(k).get<i64>(); }
    double r(const std::string& k) const { return params.at(k).get<double>(); }
    cplx c(const std::string& k) const { return to_cplx(params.at(k)); }
    std::vector<i64> ilist(const std::string& k) const { return params.at(k).get<std::vector<i64>>(); }
    std::vector<double> rlist(const std::string& k) const { return params.at(k).get<std::vector<double>>(); }
    std::vector<cplx> clist(const std::string& k) const {
        std::vector<cplx> out;
        for (const auto& e : params.at(k)) out.push_back(to_cplx(e));
        return out;
    }

    void record(double e) {
        if (std::isnan(e)) nan = true;
        else err = std::max(err, e);
    }
    void record(const CoeffSeries& a, const CoeffSeries& b) { record(compare(a, b, tol).max_error); }
    // Same, also tracking the worst error of one named part for the report notes.
    void record(const std::string& part, const CoeffSeries& a, const CoeffSeries& b) {
        const double e = compare(a, b, tol).max_error;
        record(e);
        auto& slot = parts[part];
        slot = std::max(slot, e);
    }
    void record(const std::string& part, double e) {
        record(e);
        auto& slot = parts[part];
        slot = std::max(slot, e);
    }
    std::map<std::string, double> parts;

    // Draw indices requested: the single `draw`, or 0..draws-1.
    std::vector<int> draws() const {
        if (has("draw")) return {static_cast<int>(i("draw"))};
        std::vector<int> out;
        for (int k = 0; k < static_cast<int>(i("draws")); ++k) out.push_back(k);
        return out;
    }
};

u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// Portable uniform draws: std distributions are implementation-defined.
class Draw {
public:
    Draw(const Ctx& ctx, int k) : g_(ctx.seed ^ (fnv1a(ctx.id) + 0x9e3779b97f4a7c15ull * static_cast<u64>(k + 1))) {}
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(g_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    i64 pick(i64 lo, i64 hi) { return lo + static_cast<i64>(g_() % static_cast<u64>(hi - lo + 1)); }
    template <class T>
    T pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(pick(0, static_cast<i64>(v.size()) - 1))]; }
    cplx point(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double a = uniform(re_lo, re_hi);
        return {a, uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 g_;
};

// ---------------------------------------------------------------- series helpers

// Truncated power series in X = p^{-s} with p^deg <= N.
class Local {
public:
    Local(u64 p, std::size_t N) : p_(p) {
        u64 q = 1;
        int d = 0;
        while (q <= N / p) {
            q *= p;
            ++d;
        }
        c_.assign(static_cast<std::size_t>(d) + 1, 0.0);
        c_[0] = 1.0;
    }
    static Local constant(u64 p, std::size_t N, cplx k) {
        Local l(p, N);
        l.c_[0] = k;
        return l;
    }
    // 1 - k X^deg
    static Local one_minus(u64 p, std::size_t N, cplx k, int deg) {
        Local l(p, N);
        if (deg <= l.degree()) l.c_[static_cast<std::size_t>(deg)] -= k;
        return l;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    u64 prime() const { return p_; }
    cplx operator[](int j) const { return j <= degree() ? c_[static_cast<std::size_t>(j)] : 0.0; }
    void add(int j, cplx k) {
        if (j <= degree()) c_[static_cast<std::size_t>(j)] += k;
    }

    Local operator*(const Local& o) const {
        Local r = *this;
        for (int j = 0; j <= degree(); ++j) {
            cplx s = 0.0;
            for (int i = 0; i <= j; ++i) s += (*this)[i] * o[j - i];
            r.c_[static_cast<std::size_t>(j)] = s;
        }
        return r;
    }
    Local operator+(const Local& o) const {
        Local r = *this;
        for (int j = 0; j <= degree(); ++j) r.c_[static_cast<std::size_t>(j)] += o[j];
        return r;
    }
    Local operator-(const Local& o) const {
        Local r = *this;
        for (int j = 0; j <= degree(); ++j) r.c_[static_cast<std::size_t>(j)] -= o[j];
        return r;
    }
    Local inverse() const {
        Local r = *this;
        r.c_[0] = 1.0 / c_[0];
        for (int j = 1; j <= degree(); ++j) {
            cplx s = 0.0;
            for (int i = 1; i <= j; ++i) s += (*this)[i] * r[j - i];
            r.c_[static_cast<std::size_t>(j)] = -s * r.c_[0];
        }
        return r;
    }

private:
    u64 p_;
    std::vector<cplx> c_;
};

// Product over the listed primes of their local factors; 1 elsewhere.
class LocalProduct {
public:
    explicit LocalProduct(std::size_t N) : N_(N) {}
    void mul(const Local& l) {
        auto it = f_.find(l.prime());
        if (it == f_.end()) f_.emplace(l.prime(), l);
        else it->second = it->second * l;
    }
    // Local factors may have constant term other than 1, so no euler_product here.
    CoeffSeries series() const {
        CoeffSeries out(N_);
        out[1] = 1.0;
        for (const auto& [p, l] : f_) {
            CoeffSeries next(N_);
            for (std::size_t n = 1; n <= N_; ++n) {
                if (out[n] == 0.0) continue;
                std::size_t idx = n;
                for (int j = 0; j <= l.degree(); ++j) {
                    next[idx] += out[n] * l[j];
                    if (idx > N_ / p) break;
                    idx *= p;
                }
            }
            out = next;
        }
        return out;
    }

private:
    std::size_t N_;
    std::map<u64, Local> f_;
};

cplx pw(u64 n, cplx a) { return cpow_int(n, a); }

// sum_{(n,Q)=1} n^{-a} placed at index n^e; with `mobius` the coefficients carry mu(n).
CoeffSeries zeta_s(std::size_t N, int e, cplx a, u64 Q = 1, bool mob = false) {
    CoeffSeries out(N);
    for (u64 n = 1;; ++n) {
        u64 idx = 1;
        bool over = false;
        for (int k = 0; k < e; ++k) {
            if (idx > N / n) {
                over = true;
                break;
            }
            idx *= n;
        }
        if (over || idx > N) break;
        if (std::gcd(n, Q) != 1) continue;
        const int mu = mob ? mobius(n) : 1;
        if (mu == 0) continue;
        out[idx] = static_cast<double>(mu) * pw(n, -a);
    }
    return out;
}
CoeffSeries inv_zeta_s(std::size_t N, int e, cplx a, u64 Q = 1) { return zeta_s(N, e, a, Q, true); }

CoeffSeries mul(std::initializer_list<CoeffSeries> xs) {
    auto it = xs.begin();
    CoeffSeries acc = *it++;
    for (; it != xs.end(); ++it) acc = convolve(acc, *it);
    return acc;
}

// Divisor table d(n) for n <= N.
std::vector<std::vector<u64>> divisor_table(std::size_t N) {
    std::vector<std::vector<u64>> t(N + 1);
    for (u64 d = 1; d <= N; ++d)
        for (u64 n = d; n <= N; n += d) t[n].push_back(d);
    return t;
}

std::vector<i64> squarefree_upto(i64 qmax) {
    std::vector<i64> out;
    for (i64 q = 1; q <= qmax; ++q)
        if (is_squarefree(static_cast<u64>(q))) out.push_back(q);
    return out;
}

std::vector<i64> coprime_splits(i64 q) {
    std::vector<i64> out;
    for (i64 w = 1; w <= q; ++w)
        if (q % w == 0 && std::gcd(w, q / w) == 1) out.push_back(w);
    return out;
}

std::vector<u64> udivisors(i64 n) { return divisors(static_cast<u64>(n)); }
std::vector<u64> uprimes(i64 n) { return prime_divisors(static_cast<u64>(n)); }

// ---------------------------------------------------------------- verifiers

void hurwitz_sum(Ctx& ctx) {
    const std::vector<i64> qs = ctx.has("q") ? std::vector<i64>{ctx.i("q")} : std::vector<i64>{2, 3, 6, 12};
    const std::vector<i64> ms = ctx.has("m") ? std::vector<i64>{ctx.i("m")} : std::vector<i64>{1, 2, 5};
    const std::vector<cplx> ss = ctx.has("s") ? std::vector<cplx>{ctx.c("s")}
                                              : std::vector<cplx>{{2.5, 1.0}, {-0.7, 3.0}, {0.3, -2.0}};
    for (i64 q : qs)
        for (i64 m : ms)
            for (cplx s : ss) {
                cplx lhs = 0.0;
                for (i64 h = 1; h <= q; ++h) {
                    if (std::gcd(h, q) != 1) continue;
                    const i64 res = mod_floor(h * m, q);
                    const double omega = res == 0 ? 1.0 : static_cast<double>(res) / static_cast<double>(q);
                    lhs += hurwitz_zeta(s, omega);
                }
                cplx sum = 0.0;
                for (u64 d : udivisors(q)) {
                    const i64 dd = static_cast<i64>(d);
                    const int mu = mobius(static_cast<u64>(q / dd));
                    if (mu == 0) continue;
                    sum += static_cast<double>(dd * mu) * pw(static_cast<u64>(dd / std::gcd(dd, m)), s - 1.0);
                }
                ctx.record(std::abs(lhs - zeta(s) * sum));
            }
}

std::vector<i64> level_list(const Ctx& ctx, std::vector<i64> fallback) {
    return ctx.has("q") ? std::vector<i64>{ctx.i("q")} : fallback;
}

void kloosterman_closed(Ctx& ctx) {
    const auto qs = level_list(ctx, squarefree_upto(30));
    const auto freqs = ctx.ilist("freqs");
    const i64 rmax = ctx.i("rmax");
    for (i64 q : qs) {
        if (!is_squarefree(static_cast<u64>(q))) throw InvalidParameters("KLOOSTERMAN_CLOSED: q must be square-free");
        const auto cusps = enumerate_cusps(q);
        for (const auto& a : cusps)
            for (const auto& b : cusps) {
                const i64 guard = std::gcd(a.v(), b.w) * std::gcd(a.w, b.v());
                for (i64 r = 1; r <= rmax; ++r) {
                    if (std::gcd(r, guard) != 1) continue;
                    for (i64 m : freqs)
                        for (i64 n : freqs) {
                            GenKloostermanSpec spec{q, a, b, Convention::SHIFTED, m, n, std::gcd(a.w, b.w) * r};
                            ctx.record(std::abs(general_kloosterman_bruteforce(spec) -
                                                general_kloosterman_squarefree(q, a.w, b.w, m, n, r)));
                        }
                }
            }
    }
}

void kloosterman_special(Ctx& ctx) {
    std::vector<std::pair<i64, i64>> pairs;
    if (ctx.has("c") && ctx.has("d")) pairs.emplace_back(ctx.i("c"), ctx.i("d"));
    else pairs = {{1, 6}, {2, 3}, {3, 2}, {6, 1}, {5, 3}, {2, 15}};
    const auto freqs = ctx.ilist("freqs");
    for (auto [c, d] : pairs) {
        const i64 q = c * d;
        if (std::gcd(c, d) != 1 || !is_squarefree(static_cast<u64>(q)))
            throw InvalidParameters("KLOOSTERMAN_SPECIAL: c d must be square-free with (c, d) = 1");
        for (i64 r = 1; r <= ctx.i("rmax"); ++r) {
            if (std::gcd(r, d) != 1) continue;
            const i64 M = c * r;
            const i64 dbar = M == 1 ? 1 : mod_inverse(d, M);
            for (i64 m : freqs)
                for (i64 n : freqs)
                    ctx.record(std::abs(general_kloosterman_squarefree(q, q, c, m, n, r) -
                                        ordinary_kloosterman(m, dbar * n, M)));
        }
    }
}

void kloosterman_fact(Ctx& ctx) {
    const auto qs = level_list(ctx, {4, 8, 9, 12});
    const auto freqs = ctx.ilist("freqs");
    for (i64 q : qs) {
        const auto cusps = enumerate_cusps(q);
        for (const auto& a : cusps)
            for (const auto& b : cusps)
                for (i64 c = 1; c <= ctx.i("cmax"); ++c)
                    for (i64 m : freqs)
                        for (i64 n : freqs) {
                            const auto f = kloosterman_factorize(q, a, b, m, n, c);
                            GenKloostermanSpec spec{q, a, b, Convention::PLAIN, m, n, c};
                            ctx.record(std::abs(f.product() - general_kloosterman_bruteforce(spec)));
                        }
    }
}

void double_coset(Ctx& ctx) {
    const auto qs = level_list(ctx, {6, 10, 15, 30});
    const i64 B = ctx.i("box");
    double violations = 0;
    for (i64 q : qs) {
        const auto ws = coprime_splits(q);
        std::vector<IntMat2> group, all;
        for (i64 a = -B; a <= B; ++a)
            for (i64 b = -B; b <= B; ++b)
                for (i64 c = -B; c <= B; ++c) {
                    if (a == 0) {
                        if (b * c != -1) continue;
                        for (i64 d = -B; d <= B; ++d) {
                            const auto x = IntMat2::make(0, b, c, d);
                            all.push_back(x);
                            if (c % q == 0) group.push_back(x);
                        }
                        continue;
                    }
                    if ((1 + b * c) % a) continue;
                    const i64 d = (1 + b * c) / a;
                    if (std::llabs(d) > B) continue;
                    const auto x = IntMat2::make(a, b, c, d);
                    all.push_back(x);
                    if (c % q == 0) group.push_back(x);
                }
        for (i64 w1 : ws)
            for (i64 w2 : ws) {
                const IntMat2 m1 = scaling_data({q, w1, 1}, Convention::SHIFTED).conjugator();
                const IntMat2 m2 = scaling_data({q, w2, 1}, Convention::SHIFTED).conjugator();
                for (const auto& g : group)
                    if (!double_coset_pattern(q, w1, w2, m1.inverse() * g * m2)) violations += 1;
                for (const auto& x : all)
                    if (double_coset_pattern(q, w1, w2, x) && !is_gamma0(m1 * x * m2.inverse(), q)) violations += 1;
            }
    }
    ctx.record(violations);
}

void scatter_unitary(Ctx& ctx) {
    Draw rng(ctx, 0);
    const auto qs = ctx.has("q") ? std::vector<i64>{ctx.i("q")} : squarefree_upto(ctx.i("qmax"));
    for (i64 q : qs)
        for (i64 k = 0; k < ctx.i("points"); ++k) {
            const cplx s = rng.point(0.1, 0.9, -8.0, 8.0);
            ctx.record(unitarity_residual(s, q));
            if (q == 1) ctx.record(std::abs(eisen_phi(s, 1, 1, 1) * eisen_phi(1.0 - s, 1, 1, 1) - 1.0));
        }
}

void eisen_phi_check(Ctx& ctx) {
    const cplx s = ctx.c("s");
    if (s.real() < 1.6) ctx.notes.push_back("direct series converges slowly for Re s < 1.6");
    for (i64 q : level_list(ctx, {1, 2, 3, 6, 10, 15}))
        for (i64 w1 : coprime_splits(q))
            for (i64 w2 : coprime_splits(q))
                ctx.record(std::abs(eisen_phi(s, q, w1, w2) - eisen_phi_series(s, q, w1, w2, static_cast<i64>(ctx.N))));
}

void eisen_en_check(Ctx& ctx) {
    const cplx s = ctx.c("s");
    for (i64 q : level_list(ctx, {1, 2, 3, 6, 10, 15}))
        for (i64 w1 : coprime_splits(q))
            for (i64 w2 : coprime_splits(q))
                for (i64 n : ctx.ilist("n"))
                    ctx.record(std::abs(eisen_coeff(n, s, q, w1, w2).bracket -
                                        eisen_coeff_series(n, s, q, w1, w2, static_cast<i64>(ctx.N))));
}

// sum over (r, guard) = 1 of c_{Mr}(n) (Mr)^{-w} as a series in w.
void eisen_en_bracket(Ctx& ctx) {
    const std::size_t N = ctx.N;
    const std::vector<i64> pool{1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30};
    for (int k : ctx.draws()) {
        Draw rng(ctx, k);
        const i64 q = ctx.has("q") ? ctx.i("q") : rng.pick(pool);
        const auto ws = coprime_splits(q);
        const i64 w1 = rng.pick(ws), w2 = rng.pick(ws);
        const i64 n = ctx.has("n") ? ctx.i("n") : rng.pick(1, 120) * (rng.pick(0, 1) ? 1 : -1);
        const i64 v1 = q / w1, v2 = q / w2;
        const i64 M = std::gcd(v1, v2) * std::gcd(w1, w2);
        const i64 guard = std::gcd(v1, w2) * std::gcd(w1, v2);
        const u64 an = static_cast<u64>(std::llabs(n));

        CoeffSeries lhs(N);
        for (i64 r = 1; static_cast<std::size_t>(M * r) <= N; ++r)
            if (std::gcd(r, guard) == 1) lhs[static_cast<std::size_t>(M * r)] = static_cast<double>(ramanujan_sum(static_cast<u64>(M * r), n));

        CoeffSeries sig(N);
        for (u64 a : divisors(an))
            if (a <= N && std::gcd(a, static_cast<u64>(q)) == 1) sig[a] += static_cast<double>(a);
        LocalProduct loc(N);
        for (u64 p : uprimes(M)) {
            const u64 np = part_p(an, p);
            Local s(p, N);  // sigma_{1-w}(n_p) = sum_i p^i X^i
            u64 pi = p;
            for (int i = 1; pi <= np; ++i, pi *= p) s.add(i, static_cast<double>(pi));
            loc.mul(s * Local::one_minus(p, N, 1.0, 1) - Local::constant(p, N, 1.0));
        }
        ctx.record(lhs, mul({sig, inv_zeta_s(N, 1, 0.0, static_cast<u64>(q)), loc.series()}));
    }
}

void xy_closed(Ctx& ctx) {
    for (double r : ctx.rlist("r")) {
        for (i64 cd : ctx.ilist("cd"))
            for (i64 c : coprime_splits(cd)) {
                const auto f = xy_factors(r, c, cd / c, c, cd / c);
                ctx.record(std::abs(f.x_divisor_sum - f.x_closed));
            }
        for (i64 ab : ctx.ilist("ab"))
            for (i64 a : coprime_splits(ab)) {
                const auto f = xy_factors(r, a, ab / a, 1, 1);
                ctx.record(std::abs(f.y_divisor_sum - f.y_closed));
            }
    }
}

// Four shifts u = s + a1, v = a2, w = s + a3, z = a4.
void j0_euler(Ctx& ctx) {
    const std::size_t N = ctx.N;
    const i64 cd = ctx.i("cd");
    const auto dt = divisor_table(N);
    for (int k : ctx.draws()) {
        Draw rng(ctx, k);
        const cplx a1 = rng.point(0.3, 0.9, -2, 2), a2 = rng.point(0.3, 0.9, -2, 2);
        const cplx a3 = rng.point(0.3, 0.9, -2, 2), a4 = rng.point(0.3, 0.9, -2, 2);
        const cplx sa = a1 + a2 + a3 + a4;
        std::vector<cplx> p1(N + 1), p2(N + 1), p3(N + 1), p4(N + 1);
        for (u64 n = 1; n <= N; ++n) {
            p1[n] = pw(n, -a1);
            p2[n] = pw(n, -a2);
            p3[n] = pw(n, -a3);
            p4[n] = pw(n, -a4);
        }
        auto G = [&](i64 c, i64 d) {
            CoeffSeries g(N);
            for (u64 t = 1; t <= N; ++t) {
                cplx s = 0.0;
                for (u64 kk : dt[t])
                    for (u64 l : dt[t])
                        if (std::gcd(static_cast<u64>(c) * kk, static_cast<u64>(d) * l) == 1)
                            s += p1[kk] * p3[t / kk] * p2[l] * p4[t / l];
                g[t] = s;
            }
            return g;
        };
        auto brace_local = [&](u64 p, cplx e) {
            return Local::one_minus(p, N, pw(p, -e), 1) * Local::one_minus(p, N, pw(p, -sa), 2).inverse();
        };
        std::map<std::pair<i64, i64>, CoeffSeries> gs;
        auto G_cached = [&](i64 c, i64 d) -> const CoeffSeries& {
            auto it = gs.find({c, d});
            if (it == gs.end()) it = gs.emplace(std::make_pair(c, d), G(c, d)).first;
            return it->second;
        };
        for (i64 c : coprime_splits(cd)) {
            const i64 d = cd / c;
            const CoeffSeries& g = G_cached(c, d);
            const CoeffSeries base =
                mul({zeta_s(N, 1, a3 + a4), zeta_s(N, 1, a1 + a4), zeta_s(N, 1, a2 + a3)});
            const CoeffSeries rest = euler_product(
                [&](u64 p, int j) -> cplx {
                    if (j == 0) return 1.0;
                    if (c % static_cast<i64>(p) == 0) return j == 1 ? -pw(p, -(a2 + a3)) : 0.0;
                    if (d % static_cast<i64>(p) == 0) return j == 1 ? -pw(p, -(a1 + a4)) : 0.0;
                    return j == 2 ? -pw(p, -sa) : 0.0;
                },
                N);
            ctx.record(g, convolve(base, rest));
        }
        // Summed over c | A, d | B for every split cd = A B.
        for (i64 A : coprime_splits(cd)) {
            const i64 B = cd / A;
            CoeffSeries lhs(N), ba(N), bb(N);
            for (u64 c : udivisors(A))
                for (u64 d : udivisors(B)) {
                    CoeffSeries t = G_cached(static_cast<i64>(c), static_cast<i64>(d));
                    t *= pw(c, a2 - a4) * pw(d, a1 - a3);
                    lhs = lhs + t;
                }
            for (u64 c : udivisors(A)) {
                LocalProduct lp(N);
                for (u64 p : prime_divisors(c)) lp.mul(brace_local(p, a2 + a3));
                CoeffSeries t = lp.series();
                t *= pw(c, a2 - a4);
                ba = ba + t;
            }
            for (u64 d : udivisors(B)) {
                LocalProduct lp(N);
                for (u64 p : prime_divisors(d)) lp.mul(brace_local(p, a1 + a4));
                CoeffSeries t = lp.series();
                t *= pw(d, a1 - a3);
                bb = bb + t;
            }
            const CoeffSeries left = convolve(zeta_s(N, 1, a1 + a2), lhs);
            const CoeffSeries right = mul({zeta_s(N, 1, a1 + a2), zeta_s(N, 1, a1 + a4), zeta_s(N, 1, a3 + a2),
                                           zeta_s(N, 1, a3 + a4), inv_zeta_s(N, 2, sa), ba, bb});
            ctx.record(left, right);
        }
    }
}

// Shifts u = s + a1, v = s + a2, w = a3, z = s + a4.
void gcd_sum(Ctx& ctx) {
    const std::size_t N = ctx.N;
    const i64 c = ctx.i("c"), d = ctx.i("d"), delta = ctx.i("delta"), n0 = ctx.i("n0");
    if (std::gcd(c, d) != 1) throw InvalidParameters("GCD_SUM: c and d must be coprime");
    for (int k : ctx.draws()) {
        Draw rng(ctx, k);
        const cplx a1 = rng.point(0.3, 0.9, -2, 2), a2 = rng.point(0.3, 0.9, -2, 2);
        const cplx a3 = rng.point(0.3, 0.9, -2, 2), a4 = rng.point(0.3, 0.9, -2, 2);
        const cplx gam = a2 - a4;
        const cplx b_vw = a2 + a3 - 1.0, b_wz = a3 + a4 - 1.0;
        const cplx b_k = a1 - a2 - a3 + a4 + 2.0, b_uw = a1 - a3 + 1.0;
        const cplx b_uz = a1 + a4, b_uv = a1 + a2;
        auto lam_factor = [&](u64 lam) {
            cplx f = 1.0;
            for (u64 p : prime_divisors(lam)) f *= 1.0 - pw(p, -gam);
            return f;
        };
        auto cofactor = [&](u64 m) {
            cplx f = 1.0;
            for (u64 p : prime_divisors(m)) f *= 1.0 - pw(p, gam - 1.0);
            return f;
        };

        {
            CoeffSeries lhs(N), D(N);
            for (u64 f = 1; f <= N; ++f)
                lhs[f] = pw(std::gcd(f, static_cast<u64>(delta)), gam) * pw(f, -b_vw);
            for (u64 lam : udivisors(delta))
                if (lam <= N) D[lam] = pw(lam, -b_wz) * lam_factor(lam);
            ctx.record("delta form", lhs, convolve(zeta_s(N, 1, b_vw), D));
        }
        {
            CoeffSeries lhs(N), E(N);
            for (u64 f = 1; f <= N; ++f) {
                cplx s = 0.0;
                for (u64 de : udivisors(n0)) {
                    const int mu = mobius(static_cast<u64>(n0) / de);
                    if (mu) s += static_cast<double>(mu) * pw(de, 1.0 - gam) * pw(std::gcd(f, de), gam);
                }
                lhs[f] = s * pw(f, -b_vw);
            }
            for (u64 lam : udivisors(n0))
                if (lam <= N) E[lam] = pw(lam, -b_wz) * lam_factor(lam) * cofactor(static_cast<u64>(n0) / lam);
            CoeffSeries rhs = convolve(zeta_s(N, 1, b_vw), E);
            rhs *= pw(static_cast<u64>(n0), 1.0 - gam);
            ctx.record("n0 form", lhs, rhs);
        }

        // The lambda-sum S, grouped by g = (c, lambda).
        const u64 uc = static_cast<u64>(c), ud = static_cast<u64>(d);
        CoeffSeries S(N);
        for (u64 g : divisors(uc)) {
            CoeffSeries T(N);
            for (u64 lam = 1; lam * lam <= N * g; ++lam) {
                if (std::gcd(uc, lam) != g || std::gcd(lam, ud) != 1) continue;
                T[lam * lam / g] += pw(g, b_uw) * pw(lam, -b_uz) * lam_factor(lam);
            }
            LocalProduct lp(N);
            for (u64 p : prime_divisors(uc / g))
                lp.mul(Local::constant(p, N, 1.0 - pw(p, gam - 1.0)) * Local::one_minus(p, N, pw(p, -b_k), 1).inverse());
            S = S + convolve(T, lp.series());
        }
        {
            const auto dt = divisor_table(N);
            CoeffSeries lhs(N);
            for (u64 t = 1; t <= N; ++t) {
                cplx acc = 0.0;
                for (u64 kk : dt[t]) {
                    if (std::gcd(kk, ud) != 1) continue;
                    const u64 f = t / kk;
                    cplx inner = 0.0;
                    for (u64 de : divisors(uc * kk)) {
                        const int mu = mobius(uc * kk / de);
                        if (mu) inner += static_cast<double>(mu) * pw(de, 1.0 - gam) * pw(std::gcd(f, de), gam);
                    }
                    acc += pw(kk, -b_k) * inner * pw(f, -b_vw);
                }
                lhs[t] = acc;
            }
            LocalProduct lp(N);
            for (u64 p : prime_divisors(ud))
                lp.mul(Local::one_minus(p, N, pw(p, -b_uw), 1) * Local::one_minus(p, N, pw(p, -b_k), 1).inverse());
            CoeffSeries rhs = mul({zeta_s(N, 1, b_vw), zeta_s(N, 1, b_uw), inv_zeta_s(N, 1, b_k), lp.series(), S});
            rhs *= pw(uc, 1.0 - gam);
            ctx.record("k-f sum", lhs, rhs);
        }
        {
            LocalProduct lp(N);
            for (u64 p : prime_divisors(uc * ud))
                lp.mul(Local::one_minus(p, N, pw(p, -b_uz), 2) * Local::one_minus(p, N, pw(p, -b_uv), 2).inverse());
            for (u64 p : prime_divisors(uc)) {
                int beta = 0;
                for (u64 m = uc; m % p == 0; m /= p) ++beta;
                const Local R =
                    Local::constant(p, N, 1.0 - pw(p, gam - 1.0)) * Local::one_minus(p, N, pw(p, -b_k), 1).inverse();
                Local sum = Local::constant(p, N, 0.0);
                for (int j = 0;; ++j) {
                    const int mj = std::min(beta, j);
                    if (2 * j - mj > sum.degree()) break;
                    Local term = Local::constant(p, N, 0.0);
                    term.add(2 * j - mj, pw(p, b_uw * static_cast<double>(mj)) * pw(p, -b_uz * static_cast<double>(j)) *
                                             (j > 0 ? 1.0 - pw(p, -gam) : cplx(1.0)));
                    if (beta - mj >= 1) term = term * R;
                    sum = sum + term;
                }
                lp.mul(sum);
            }
            ctx.record("lambda sum", S, mul({zeta_s(N, 2, b_uz), inv_zeta_s(N, 2, b_uv), lp.series()}));
        }
    }
}

void ramanujan_conv(Ctx& ctx) {
    const std::size_t N = ctx.N;
    const i64 c = ctx.i("c"), d = ctx.i("d"), c1 = ctx.i("c1"), l = ctx.i("l");
    const i64 cd = c * d;
    if (std::gcd(c, d) != 1 || !is_squarefree(static_cast<u64>(cd)) || cd % c1 || cd % l)
        throw InvalidParameters("RAMANUJAN_CONV: need c d square-free, (c, d) = 1, c1 | cd, l | cd");
    const i64 d1 = cd / c1;
    const i64 m = std::gcd(c1, c) * std::gcd(d1, d);
    const u64 Q = static_cast<u64>(cd);
    auto sig = [&](u64 n, cplx nu) { return sigma_complex(n, nu, Q); };
    auto sig_part = [&](u64 n, i64 mod, cplx nu) {
        u64 part = 1;
        for (u64 p : uprimes(mod)) part *= part_p(n, p);
        return sigma_complex(part, nu);
    };
    for (int k : ctx.draws()) {
        Draw rng(ctx, k);
        const double r = rng.uniform(-3.0, 3.0);
        const cplx alpha = rng.point(-0.8, 0.8, -2.0, 2.0);
        const cplx nu(0.0, 2.0 * r);
        const CoeffSeries zs = zeta_s(N, 1, 0.0);

        {
            CoeffSeries lhs(N);
            for (u64 n = 1; n <= N; ++n) lhs[n] = sig(n, -nu) * sig_part(n, l, -nu);
            LocalProduct lp(N);
            for (u64 p : uprimes(l)) lp.mul(Local::one_minus(p, N, pw(p, -nu), 1).inverse());
            ctx.record(lhs, mul({zs, zeta_s(N, 1, nu, Q), lp.series()}));
        }
        {
            CoeffSeries lhs(N);
            for (u64 n = 1; n <= N; ++n) {
                cplx v = sig(n, -nu);
                for (u64 p : uprimes(m)) v *= sigma_complex(part_p(n, p), -nu) * (1.0 - pw(p, -1.0 - nu)) - 1.0;
                lhs[n] = v;
            }
            LocalProduct lp(N);
            for (u64 p : uprimes(m))
                lp.mul(Local::one_minus(p, N, pw(p, -nu), 1).inverse() * Local::constant(p, N, 1.0 - pw(p, -1.0 - nu)) -
                       Local::constant(p, N, 1.0));
            ctx.record(lhs, mul({zs, zeta_s(N, 1, nu, Q), lp.series()}));
        }
        const CoeffSeries core = mul({zs, zeta_s(N, 1, -nu, Q), zeta_s(N, 1, -alpha), zeta_s(N, 1, -nu - alpha, Q),
                                      inv_zeta_s(N, 2, -nu - alpha, Q)});
        auto conv_local = [&](u64 p) {
            return Local::one_minus(p, N, pw(p, nu + alpha), 2) * Local::one_minus(p, N, pw(p, nu), 1).inverse() *
                   Local::one_minus(p, N, pw(p, nu + alpha), 1).inverse();
        };
        {
            CoeffSeries lhs(N);
            for (u64 n = 1; n <= N; ++n) lhs[n] = sig(n, nu) * sigma_complex(n, alpha) * sig_part(n, l, nu);
            LocalProduct lp(N);
            for (u64 p : uprimes(l)) lp.mul(conv_local(p));
            ctx.record(lhs, convolve(core, lp.series()));
        }
        {
            CoeffSeries lhs(N);
            for (u64 n = 1; n <= N; ++n) {
                cplx v = sig(n, nu) * sigma_complex(n, alpha);
                for (u64 p : uprimes(c1)) v *= sigma_complex(part_p(n, p), nu) * (1.0 - pw(p, nu - 1.0)) - 1.0;
                lhs[n] = v;
            }
            LocalProduct mid(N);
            for (u64 p : uprimes(c1))
                mid.mul(Local::constant(p, N, 1.0 - pw(p, nu - 1.0)) * conv_local(p) - Local::constant(p, N, 1.0));
            ctx.record(lhs, convolve(core, mid.series()));

            LocalProduct fin(N);
            for (u64 p : uprimes(cd)) fin.mul(Local::one_minus(p, N, pw(p, nu + alpha), 2).inverse());
            for (u64 p : uprimes(d1))
                fin.mul(Local::one_minus(p, N, pw(p, nu), 1) * Local::one_minus(p, N, pw(p, nu + alpha), 1));
            for (u64 p : uprimes(c1))
                fin.mul(Local::constant(p, N, 1.0 - pw(p, nu - 1.0)) * Local::one_minus(p, N, pw(p, nu + alpha), 2) -
                        Local::one_minus(p, N, pw(p, nu), 1) * Local::one_minus(p, N, pw(p, nu + alpha), 1));
            ctx.record(lhs, mul({zs, zeta_s(N, 1, -nu), zeta_s(N, 1, -alpha), zeta_s(N, 1, -nu - alpha),
                                 inv_zeta_s(N, 2, -nu - alpha), fin.series()}));
        }
    }
}

// z(s) Euler product for coprime c, d; X = p^{-s}.
void zs_euler(Ctx& ctx) {
    const std::size_t N = ctx.N;
    double literal_err = 0;
    for (int k : ctx.draws()) {
        Draw rng(ctx, k);
        i64 c = ctx.has("c") ? ctx.i("c") : 0, d = ctx.has("d") ? ctx.i("d") : 0;
        if (!c || !d) {
            do {
                c = rng.pick(2, 60);
                d = rng.pick(1, 60);
            } while (std::gcd(c, d) != 1);
        }
        if (std::gcd(c, d) != 1) throw InvalidParameters("ZS_EULER: c and d must be coprime");
        const u64 Q = static_cast<u64>(c * d);
        auto base = [&](u64 f) { return sigma_complex(f, 0.0, Q).real() / static_cast<double>(f); };
        CoeffSeries lhs(N), literal(N);
        for (u64 f = 1; f <= N; ++f) {
            double v = base(f), w = base(f);
            for (u64 p : uprimes(c)) {
                const double tp = static_cast<double>(num_divisors(part_p(f, p)));
                const double fac = tp * (1.0 - 1.0 / static_cast<double>(p)) - 1.0;
                w *= fac;
                if (f % p == 0) v *= fac;
            }
            lhs[f] = v;
            literal[f] = w;
        }
        LocalProduct lp(N);
        for (u64 p : uprimes(d)) lp.mul(Local::one_minus(p, N, 1.0 / static_cast<double>(p), 1));
        for (u64 p : uprimes(c)) {
            const double pd = static_cast<double>(p);
            Local f(p, N);
            f.add(1, -1.0 / pd - 2.0 / (pd * pd));
            f.add(2, 1.0 / (pd * pd) + 1.0 / (pd * pd * pd));
            lp.mul(f);
        }
        const CoeffSeries rhs = mul({zeta_s(N, 1, 1.0), zeta_s(N, 1, 1.0), lp.series()});
        ctx.record(lhs, rhs);
        literal_err = std::max(literal_err, compare(literal, rhs, ctx.tol).max_error);
    }
    ctx.notes.push_back("local factor read over p | (c, f); the product over all p | c misses by " +
                        std::to_string(literal_err));
}

void transform_rel(Ctx& ctx) {
    const auto g = WeightSpec::gaussian_t(ctx.r("T"));
    const cplx xi = ctx.c("xi");
    const double r = ctx.r("r");
    const FourTuple generic{cplx(0.6, 0.1), cplx(0.55, -0.05), cplx(0.5, 0.07), cplx(0.45, 0.02)};
    for (const FourTuple& p : {FourTuple::half(), generic})
        for (Sign sg : {Sign::PLUS, Sign::MINUS}) {
            ctx.record(std::abs(phi_pm(sg, xi, p, g, PhiMethod::DIRECT) - phi_pm(sg, xi, p, g, PhiMethod::VIA_XI)));
            const cplx pre = 0.5 * std::exp((1.0 + p.u - p.w) * std::log(2.0 * kPi));
            ctx.record(std::abs(g_bracket(sg, r, p, g) - pre * phi_pm(sg, cplx(0.0, r), p, g, PhiMethod::DIRECT)));
        }
    for (Sign sg : {Sign::PLUS, Sign::MINUS})
        ctx.record(std::abs(g_bracket_at_half(sg, r, g) - g_bracket(sg, r, FourTuple::half(), g)));
}

void moment_rearrange(Ctx& ctx) {
    const auto g = WeightSpec::gaussian_t(ctx.r("T"));
    const auto m = moment_quadrature(g, ctx.clist("coeffs"), ctx.r("height"), 1e-8);
    ctx.record(std::abs(m.difference()));
    ctx.notes.push_back("direct " + std::to_string(m.direct) + ", cutoff " + std::to_string(m.cutoff));
}

// Truncated quadruple sum against its dissection into J0 + J+ + J-.
void dissect_j(Ctx& ctx) {
    const auto g = WeightSpec::gaussian_t(ctx.r("T"));
    const i64 A = ctx.i("a"), B = ctx.i("b");
    if (std::gcd(A, B) != 1) throw InvalidParameters("DISSECT_J: a and b must be coprime");
    const int L = static_cast<int>(ctx.i("terms"));
    std::vector<double> lg(static_cast<std::size_t>(L) + 1);
    for (int k = 1; k <= L; ++k) lg[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k));
    const double T = g.T;
    auto gh = [&](double x) { return T * std::sqrt(kPi) * std::exp(-T * T * x * x / 4.0); };
    double loose_err = 0;
    for (int k : ctx.draws()) {
        Draw rng(ctx, k);
        const cplx u = rng.point(6.5, 7.5, -3, 3), v = rng.point(6.5, 7.5, -3, 3);
        const cplx w = rng.point(6.5, 7.5, -3, 3), z = rng.point(6.5, 7.5, -3, 3);
        auto powers = [&](cplx e) {
            std::vector<cplx> t(static_cast<std::size_t>(L) + 1);
            for (int n = 1; n <= L; ++n) t[static_cast<std::size_t>(n)] = pw(static_cast<u64>(n), -e);
            return t;
        };
        // mode 0: all terms, 1: c k m > d l n only. k is kept coprime to gk and l to gl.
        auto jsum = [&](i64 c, i64 d, i64 gk, i64 gl, cplx uu, cplx vv, cplx ww, cplx zz, int mode) {
            const auto pu = powers(uu), pv = powers(vv), pwv = powers(ww), pz = powers(zz);
            const double lcd = std::log(static_cast<double>(d)) - std::log(static_cast<double>(c));
            cplx s = 0.0;
            for (int kk = 1; kk <= L; ++kk)
                for (int l = 1; l <= L; ++l) {
                    if (std::gcd(c * kk, d * l) != 1 || std::gcd<i64>(kk, gk) != 1 || std::gcd<i64>(l, gl) != 1) continue;
                    cplx inner = 0.0;
                    for (int m = 1; m <= L; ++m)
                        for (int n = 1; n <= L; ++n) {
                            if (mode == 1 && c * kk * m <= d * l * n) continue;
                            inner += pwv[static_cast<std::size_t>(m)] * pz[static_cast<std::size_t>(n)] *
                                     gh(lcd + lg[static_cast<std::size_t>(l)] + lg[static_cast<std::size_t>(n)] -
                                        lg[static_cast<std::size_t>(kk)] - lg[static_cast<std::size_t>(m)]);
                        }
                    s += pu[static_cast<std::size_t>(kk)] * pv[static_cast<std::size_t>(l)] * inner;
                }
            return s;
        };
        // Diagonal ckm = dln in closed form; x = p^{-(u+z)} tracks k, y = p^{-(v+w)} tracks l.
        auto j0 = [&](i64 c, i64 d, i64 gk, i64 gl) {
            cplx r = gh(0.0) * pw(static_cast<u64>(c), -z) * pw(static_cast<u64>(d), -w) * zeta(w + z) * zeta(u + z) *
                     zeta(v + w) / zeta(u + v + w + z);
            const cplx U = u + v + w + z;
            for (u64 p : uprimes(c * d * gk * gl)) {
                const bool kfix = (d * gk) % static_cast<i64>(p) == 0, lfix = (c * gl) % static_cast<i64>(p) == 0;
                r /= 1.0 - pw(p, -U);
                if (kfix) r *= 1.0 - pw(p, -(u + z));
                if (lfix) r *= 1.0 - pw(p, -(v + w));
            }
            return r;
        };
        cplx total = 0.0;
        {
            const auto pu = powers(u), pv = powers(v), pwv = powers(w), pz = powers(z);
            const double lba = std::log(static_cast<double>(B)) - std::log(static_cast<double>(A));
            for (int kk = 1; kk <= L; ++kk)
                for (int l = 1; l <= L; ++l)
                    for (int m = 1; m <= L; ++m)
                        for (int n = 1; n <= L; ++n)
                            total += pu[static_cast<std::size_t>(kk)] * pv[static_cast<std::size_t>(l)] *
                                     pwv[static_cast<std::size_t>(m)] * pz[static_cast<std::size_t>(n)] *
                                     gh(lba + lg[static_cast<std::size_t>(l)] + lg[static_cast<std::size_t>(n)] -
                                        lg[static_cast<std::size_t>(kk)] - lg[static_cast<std::size_t>(m)]);
        }
        // strict: k coprime to a/c and l to b/d, as (k, l) = 1 forces; loose drops that.
        for (bool strict : {true, false}) {
            cplx split = 0.0;
            for (u64 c : udivisors(A))
                for (u64 d : udivisors(B)) {
                    const i64 ci = static_cast<i64>(c), di = static_cast<i64>(d);
                    const i64 gk = strict ? A / ci : 1, gl = strict ? B / di : 1;
                    const cplx jp = jsum(ci, di, gk, gl, u, v, w, z, 1);
                    const cplx jm = jsum(di, ci, gl, gk, v, u, z, w, 1);
                    const cplx sum3 = j0(ci, di, gk, gl) + jp + jm;
                    const double e = std::abs(jsum(ci, di, gk, gl, u, v, w, z, 0) - sum3);
                    if (strict) ctx.record("J = J0 + J+ + J-", e);
                    split += pw(c, v) * pw(d, u) * sum3;
                }
            split *= zeta(u + v) * pw(static_cast<u64>(A), -v) * pw(static_cast<u64>(B), -u);
            if (strict) ctx.record("quadruple sum", std::abs(total - split));
            else loose_err = std::max(loose_err, std::abs(total - split));
        }
    }
    ctx.notes.push_back("without the coprimality of k to a/c and l to b/d the split misses by " +
                        std::to_string(loose_err));
}

void hat_h_half(Ctx& ctx) {
    const auto h = WeightSpec::gaussian_kg(ctx.r("K"), ctx.r("G"));
    ctx.record(std::abs(hhat(0.5, h)));
    // hhat(-1/2) relative to its neighbourhood scale
    const double scale = std::max(1.0, std::abs(hhat(cplx(-0.5, 1.0), h)));
    ctx.record(std::abs(hhat(-0.5, h)) / scale);
}

void psi_at_one(Ctx& ctx) {
    const auto h = WeightSpec::gaussian_kg(ctx.r("K"), ctx.r("G"));
    const cplx at = psi_minus_regime(1.0, h);
    ctx.record(std::abs(at - psi_minus_above_one(1.0, h)));
    ctx.record(std::abs(at - psi_kernel(Sign::MINUS, 1.0, h)));
}

// ---------------------------------------------------------------- registry

struct Entry {
    IdentityInfo info;
    std::function<void(Ctx&)> run;
};

ParamSpec P(std::string name, ParamKind k, json def, std::string help) {
    return {std::move(name), k, std::move(def), std::move(help)};
}

const ParamSpec kDraw = P("draw", ParamKind::INT, nullptr, "run only this draw index");
const ParamSpec kDraws = P("draws", ParamKind::INT, 3, "number of seeded parameter draws");

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = [] {
        using K = ParamKind;
        std::vector<Entry> r;
        r.push_back({{"HURWITZ_SUM", "reduced-residue sum of Hurwitz zeta values against zeta(s) times a divisor sum",
                      {P("q", K::INT, nullptr, "modulus; default sweeps 2,3,6,12"),
                       P("m", K::INT, nullptr, "multiplier; default sweeps 1,2,5"),
                       P("s", K::COMPLEX, nullptr, "default sweeps 2.5+i, -0.7+3i, 0.3-2i")},
                      0, 1e-7},
                     hurwitz_sum});
        r.push_back({{"J0_EULER", "diagonal coprimality sum G_{c,d} and its divisor-weighted sum as Euler products",
                      {P("cd", K::INT, 6, "square-free product c d"), kDraw, kDraws}, 2048, 1e-8},
                     j0_euler});
        r.push_back({{"GCD_SUM", "gcd-twisted divisor sums and the lambda-sum as Euler products",
                      {P("c", K::INT, 12, ""), P("d", K::INT, 5, "coprime to c"), P("delta", K::INT, 12, ""),
                       P("n0", K::INT, 18, ""), kDraw, kDraws},
                      2048, 1e-8},
                     gcd_sum});
        r.push_back({{"RAMANUJAN_CONV", "twisted divisor-function products and their convolution with sigma_alpha",
                      {P("c", K::INT, 6, ""), P("d", K::INT, 5, "c d square-free, (c, d) = 1"),
                       P("c1", K::INT, 10, "divisor of c d"), P("l", K::INT, 6, "divisor of c d"), kDraw, kDraws},
                      2048, 1e-8},
                     ramanujan_conv});
        r.push_back({{"EISEN_PHI", "constant-term coefficient phi against its truncated modulus series",
                      {P("q", K::INT, nullptr, "default sweeps 1,2,3,6,10,15"), P("s", K::COMPLEX, json::array({1.6, 0.7}), "")},
                      100000, 1e-6},
                     eisen_phi_check});
        r.push_back({{"EISEN_EN", "n-th Eisenstein coefficient bracket against its truncated modulus series",
                      {P("q", K::INT, nullptr, "default sweeps 1,2,3,6,10,15"), P("s", K::COMPLEX, json::array({1.6, 0.7}), ""),
                       P("n", K::INT_LIST, json::array({1, 6, -10}), "frequencies")},
                      3000, 1e-6},
                     eisen_en_check});
        r.push_back({{"EISEN_EN_BRACKET", "Ramanujan-sum Dirichlet series over admissible moduli as an Euler product",
                      {P("q", K::INT, nullptr, "square-free level; default drawn"), P("n", K::INT, nullptr, "default drawn"),
                       kDraw, kDraws},
                      2048, 1e-8},
                     eisen_en_bracket});
        r.push_back({{"XY_CLOSED", "X and Y continuous-spectrum factors, divisor-sum against product form",
                      {P("cd", K::INT_LIST, json::array({1, 6, 10, 15}), ""), P("ab", K::INT_LIST, json::array({1, 6}), ""),
                       P("r", K::REAL_LIST, json::array({0.5, 1.3}), "")},
                      0, 1e-10},
                     xy_closed});
        r.push_back({{"ZS_EULER", "z(s) divisor series against its Euler product",
                      {P("c", K::INT, nullptr, "default drawn"), P("d", K::INT, nullptr, "coprime to c; default drawn"), kDraw,
                       kDraws},
                      2048, 1e-8},
                     zs_euler});
        r.push_back({{"KLOOSTERMAN_CLOSED", "closed form of cusp-pair Kloosterman sums against brute force, SHIFTED",
                      {P("q", K::INT, nullptr, "square-free; default sweeps 1..30"), P("rmax", K::INT, 8, ""),
                       P("freqs", K::INT_LIST, json::array({-2, -1, 1, 2, 3}), "values of m and n")},
                      0, 1e-8},
                     kloosterman_closed});
        r.push_back({{"KLOOSTERMAN_SPECIAL", "cusp pair (1/cd, 1/c) reduces to an ordinary Kloosterman sum",
                      {P("c", K::INT, nullptr, "default sweeps six pairs"), P("d", K::INT, nullptr, ""), P("rmax", K::INT, 8, ""),
                       P("freqs", K::INT_LIST, json::array({-2, -1, 1, 2, 3}), "")},
                      0, 1e-8},
                     kloosterman_special});
        r.push_back({{"KLOOSTERMAN_FACT", "local times ordinary factorization against PLAIN brute force",
                      {P("q", K::INT, nullptr, "default sweeps 4,8,9,12"), P("cmax", K::INT, 36, ""),
                       P("freqs", K::INT_LIST, json::array({-1, 1, 2}), "")},
                      0, 1e-8},
                     kloosterman_fact});
        r.push_back({{"DOUBLE_COSET", "bounded two-sided inclusion of the double-coset pattern; error counts violations",
                      {P("q", K::INT, nullptr, "default sweeps 6,10,15,30"), P("box", K::INT, 20, "entry bound")}, 0, 0.0},
                     double_coset});
        r.push_back({{"SCATTER_UNITARY", "scattering matrix S(s) S(1-s) = I at seeded points",
                      {P("q", K::INT, nullptr, "default sweeps square-free q <= qmax"), P("qmax", K::INT, 15, ""),
                       P("points", K::INT, 5, "")},
                      0, 1e-8},
                     scatter_unitary});
        r.push_back({{"TRANSFORM_REL", "Phi direct against via-Xi, bracket against Phi, bracket at 1/2 from Xi",
                      {P("T", K::REAL, 1.0, ""), P("xi", K::COMPLEX, json::array({0.0, 0.4}), ""), P("r", K::REAL, 1.0, "")},
                      0, 1e-7},
                     transform_rel});
        r.push_back({{"MOMENT_REARRANGE", "weighted fourth moment by direct quadrature and by rearrangement",
                      {P("T", K::REAL, 3.0, ""), P("coeffs", K::COMPLEX_LIST, json::array({1, 1}), "A(s) coefficients"),
                       P("height", K::REAL, 400.0, "")},
                      0, 1e-6},
                     moment_rearrange});
        r.push_back({{"DISSECT_J", "truncated quadruple sum against the J0 + J+ + J- dissection",
                      {P("a", K::INT, 2, ""), P("b", K::INT, 3, "coprime to a"), P("T", K::REAL, 1.0, ""),
                       P("terms", K::INT, 40, "truncation of each variable"), kDraw, kDraws},
                      0, 1e-8},
                     dissect_j});
        r.push_back({{"HAT_H_HALF", "hhat vanishes at s = 1/2 and s = -1/2",
                      {P("K", K::REAL, 30.0, ""), P("G", K::REAL, 5.0, "")}, 0, 1e-9},
                     hat_h_half});
        r.push_back({{"PSI_AT_ONE", "Psi_- at x = 1: closed form, limit from above and contour integral",
                      {P("K", K::REAL, 1.0, ""), P("G", K::REAL, 1.0, "")}, 0, 1e-5},
                     psi_at_one});
        return r;
    }();
    return reg;
}

} // namespace

json VerificationReport::to_json() const {
    json j;
    j["id"] = id;
    j["params"] = params;
    j["N"] = N;
    j["tol"] = tol;
    j["max_abs_error"] = std::isnan(max_abs_error) ? json(nullptr) : json(max_abs_error);
    j["pass"] = pass;
    j["seed"] = seed;
    j["wall_ms"] = wall_ms;
    j["notes"] = notes;
    return j;
}

const std::vector<IdentityInfo>& list_identities() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

VerificationReport verify(const std::string& id, const json& params, std::uint64_t seed) {
    const Entry* entry = nullptr;
    for (const auto& e : registry())
        if (e.info.id == id) entry = &e;
    if (!entry) throw UnknownIdentity("unknown identity: " + id);
    if (!params.is_null() && !params.is_object()) throw InvalidParameters(id + ": parameters must be an object");

    Ctx ctx;
    ctx.id = id;
    ctx.seed = seed;
    ctx.N = static_cast<std::size_t>(entry->info.default_N);
    ctx.tol = entry->info.default_tol;
    ctx.params = json::object();
    for (const auto& ps : entry->info.schema) ctx.params[ps.name] = ps.default_value;
    if (params.is_object()) {
        for (const auto& [k, val] : params.items()) {
            if (k == "N") {
                if (!val.is_number_integer() || val.get<i64>() < 1) throw InvalidParameters(id + ": N must be a positive integer");
                ctx.N = static_cast<std::size_t>(val.get<i64>());
                continue;
            }
            if (k == "tol") {
                if (!val.is_number() || val.get<double>() < 0) throw InvalidParameters(id + ": tol must be a non-negative number");
                ctx.tol = val.get<double>();
                continue;
            }
            auto it = std::find_if(entry->info.schema.begin(), entry->info.schema.end(),
                                   [&](const ParamSpec& ps) { return ps.name == k; });
            if (it == entry->info.schema.end()) throw InvalidParameters(id + ": unknown parameter '" + k + "'");
            if (!val.is_null() && !kind_matches(it->kind, val))
                throw InvalidParameters(id + ": parameter '" + k + "' has the wrong type");
            ctx.params[k] = val;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        entry->run(ctx);
    } catch (const InvalidParameters&) {
        throw;
    } catch (const std::exception& e) {
        // Mathematical preconditions reached through parameters surface as schema errors.
        if (dynamic_cast<const Error*>(&e) && (dynamic_cast<const InvalidModulus*>(&e) || dynamic_cast<const ConventionUnavailable*>(&e)))
            throw InvalidParameters(id + ": " + e.what());
        throw;
    }
    const auto t1 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.id = id;
    rep.params = ctx.params;
    rep.N = static_cast<std::int64_t>(ctx.N);
    rep.tol = ctx.tol;
    rep.max_abs_error = ctx.nan ? std::numeric_limits<double>::quiet_NaN() : ctx.err;
    rep.pass = !ctx.nan && ctx.err <= ctx.tol;
    rep.seed = seed;
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.notes = std::move(ctx.notes);
    for (const auto& [part, e] : ctx.parts) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s: %.3e", part.c_str(), e);
        rep.notes.emplace_back(buf);
    }
    return rep;
}

} // namespace heckekit
