// Copyright 2026 The mw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef MW_VERIFY_SUITES_HPP
#define MW_VERIFY_SUITES_HPP

#include <mw/core/arith.hpp>
#include <mw/core/rng.hpp>
#include <mw/derham/bta.hpp>
#include <mw/derham/forms.hpp>
#include <mw/derham/spec.hpp>
#include <mw/derham/validate.hpp>
#include <mw/ff/embed.hpp>
#include <mw/ff/maps.hpp>
#include <mw/kato/asw.hpp>
#include <mw/kato/presentation.hpp>
#include <mw/mackey/certify.hpp>
#include <mw/mackey/maps.hpp>
#include <mw/mackey/sample.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/decompose.hpp>
#include <mw/witt/maps.hpp>

#include <cstdint>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

// Property suites shared by the command-line tool and the acceptance runner.
// Every suite is a pure function of its seed.
namespace mw::verify {

struct Check {
    std::string name;
    std::string statement;
    bool passed = true;
    std::uint64_t instances = 0;
    std::uint64_t minimum = 1;
    std::string detail; // first failure
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const
    {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
    Check *find(const std::string &name)
    {
        for (auto &c : checks) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }
};

class Recorder
{
public:
    Recorder(SuiteReport &rep, std::string name, std::string statement, std::uint64_t minimum = 1)
        : m_rep(rep), m_index(rep.checks.size())
    {
        Check c;
        c.name = std::move(name);
        c.statement = std::move(statement);
        c.minimum = minimum;
        rep.checks.push_back(std::move(c));
    }
    Recorder(const Recorder &) = delete;
    ~Recorder()
    {
        auto &c = check();
        if (c.passed && c.instances < c.minimum) {
            c.passed = false;
            c.detail = "only " + std::to_string(c.instances) + " instances, need " + std::to_string(c.minimum);
        }
    }

    // body() returns whether the property held; exceptions count as failures.
    template <class Body, class Ctx>
    bool instance(Body &&body, Ctx &&ctx)
    {
        ++check().instances;
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception &e) {
            why = e.what();
        }
        if (!ok) {
            fail(why.empty() ? std::string(ctx()) : std::string(ctx()) + ": " + why);
        }
        return ok;
    }

    void fail(const std::string &msg)
    {
        auto &c = check();
        if (c.passed) {
            c.passed = false;
            c.detail = msg;
        }
    }

private:
    Check &check()
    {
        return m_rep.checks[m_index];
    }
    SuiteReport &m_rep;
    std::size_t m_index;
};

namespace detail {

template <class V>
std::string join(const V &v)
{
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto &x : v) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ']';
    return os.str();
}

inline std::uint64_t salt(const std::string &s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return h;
}

inline Rng suite_rng(std::uint64_t seed, const std::string &suite)
{
    return Rng(seed ^ salt(suite));
}

// One field per order q <= max_q, up to F_16.
inline std::vector<ff::FieldRef> fields_up_to(std::uint64_t max_q)
{
    return mackey::small_fields(max_q);
}

inline bool pow_at_most(std::uint64_t q, std::size_t e, std::uint64_t cap)
{
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < e; ++i) {
        acc *= q;
        if (acc > cap) {
            return false;
        }
    }
    return true;
}

template <class W>
bool ring_axioms(const W &R, const typename W::Vector &a, const typename W::Vector &b, const typename W::Vector &c)
{
    return R.eq(R.add(a, b), R.add(b, a)) && R.eq(R.mul(a, b), R.mul(b, a)) &&
           R.eq(R.add(R.add(a, b), c), R.add(a, R.add(b, c))) &&
           R.eq(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c))) &&
           R.eq(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c))) && R.is_zero(R.add(a, R.neg(a))) &&
           R.eq(R.add(a, R.zero()), a) && R.eq(R.mul(a, R.one()), a);
}

} // namespace detail

// Ring axioms on W_S(F_q) and W_S(Z) for every S with |S| <= 5 inside
// {1..12}; ghost is a ring homomorphism over Z.
inline SuiteReport suite_witt(std::uint64_t seed)
{
    SuiteReport rep{"witt", {}};
    auto rng = detail::suite_rng(seed, rep.suite);
    const auto sets = trunc::all_truncation_sets(12, 5);
    const auto fields = detail::fields_up_to(9);
    {
        Recorder rec(rep, "ring_axioms", "witt-ring-laws", 1000);
        for (const auto &S : sets) {
            for (const auto &f : fields) {
                const witt::FieldWitt W(S, f);
                for (int i = 0; i < 3; ++i) {
                    const auto a = W.random(rng), b = W.random(rng), c = W.random(rng);
                    rec.instance([&] { return detail::ring_axioms(W, a, b, c); },
                                 [&] { return "S=" + S.to_string() + " k=" + f->spec() + " a=" + detail::join(a); });
                }
            }
            const witt::IntWitt WZ(S, witt::integers());
            for (int i = 0; i < 3; ++i) {
                std::vector<witt::IntWitt::Vector> t(3, witt::IntWitt::Vector(S.size()));
                for (auto &v : t) {
                    for (auto &x : v) {
                        x = rng.range(-3, 3);
                    }
                }
                rec.instance([&] { return detail::ring_axioms(WZ, t[0], t[1], t[2]); },
                             [&] { return "S=" + S.to_string() + " over Z a=" + detail::join(t[0]); });
            }
        }
    }
    {
        Recorder rec(rep, "ghost_homomorphism", "witt-ghost", 300);
        for (const auto &S : sets) {
            const witt::IntWitt W(S, witt::integers());
            for (int i = 0; i < 5; ++i) {
                witt::IntWitt::Vector a(S.size()), b(S.size());
                for (std::size_t j = 0; j < S.size(); ++j) {
                    a[j] = rng.range(-4, 4);
                    b[j] = rng.range(-4, 4);
                }
                rec.instance(
                    [&] {
                        const auto ga = witt::ghost(W, a), gb = witt::ghost(W, b);
                        const auto gs = witt::ghost(W, W.add(a, b)), gp = witt::ghost(W, W.mul(a, b));
                        const auto g1 = witt::ghost(W, W.one());
                        for (std::size_t k = 0; k < S.size(); ++k) {
                            if (gs[k] != ga[k] + gb[k] || gp[k] != ga[k] * gb[k] || g1[k] != 1) {
                                return false;
                            }
                        }
                        return true;
                    },
                    [&] { return "S=" + S.to_string() + " a=" + detail::join(a) + " b=" + detail::join(b); });
            }
        }
    }
    return rep;
}

// Exhaustive structure-map identities on W_S(F_q) with q^|S| <= 4096.
inline SuiteReport suite_maps(std::uint64_t /*seed*/)
{
    SuiteReport rep{"maps", {}};
    const auto fields = detail::fields_up_to(16);
    const auto sets = trunc::all_truncation_sets(12, 12);
    Recorder teich(rep, "teichmuller_multiplicative", "witt-structure-maps", 20);
    Recorder fv(rep, "frobenius_verschiebung", "witt-structure-maps", 20);
    Recorder rv(rep, "restriction_commutes", "witt-structure-maps", 20);
    for (const auto &f : fields) {
        for (const auto &S : sets) {
            if (!detail::pow_at_most(f->order(), S.size(), 4096)) {
                continue;
            }
            const witt::FieldWitt W(S, f);
            const auto ctx = [&] { return "S=" + S.to_string() + " k=" + f->spec(); };
            teich.instance(
                [&] {
                    for (ff::Elem a = 0; a < f->order(); ++a) {
                        for (ff::Elem b = 0; b < f->order(); ++b) {
                            if (!W.eq(W.mul(W.teichmuller(a), W.teichmuller(b)), W.teichmuller(f->mul(a, b)))) {
                                return false;
                            }
                        }
                    }
                    return true;
                },
                ctx);
            std::optional<trunc::TruncationSet> Sp;
            if (S.size() > 1) {
                Sp = trunc::TruncationSet::validate({S.elements().begin(), S.elements().end() - 1});
            }
            for (auto n : S.elements()) {
                const auto T = *trunc::quotient(S, n);
                const witt::FieldWitt WT(T, f);
                const auto nctx = [&] { return ctx() + " n=" + std::to_string(n); };
                fv.instance(
                    [&] {
                        for (std::uint64_t i = 0; i < WT.cardinality(); ++i) {
                            const auto y = WT.at(i);
                            if (!WT.eq(witt::frobenius_n(W, n, witt::verschiebung(W, n, y)), WT.scale(Int(n), y))) {
                                return false;
                            }
                        }
                        return true;
                    },
                    nctx);
                if (!Sp) {
                    continue;
                }
                const auto Tp = trunc::quotient(*Sp, n);
                if (!Tp) {
                    continue;
                }
                const witt::FieldWitt WSp(*Sp, f);
                rv.instance(
                    [&] {
                        for (std::uint64_t i = 0; i < W.cardinality(); ++i) {
                            const auto x = W.at(i);
                            if (witt::restrict_to(WT, *Tp, witt::frobenius_n(W, n, x)) !=
                                witt::frobenius_n(WSp, n, witt::restrict_to(W, *Sp, x))) {
                                return false;
                            }
                        }
                        for (std::uint64_t i = 0; i < WT.cardinality(); ++i) {
                            const auto y = WT.at(i);
                            if (witt::restrict_to(W, *Sp, witt::verschiebung(W, n, y)) !=
                                witt::verschiebung(WSp, n, witt::restrict_to(WT, *Tp, y))) {
                                return false;
                            }
                        }
                        return true;
                    },
                    nctx);
            }
        }
    }
    return rep;
}

struct GridPoint {
    std::uint64_t p;
    unsigned d, r;
};

// p in {2,3,5}, d <= 3, r <= 3, q^r <= 4096.
inline std::vector<GridPoint> asw_grid()
{
    std::vector<GridPoint> out;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 3; ++d) {
            for (unsigned r = 1; r <= 3; ++r) {
                if (detail::pow_at_most(p, static_cast<std::size_t>(d) * r, 4096)) {
                    out.push_back({p, d, r});
                }
            }
        }
    }
    return out;
}

inline kato::Bounds grid_bounds()
{
    return kato::Bounds{4096, 124, 3};
}

inline std::string grid_name(const GridPoint &g)
{
    return "p=" + std::to_string(g.p) + " d=" + std::to_string(g.d) + " r=" + std::to_string(g.r);
}

inline SuiteReport suite_asw(std::uint64_t /*seed*/)
{
    SuiteReport rep{"asw", {}};
    Recorder rec(rep, "cokernel_cyclic", "asw-cokernel", 15);
    for (const auto &g : asw_grid()) {
        const auto k = ff::make_field(g.p, {g.d});
        rec.instance(
            [&] {
                return kato::asw_cokernel(k, g.r, 4096).invariants() == std::vector<Int>{Int(ipow(g.p, g.r))};
            },
            [&] { return grid_name(g); });
    }
    return rep;
}

inline SuiteReport suite_kato(std::uint64_t /*seed*/)
{
    SuiteReport rep{"kato", {}};
    Recorder one(rep, "degree_one", "kato-bijection", 15);
    Recorder high(rep, "higher_degrees_vanish", "kato-bijection-perfect", 30);
    for (const auto &g : asw_grid()) {
        const auto k = ff::make_field(g.p, {g.d});
        one.instance(
            [&] {
                const auto inv = kato::invariants(k, g.r, 1, grid_bounds());
                return inv == std::vector<Int>{Int(ipow(g.p, g.r))} &&
                       inv == kato::asw_cokernel(k, g.r, 4096).invariants();
            },
            [&] { return grid_name(g); });
        for (unsigned n : {2u, 3u}) {
            high.instance([&] { return kato::invariants(k, g.r, n, grid_bounds()).empty(); },
                          [&] { return grid_name(g) + " n=" + std::to_string(n); });
        }
    }
    return rep;
}

inline std::vector<trunc::TruncationSet> dec_sets()
{
    std::vector<trunc::TruncationSet> out;
    for (const auto &e : std::vector<std::vector<std::uint64_t>>{{1, 2}, {1, 3}, {1, 2, 3, 6}, {1, 2, 4}, {1, 2, 3, 4, 6, 12}}) {
        out.push_back(trunc::TruncationSet::validate(e));
    }
    return out;
}

inline SuiteReport suite_dec(std::uint64_t /*seed*/)
{
    SuiteReport rep{"dec", {}};
    Recorder bij(rep, "bijective", "witt-decomposition", 10);
    Recorder hom(rep, "ring_homomorphism", "witt-decomposition", 10);
    Recorder decm(rep, "decm_check", "kato-decomposition", 20);
    for (std::uint64_t p : {2u, 3u}) {
        const auto k = ff::Field::prime(p);
        for (const auto &S : dec_sets()) {
            const auto ctx = [&] { return "S=" + S.to_string() + " p=" + std::to_string(p); };
            const witt::FieldWitt W(S, k);
            witt::Decomposition D(W);
            bij.instance(
                [&] {
                    if (!D.build_inverse(65536)) {
                        return false;
                    }
                    for (std::uint64_t i = 0; i < W.cardinality(); ++i) {
                        if (D.recombine(D.decompose(W.at(i))) != W.at(i)) {
                            return false;
                        }
                    }
                    return true;
                },
                ctx);
            hom.instance(
                [&] {
                    const auto N = W.cardinality();
                    std::vector<std::vector<witt::FieldWitt::Vector>> dec(N);
                    for (std::uint64_t i = 0; i < N; ++i) {
                        dec[i] = D.decompose(W.at(i));
                    }
                    const auto &parts = D.parts();
                    const auto one = D.decompose(W.one());
                    for (std::size_t c = 0; c < parts.size(); ++c) {
                        if (one[c] != parts[c].one()) {
                            return false;
                        }
                    }
                    for (std::uint64_t i = 0; i < N; ++i) {
                        const auto x = W.at(i);
                        for (std::uint64_t j = i; j < N; ++j) {
                            const auto y = W.at(j);
                            const auto &ds = dec[W.index(W.add(x, y))];
                            const auto &dp = dec[W.index(W.mul(x, y))];
                            for (std::size_t c = 0; c < parts.size(); ++c) {
                                if (ds[c] != parts[c].add(dec[i][c], dec[j][c]) ||
                                    dp[c] != parts[c].mul(dec[i][c], dec[j][c])) {
                                    return false;
                                }
                            }
                        }
                    }
                    return true;
                },
                ctx);
            for (unsigned n : {1u, 2u}) {
                decm.instance([&] { return kato::decm_check(S, k, n, grid_bounds()).ok; },
                              [&] { return ctx() + " n=" + std::to_string(n); });
            }
        }
    }
    return rep;
}

// Generated certificates, grouped by generator. Used by the certificates
// suite and by the fuzzing harness in the tests.
struct CertificateSample {
    std::string generator;
    mackey::Certificate cert;
};

inline std::vector<CertificateSample> certificate_samples(std::uint64_t seed, std::size_t per_kind = 200)
{
    using namespace mackey;
    auto rng = detail::suite_rng(seed, "certificates");
    const auto fields = detail::fields_up_to(16);
    std::vector<CertificateSample> out;
    std::size_t same = 0, other = 0;
    for (std::uint64_t i = 0; same < per_kind || other < per_kind; ++i) {
        const auto k = fields[rng.below(fields.size())];
        const auto K = random_extension(k, rng, 16);
        const bool want_same = same < per_kind && (other >= per_kind || rng.coin());
        const std::uint64_t p = K->characteristic();
        std::uint64_t l = p;
        if (!want_same) {
            do {
                l = std::vector<std::uint64_t>{2, 3, 5, 7}[rng.below(4)];
            } while (l == p);
        }
        if (K->order() == 2) {
            // F_2 has no unit other than 1.
            continue;
        }
        Elem a;
        do {
            a = K->random_unit(rng);
        } while (a == 1);
        std::vector<Elem> others;
        if (rng.coin()) {
            others.push_back(K->random_unit(rng));
        }
        out.push_back({l == p ? "steinberg_l_eq_p" : "steinberg_l_ne_p", steinberg_certificate(k, K, a, l, others, i)});
        (l == p ? same : other)++;
    }
    for (std::size_t i = 0; i < per_kind; ++i) {
        const auto k = fields[rng.below(fields.size())];
        const auto K = random_extension(k, rng, 16);
        const unsigned r = 1 + static_cast<unsigned>(rng.below(2));
        const unsigned n = 2 + static_cast<unsigned>(rng.below(2));
        std::vector<Elem> others;
        for (unsigned j = 2; j < n; ++j) {
            others.push_back(K->random_unit(rng));
        }
        out.push_back({"as_vanishing", as_vanishing_certificate(k, K, r, K->random(rng), others, i)});
    }
    for (std::size_t i = 0; i < per_kind; ++i) {
        const auto k = fields[rng.below(fields.size())];
        const unsigned r = 1 + static_cast<unsigned>(rng.below(2));
        const unsigned n = 2 + static_cast<unsigned>(rng.below(2));
        out.push_back({"perfect_vanishing", perfect_vanishing_certificate(random_term(k, r, n, rng, 3, 256))});
    }
    return out;
}

inline SuiteReport suite_certificates(std::uint64_t seed)
{
    SuiteReport rep{"certificates", {}};
    const auto samples = certificate_samples(seed);
    for (const char *gen : {"steinberg_l_eq_p", "steinberg_l_ne_p", "as_vanishing", "perfect_vanishing"}) {
        Recorder rec(rep, gen, std::string(gen).rfind("steinberg", 0) == 0 ? "milnor-steinberg" : "mackey-vanishing", 200);
        std::size_t idx = 0;
        for (const auto &s : samples) {
            if (s.generator != gen) {
                continue;
            }
            ++idx;
            rec.instance(
                [&] {
                    const auto v = mackey::verify_certificate(s.cert);
                    return v.ok && v.final_term.empty();
                },
                [&] { return std::string(gen) + " #" + std::to_string(idx); });
        }
    }
    return rep;
}

inline SuiteReport suite_tmap(std::uint64_t seed)
{
    using namespace mackey;
    SuiteReport rep{"tmap", {}};
    auto rng = detail::suite_rng(seed, rep.suite);
    const auto fields = detail::fields_up_to(16);
    Recorder tpf(rep, "t_pf_invariant", "t-well-defined", 200);
    Recorder ppf(rep, "pi_pf_invariant", "pi-well-defined", 200);
    Recorder twp(rep, "t_kills_wp", "t-well-defined", 200);
    std::size_t count = 0;
    while (count < 200) {
        const auto k = fields[rng.below(fields.size())];
        const unsigned r = 1 + static_cast<unsigned>(rng.below(2));
        if (ipow(k->order(), r) > 256) {
            continue;
        }
        ++count;
        const unsigned n = 1 + static_cast<unsigned>(rng.below(2));
        const auto pw = random_pf_pair(k, r, n, rng, 64);
        tpf.instance([&] { return t_map(pw.before) == t_map(pw.after); },
                     [&] { return "k=" + k->spec() + " r=" + std::to_string(r) + " n=" + std::to_string(n); });
        const unsigned m = 1 + static_cast<unsigned>(rng.below(2));
        const auto pg = random_pf_pair(k, 0, m, rng, 64);
        ppf.instance([&] { return pi_map(pg.before, 0) == pi_map(pg.after, 0); },
                     [&] { return "k=" + k->spec() + " n=" + std::to_string(m); });
        const auto w = random_term(k, r, 1, rng, 3, 64);
        twp.instance([&] { return t_map(wp_term(w)).is_zero(); },
                     [&] { return "k=" + k->spec() + " r=" + std::to_string(r); });
    }
    return rep;
}

inline const std::vector<std::string> &ntr_fields()
{
    static const std::vector<std::string> specs{
        "GF(3)(t)[y]/(y^2 - t)", "GF(3)(t)[y]/(y^3 - y - t)", "GF(5)(t)[y]/(y^2 - t)",
        "GF(5)(t)[y]/(y^3 - t)", "GF(2)(t)[u]/(u^2 - t)",     "GF(3)(t)[u]/(u^3 - t)"};
    return specs;
}

inline SuiteReport suite_ntr(std::uint64_t seed)
{
    using namespace derham;
    SuiteReport rep{"ntr", {}};
    auto rng = detail::suite_rng(seed, rep.suite);
    for (const auto &s : ntr_fields()) {
        const auto L = parse_funfield(s);
        Recorder rec(rep, "ntr " + s, "norm-trace-compat", 100);
        for (int i = 0; i < 100; ++i) {
            const auto beta = L.random_unit(rng, 2);
            rec.instance([&] { return verify_ntr(L, beta).ok; },
                         [&] { return s + " beta=" + L.to_string(beta); });
        }
    }
    const std::vector<std::string> insep{"GF(2)(t)[u]/(u^2 - t)", "GF(3)(t)[u]/(u^3 - t)",
                                         "GF(3)(t)[u]/(u^3 - t^2 - t)", "GF(4)(t)[u]/(u^2 - x1*t)"};
    Recorder lin(rep, "insep_linearity", "inseparable-trace", 100);
    Recorder res(rep, "insep_trace_of_restriction", "inseparable-trace", 100);
    Recorder dd(rep, "insep_commutes_with_d", "inseparable-trace", 100);
    Recorder nt(rep, "insep_ntr", "inseparable-trace", 100);
    for (const auto &s : insep) {
        const auto L = parse_funfield(s);
        for (int i = 0; i < 30; ++i) {
            lin.instance([&] { return check_trace_linearity(L, rng, 2); }, [&] { return s; });
            res.instance([&] { return check_trace_of_restriction(L, rng, 2); }, [&] { return s; });
            dd.instance([&] { return check_trace_d(L, rng, 2); }, [&] { return s; });
            nt.instance([&] { return check_ntr(L, rng, 2); }, [&] { return s; });
        }
    }
    Recorder tower(rep, "insep_transitivity", "inseparable-trace", 50);
    std::size_t nonzero = 0;
    for (std::uint64_t p : {2u, 3u}) {
        const auto k = ff::Field::prime(p);
        const auto F = FunField::rational(k, "u");
        for (const FPoly &h : {FPoly{0, 1, 1}, FPoly{1, 1, 0, 1}, FPoly{0, 2 % p, 1}}) {
            if (poly::derivative(*k, h).empty()) {
                continue;
            }
            for (int i = 0; i < 20; ++i) {
                const Rat f = F.base().random(rng, 3);
                tower.instance(
                    [&] {
                        const auto [a, b] = mixed_tower_traces(k, h, f);
                        nonzero += !F.base().is_zero(a);
                        return a == b;
                    },
                    [&] { return "p=" + std::to_string(p) + " f=" + F.base().to_string(f); });
            }
        }
    }
    if (nonzero == 0) {
        tower.fail("every tower trace vanished");
    }
    return rep;
}

inline SuiteReport suite_cartier(std::uint64_t seed)
{
    using namespace derham;
    SuiteReport rep{"cartier", {}};
    auto rng = detail::suite_rng(seed, rep.suite);
    const auto fields = detail::fields_up_to(9);
    Recorder cd(rep, "cartier_kills_exact", "cartier", 500);
    Recorder dl(rep, "cartier_fixes_dlog", "cartier", 100);
    Recorder nt(rep, "dlog_t_not_exact", "cartier", static_cast<std::uint64_t>(fields.size()));
    for (const auto &k : fields) {
        const auto F = FunField::rational(k);
        for (int i = 0; i < 80; ++i) {
            const auto f = F.random(rng, 4);
            cd.instance(
                [&] {
                    const auto w = d(F, f);
                    return is_zero(F, cartier(F, w)) && is_exact(F, w);
                },
                [&] { return k->spec() + " f=" + F.to_string(f); });
        }
        for (int i = 0; i < 20; ++i) {
            const auto u = F.random_unit(rng, 3);
            dl.instance([&] { return cartier(F, dlog(F, u)) == dlog(F, u); },
                        [&] { return k->spec() + " u=" + F.to_string(u); });
        }
        nt.instance([&] { return !is_exact(F, dlog(F, F.t())); }, [&] { return k->spec(); });
    }
    return rep;
}

// res_{K'/K} tr_{L/K} = sum over L (x)_K K' = prod L'_i of tr_{L'_i/K'} res,
// for G_m (norm) and W_r (Witt trace).
inline SuiteReport suite_mackey_square(std::uint64_t seed)
{
    SuiteReport rep{"mackey", {}};
    auto rng = detail::suite_rng(seed, rep.suite);
    Recorder gm(rep, "units", "mackey-square", 100);
    Recorder wr(rep, "witt_vectors", "mackey-square", 100);
    for (std::uint64_t p : {2u, 3u}) {
        const auto Fp = ff::Field::prime(p);
        for (unsigned e = 1; e <= 4; ++e) {
            const auto K = e == 1 ? Fp : ff::extend_by_degree(Fp, e, 0);
            for (unsigned a = 1; a * e <= 4; ++a) {
                const auto L = a == 1 ? K : ff::extend_by_degree(K, a, 1);
                for (unsigned b = 1; b * e <= 4; ++b) {
                    const auto Kp = b == 1 ? K : ff::extend_by_degree(K, b, 2);
                    const auto comps = ff::tensor_decompose(L, Kp, K);
                    const auto incl = ff::Embedding::inclusion(K, Kp);
                    const auto ctx = [&] {
                        return "K=" + K->spec() + " L=" + L->spec() + " K'=" + Kp->spec();
                    };
                    for (int i = 0; i < 6; ++i) {
                        const ff::Elem x = L->random_unit(rng);
                        gm.instance(
                            [&] {
                                const ff::Elem lhs = incl(ff::norm(*L, *K, x));
                                ff::Elem rhs = 1;
                                for (const auto &c : comps) {
                                    const ff::Elem nc = ff::norm(*c.field, *Kp, c.from_l(x));
                                    for (unsigned m = 0; m < c.multiplicity; ++m) {
                                        rhs = Kp->mul(rhs, nc);
                                    }
                                }
                                return lhs == rhs;
                            },
                            ctx);
                    }
                    for (unsigned r : {1u, 2u}) {
                        const auto P = trunc::p_typical(p, r);
                        const witt::FieldWitt WL(P, L), WK(P, K), WKp(P, Kp);
                        for (int i = 0; i < 3; ++i) {
                            const auto x = WL.random(rng);
                            wr.instance(
                                [&] {
                                    const auto lhs = witt::witt_map(incl, witt::witt_trace(WL, WK, x));
                                    auto rhs = WKp.zero();
                                    for (const auto &c : comps) {
                                        const witt::FieldWitt WLi(P, c.field);
                                        const auto t = witt::witt_trace(WLi, WKp, witt::witt_map(c.from_l, x));
                                        rhs = WKp.add(rhs, WKp.scale(Int(c.multiplicity), t));
                                    }
                                    return lhs == rhs;
                                },
                                [&] { return ctx() + " r=" + std::to_string(r); });
                        }
                    }
                }
            }
        }
    }
    return rep;
}

inline SuiteReport suite_bta(std::uint64_t seed)
{
    using namespace derham;
    SuiteReport rep{"bta", {}};
    auto rng = detail::suite_rng(seed, rep.suite);
    Recorder replay(rep, "replay", "bloch-kato-rewrite", 50);
    Recorder viol(rep, "hypothesis_violation", "bloch-kato-rewrite", 4);
    for (const char *s : {"GF(2)(s)[T]/(T^2 + T + s)", "GF(3)(s)[T]/(T^3 - T - s)", "GF(3)(s)[T]/(T^3 - s)",
                          "GF(2)(s)[T]/(T^2 + s*T + s^3 + 1)"}) {
        const auto K = parse_funfield(s);
        const auto &k = K.base();
        for (int i = 0; i < 15; ++i) {
            FactoredElement beta{k.random_unit(rng, 2), {}};
            const auto nf = rng.below(4);
            for (std::uint64_t j = 0; j < nf; ++j) {
                beta.factors.push_back(KPoly{k.random(rng, 2), k.one()});
            }
            const auto alpha = K.random(rng, 2);
            replay.instance(
                [&] {
                    const auto target = scale(K, alpha, dlog(K, evaluate_factored(K, beta)));
                    return bta_replay(K, bta_rewrite(K, alpha, beta)) == target;
                },
                [&] { return std::string(s) + " alpha=" + K.to_string(alpha); });
        }
        // x^2 + x + 1 over F_2 and x^2 + 1 over F_3 are irreducible.
        const ff::Elem mid = std::string(s).rfind("GF(2)", 0) == 0 ? 1 : 0;
        FactoredElement quad{k.one(), {KPoly{k.one(), k.constant(mid), k.one()}}};
        viol.instance(
            [&] {
                try {
                    bta_rewrite(K, K.gen(), quad);
                } catch (const HypothesisViolation &e) {
                    return e.degree == 2;
                }
                return false;
            },
            [&] { return std::string(s); });
    }
    return rep;
}

struct SuiteEntry {
    std::string name;
    std::function<SuiteReport(std::uint64_t)> run;
};

inline const std::vector<SuiteEntry> &suites()
{
    static const std::vector<SuiteEntry> all{
        {"witt", suite_witt},       {"maps", suite_maps},     {"asw", suite_asw},
        {"kato", suite_kato},       {"dec", suite_dec},       {"certificates", suite_certificates},
        {"tmap", suite_tmap},       {"ntr", suite_ntr},       {"cartier", suite_cartier},
        {"mackey", suite_mackey_square}, {"bta", suite_bta}};
    return all;
}

// "all" runs every suite in registration order.
inline std::vector<SuiteReport> run_suite(const std::string &name, std::uint64_t seed)
{
    std::vector<SuiteReport> out;
    for (const auto &s : suites()) {
        if (name == "all" || name == s.name) {
            out.push_back(s.run(seed));
        }
    }
    if (out.empty()) {
        throw DomainError("unknown suite '" + name + "'");
    }
    return out;
}

} // namespace mw::verify

#endif
