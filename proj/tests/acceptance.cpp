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
// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
// failure. argv[1] is the path of the mw command-line tool.

#include <mw/io/json.hpp>
#include <mw/verify/suites.hpp>

#include "support/fuzz.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace mw;

namespace {

constexpr std::uint64_t seed = 42;

struct Result {
    bool ok = true;
    std::string note;
};

void require(Result &r, bool cond, const std::string &what)
{
    if (!cond && r.ok) {
        r.ok = false;
        r.note = what;
    }
}

// Folds a suite report into a criterion result.
void require_suite(Result &r, const verify::SuiteReport &rep)
{
    for (const auto &c : rep.checks) {
        require(r, c.passed, rep.suite + "/" + c.name + ": " + c.detail);
    }
}

std::uint64_t instances(const verify::SuiteReport &rep, const std::string &check)
{
    for (const auto &c : rep.checks) {
        if (c.name == check) {
            return c.instances;
        }
    }
    return 0;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Integer Witt arithmetic through ghost coordinates.
using IV = std::vector<Int>;

IV ghost_of(const trunc::TruncationSet &S, const IV &x)
{
    IV w;
    for (auto s : S.elements()) {
        Int acc = 0;
        for (auto d : S.elements()) {
            if (s % d == 0) {
                acc += Int(d) * boost::multiprecision::pow(x[S.index_of(d)], static_cast<unsigned>(s / d));
            }
        }
        w.push_back(acc);
    }
    return w;
}

std::optional<IV> unghost(const trunc::TruncationSet &S, const IV &w)
{
    IV x;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto s = S.elements()[i];
        Int acc = w[i];
        for (std::size_t j = 0; j < i; ++j) {
            const auto d = S.elements()[j];
            if (s % d == 0) {
                acc -= Int(d) * boost::multiprecision::pow(x[j], static_cast<unsigned>(s / d));
            }
        }
        if (acc % Int(s) != 0) {
            return std::nullopt;
        }
        x.push_back(acc / Int(s));
    }
    return x;
}

Result criterion1()
{
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = verify::suite_witt(seed);
    require_suite(r, rep);
    require(r, instances(rep, "ring_axioms") >= 1000, "fewer than 1000 triples");
    // Independent oracle: sums and products through ghost coordinates, and
    // their reductions mod p for the prime fields.
    Rng rng(seed);
    std::size_t n = 0;
    for (const auto &S : trunc::all_truncation_sets(12, 5)) {
        const witt::IntWitt W(S, witt::integers());
        for (int i = 0; i < 4; ++i) {
            IV a(S.size()), b(S.size());
            for (std::size_t j = 0; j < S.size(); ++j) {
                a[j] = rng.range(-4, 4);
                b[j] = rng.range(-4, 4);
            }
            auto ga = ghost_of(S, a), gb = ghost_of(S, b), gs = ga, gp = ga;
            for (std::size_t j = 0; j < S.size(); ++j) {
                gs[j] += gb[j];
                gp[j] *= gb[j];
            }
            const auto sum = unghost(S, gs), prod = unghost(S, gp);
            require(r, sum && prod, "ghost image check failed for S=" + S.to_string());
            if (!sum || !prod) {
                continue;
            }
            require(r, W.add(a, b) == *sum && W.mul(a, b) == *prod, "integer laws disagree on S=" + S.to_string());
            for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
                const witt::FieldWitt Wp(S, ff::Field::prime(p));
                const auto red = [&](const IV &v) {
                    witt::FieldWitt::Vector out;
                    for (const auto &x : v) {
                        out.push_back(static_cast<ff::Elem>(mod_floor(x, Int(p))));
                    }
                    return out;
                };
                require(r, Wp.add(red(a), red(b)) == red(*sum) && Wp.mul(red(a), red(b)) == red(*prod),
                        "laws mod " + std::to_string(p) + " disagree on S=" + S.to_string());
            }
            ++n;
        }
    }
    const double s = seconds_since(t0);
    require(r, s <= 30, "runtime above 30 s");
    std::ostringstream os;
    os << instances(rep, "ring_axioms") << " axiom triples, " << instances(rep, "ghost_homomorphism")
       << " ghost checks, " << n << " oracle pairs, " << s << " s";
    if (r.ok) {
        r.note = os.str();
    }
    return r;
}

Result simple(const verify::SuiteReport &rep, const std::vector<std::pair<std::string, std::uint64_t>> &minimums)
{
    Result r;
    require_suite(r, rep);
    std::ostringstream os;
    for (const auto &[name, min] : minimums) {
        const auto got = instances(rep, name);
        require(r, got >= min, name + ": " + std::to_string(got) + " < " + std::to_string(min));
        os << name << "=" << got << " ";
    }
    if (r.ok) {
        r.note = os.str();
    }
    return r;
}

Result criterion3()
{
    auto r = simple(verify::suite_asw(seed), {{"cokernel_cyclic", 23}});
    // The grid itself: p in {2,3,5}, d <= 3, r <= 3, q^r <= 4096.
    std::size_t expected = 0;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 3; ++d) {
            for (unsigned rr = 1; rr <= 3; ++rr) {
                expected += std::pow(double(p), double(d * rr)) <= 4096.0;
            }
        }
    }
    require(r, verify::asw_grid().size() == expected, "grid size mismatch");
    return r;
}

Result criterion6()
{
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = verify::suite_certificates(seed);
    require_suite(r, rep);
    for (const char *g : {"steinberg_l_eq_p", "steinberg_l_ne_p", "as_vanishing", "perfect_vanishing"}) {
        require(r, instances(rep, g) >= 200, std::string(g) + " has fewer than 200 instances");
    }
    oracle::FuzzTally tally;
    Rng rng(seed);
    for (const auto &s : verify::certificate_samples(seed)) {
        tally.add(oracle::fuzz_certificate(s.cert, rng));
    }
    require(r, tally.missed == 0, std::to_string(tally.missed) + " corruptions went undetected");
    require(r, tally.detected > 0, "no corruption was detected");
    const double s = seconds_since(t0);
    require(r, s <= 60, "runtime above 60 s");
    if (r.ok) {
        std::ostringstream os;
        os << "800 certificates replayed, " << tally.detected << "/" << (tally.mutations - tally.equivalent)
           << " corruptions detected (" << tally.equivalent << " equivalent), " << s << " s";
        r.note = os.str();
    }
    return r;
}

// Mackey square recomputed with conjugate-product norms and traces.
Result criterion10()
{
    auto r = simple(verify::suite_mackey_square(seed), {{"units", 100}, {"witt_vectors", 100}});
    Rng rng(seed);
    std::size_t triples = 0;
    for (std::uint64_t p : {2u, 3u}) {
        const auto Fp = ff::Field::prime(p);
        for (unsigned e = 1; e <= 4; ++e) {
            const auto K = e == 1 ? Fp : ff::extend_by_degree(Fp, e, 3);
            for (unsigned a = 1; a * e <= 4; ++a) {
                const auto L = a == 1 ? K : ff::extend_by_degree(K, a, 4);
                for (unsigned b = 1; b * e <= 4; ++b) {
                    const auto Kp = b == 1 ? K : ff::extend_by_degree(K, b, 5);
                    const auto comps = ff::tensor_decompose(L, Kp, K);
                    std::uint64_t dim = 0;
                    for (const auto &c : comps) {
                        dim += c.multiplicity * (c.field->degree() / Kp->degree());
                    }
                    require(r, dim == a, "tensor product has the wrong dimension");
                    const auto P = trunc::p_typical(p, 2);
                    const witt::FieldWitt WKp(P, Kp);
                    for (int i = 0; i < 4; ++i) {
                        const ff::Elem x = L->random_unit(rng);
                        // K -> K' is the identity on element codes.
                        ff::Elem rhs = 1;
                        for (const auto &c : comps) {
                            for (unsigned m = 0; m < c.multiplicity; ++m) {
                                rhs = Kp->mul(rhs, oracle::norm(*c.field, *Kp, c.from_l(x)));
                            }
                        }
                        require(r, oracle::norm(*L, *K, x) == rhs, "norm square fails over " + L->spec());
                        const std::vector<ff::Elem> w{L->random(rng), L->random(rng)};
                        // The conjugate sums are taken in the Witt ring over the source field.
                        const witt::FieldWitt WL(P, L);
                        auto wr = WKp.zero();
                        for (const auto &c : comps) {
                            const witt::FieldWitt WLi(P, c.field);
                            const auto t = oracle::witt_trace(*c.field, *Kp, 2, {c.from_l(w[0]), c.from_l(w[1])}, WLi);
                            wr = WKp.add(wr, WKp.scale(Int(c.multiplicity), t));
                        }
                        require(r, oracle::witt_trace(*L, *K, 2, w, WL) == wr, "W_2 square fails over " + L->spec());
                    }
                    ++triples;
                }
            }
        }
    }
    if (r.ok) {
        r.note += "oracle triples=" + std::to_string(triples);
    }
    return r;
}

struct Run {
    std::string out;
    int code = -1;
};

Run run_command(const std::string &cmd)
{
    Run res;
    FILE *f = popen(cmd.c_str(), "r");
    if (!f) {
        return res;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) {
        res.out.append(buf, got);
    }
    const int status = pclose(f);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

Result criterion12(const std::string &cli)
{
    Result r;
    if (cli.empty()) {
        require(r, false, "no CLI path given");
        return r;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = "'" + cli + "' verify --suite all --seed 42";
    const auto a = run_command(cmd), b = run_command(cmd);
    const double s = seconds_since(t0);
    require(r, a.code == 0 && b.code == 0, "exit codes " + std::to_string(a.code) + ", " + std::to_string(b.code));
    try {
        const auto ja = io::strip_timing(io::json::parse(a.out)), jb = io::strip_timing(io::json::parse(b.out));
        require(r, ja.dump(2) == jb.dump(2), "reports differ");
        require(r, ja.value("passed", false), "report does not pass");
        require(r, ja.at("suites").size() == verify::suites().size(), "not every suite ran");
    } catch (const std::exception &e) {
        require(r, false, std::string("unreadable report: ") + e.what());
    }
    require(r, s <= 300, "runtime above 5 min");
    if (r.ok) {
        std::ostringstream os;
        os << "two runs identical, exit 0, " << s << " s total";
        r.note = os.str();
    }
    return r;
}

} // namespace

int main(int argc, char **argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"witt ring laws and ghost homomorphism", criterion1},
        {"structure-map identities, exhaustive",
         [] {
             return simple(verify::suite_maps(seed), {{"teichmuller_multiplicative", 20},
                                                      {"frobenius_verschiebung", 20},
                                                      {"restriction_commutes", 20}});
         }},
        {"artin-schreier-witt cokernel is Z/p^r", criterion3},
        {"kato groups of finite fields",
         [] { return simple(verify::suite_kato(seed), {{"degree_one", 23}, {"higher_degrees_vanish", 46}}); }},
        {"decomposition of big Witt vectors",
         [] {
             return simple(verify::suite_dec(seed), {{"bijective", 10}, {"ring_homomorphism", 10}, {"decm_check", 20}});
         }},
        {"certificates replay and resist corruption", criterion6},
        {"t and pi are well defined",
         [] {
             return simple(verify::suite_tmap(seed),
                           {{"t_pf_invariant", 200}, {"pi_pf_invariant", 200}, {"t_kills_wp", 200}});
         }},
        {"norm-trace compatibility",
         [] {
             std::vector<std::pair<std::string, std::uint64_t>> mins;
             for (const auto &s : verify::ntr_fields()) {
                 mins.push_back({"ntr " + s, 100});
             }
             for (const char *c : {"insep_linearity", "insep_trace_of_restriction", "insep_commutes_with_d", "insep_ntr",
                                   "insep_transitivity"}) {
                 mins.push_back({c, 50});
             }
             return simple(verify::suite_ntr(seed), mins);
         }},
        {"cartier operator",
         [] {
             return simple(verify::suite_cartier(seed),
                           {{"cartier_kills_exact", 500}, {"cartier_fixes_dlog", 100}, {"dlog_t_not_exact", 1}});
         }},
        {"mackey square for G_m and W_r", criterion10},
        {"bloch-kato rewriter",
         [] { return simple(verify::suite_bta(seed), {{"replay", 50}, {"hypothesis_violation", 2}}); }},
        {"cli determinism", [&] { return criterion12(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception &e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += !r.ok;
        std::cout << (r.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << r.note
                  << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
