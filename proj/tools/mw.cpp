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
// Command-line front end. Exit codes: 0 pass, 1 property failure,
// 2 usage or parse error, 3 bound exceeded.

#include <mw/core/cursor.hpp>
#include <mw/derham/forms.hpp>
#include <mw/derham/spec.hpp>
#include <mw/ff/spec.hpp>
#include <mw/io/json.hpp>
#include <mw/kato/asw.hpp>
#include <mw/kato/presentation.hpp>
#include <mw/mackey/certify.hpp>
#include <mw/mackey/sample.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/verify/suites.hpp>
#include <mw/witt/decompose.hpp>
#include <mw/witt/maps.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace mw;
using io::json;

namespace {

constexpr std::uint64_t hard_cap_elems = 65536;

enum Exit { ok = 0, property_failure = 1, usage = 2, bound = 3 };

struct Options {
    std::string field;
    std::string tset;
    unsigned r = 1;
    unsigned n = 1;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::uint64_t bound_elems = 4096;
    bool bound_given = false;
};

struct Outcome {
    json body;
    int code = Exit::ok;
};

kato::Bounds bounds_of(const Options &o)
{
    if (o.bound_elems > hard_cap_elems) {
        throw BoundExceeded("--bound-elems", o.bound_elems, hard_cap_elems);
    }
    return kato::Bounds{o.bound_elems, std::min<std::uint64_t>(o.bound_elems, 124), 3};
}

std::vector<Int> parse_ints(const std::string &s)
{
    Cursor c(s);
    std::vector<Int> out;
    if (c.done()) {
        return out;
    }
    do {
        const bool neg = c.accept('-');
        const Int v(c.number());
        out.push_back(neg ? Int(-v) : v);
    } while (c.accept(','));
    c.expect_end();
    return out;
}

std::vector<ff::Elem> parse_codes(const ff::Field &k, const std::string &s)
{
    std::vector<ff::Elem> out;
    for (const auto &v : parse_ints(s)) {
        if (v < 0 || v >= Int(k.order())) {
            throw ParseError("element code " + to_string(v) + " outside " + k.spec(), 0);
        }
        out.push_back(static_cast<ff::Elem>(v));
    }
    return out;
}

ff::FieldRef finite_field(const Options &o)
{
    if (o.field.empty()) {
        throw ParseError("--field is required", 0);
    }
    return ff::parse_field(o.field);
}

json header(const std::string &command, const Options &o)
{
    json j{{"schema", io::schema_version}, {"command", command}};
    json in = json::object();
    if (!o.field.empty()) {
        in["field"] = o.field;
    }
    if (!o.tset.empty()) {
        in["tset"] = o.tset;
    }
    j["inputs"] = in;
    return j;
}

template <class V>
json vec_json(const V &v)
{
    json a = json::array();
    for (const auto &x : v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Int>) {
            a.push_back(io::int_json(x));
        } else {
            a.push_back(x);
        }
    }
    return a;
}

// witt add|mul|neg|wp|ghost|frobenius|verschiebung|decompose
Outcome cmd_witt(const std::string &op, const Options &o, const std::string &xs, const std::string &ys, std::uint64_t m)
{
    Outcome out{header("witt " + op, o)};
    if (o.tset.empty()) {
        throw ParseError("--tset is required", 0);
    }
    const auto S = trunc::parse_tset(o.tset);
    auto &in = out.body["inputs"];
    in["x"] = xs;
    if (op == "add" || op == "mul") {
        in["y"] = ys;
    }
    if (op == "frobenius" || op == "verschiebung") {
        in["m"] = m;
    }
    out.body["statement"] = op == "decompose"                ? "witt-decomposition"
                            : op == "ghost"                  ? "witt-ghost"
                            : op == "frobenius" || op == "verschiebung" ? "witt-structure-maps"
                            : op == "wp"                     ? "asw-cokernel"
                                                             : "witt-ring-laws";
    if (o.field == "Z") {
        const witt::IntWitt W(S, witt::integers());
        const auto x = parse_ints(xs);
        if (op == "add") {
            out.body["result"] = vec_json(W.add(x, parse_ints(ys)));
        } else if (op == "mul") {
            out.body["result"] = vec_json(W.mul(x, parse_ints(ys)));
        } else if (op == "neg") {
            out.body["result"] = vec_json(W.neg(x));
        } else if (op == "ghost") {
            out.body["result"] = vec_json(witt::ghost(W, x));
        } else if (op == "frobenius") {
            out.body["result"] = vec_json(witt::frobenius_n(W, m, x));
        } else if (op == "verschiebung") {
            out.body["result"] = vec_json(witt::verschiebung(W, m, x));
        } else {
            throw ParseError("'witt " + op + "' needs a finite coefficient field", 0);
        }
        return out;
    }
    const auto k = finite_field(o);
    const witt::FieldWitt W(S, k);
    const auto x = parse_codes(*k, xs);
    if (op == "add") {
        out.body["result"] = vec_json(W.add(x, parse_codes(*k, ys)));
    } else if (op == "mul") {
        out.body["result"] = vec_json(W.mul(x, parse_codes(*k, ys)));
    } else if (op == "neg") {
        out.body["result"] = vec_json(W.neg(x));
    } else if (op == "wp") {
        out.body["result"] = vec_json(witt::wp(W, x));
    } else if (op == "frobenius") {
        out.body["result"] = vec_json(witt::frobenius_n(W, m, x));
    } else if (op == "verschiebung") {
        out.body["result"] = vec_json(witt::verschiebung(W, m, x));
    } else if (op == "decompose") {
        witt::Decomposition D(W);
        json parts = json::array();
        const auto comps = D.decompose(x);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            parts.push_back({{"tset", D.parts()[i].tset().to_string()}, {"value", vec_json(comps[i])}});
        }
        json profile = json::array();
        for (const auto &e : D.profile()) {
            profile.push_back({{"m", e.m}, {"r", e.r}});
        }
        out.body["profile"] = profile;
        out.body["result"] = parts;
    } else if (op == "ghost") {
        throw ParseError("'witt ghost' needs --field Z", 0);
    } else {
        throw ParseError("unknown witt operation '" + op + "'", 0);
    }
    return out;
}

Outcome cmd_asw(const Options &o)
{
    Outcome out{header("asw", o)};
    out.body["inputs"]["r"] = o.r;
    const auto c = kato::asw_cokernel(finite_field(o), o.r, bounds_of(o).witt_elems);
    out.body["invariants"] = vec_json(c.invariants());
    out.body["image_size"] = c.image_size;
    out.body["statement"] = "asw-cokernel";
    return out;
}

Outcome cmd_kato(const Options &o)
{
    Outcome out{header("kato invariants", o)};
    out.body["inputs"]["r"] = o.r;
    out.body["inputs"]["n"] = o.n;
    const auto k = finite_field(o);
    const auto b = bounds_of(o);
    if (!o.tset.empty()) {
        const auto rep = kato::decm_check(trunc::parse_tset(o.tset), k, o.n, b);
        out.body["invariants"] = vec_json(rep.product_invariants);
        out.body["model_invariants"] = vec_json(rep.model_invariants);
        out.body["statement"] = "kato-decomposition";
        if (!rep.ok) {
            out.code = Exit::property_failure;
        }
        return out;
    }
    const auto P = kato::build_presentation(k, o.r, o.n, b);
    out.body["invariants"] = vec_json(P->invariants());
    out.body["generators"] = P->presentation().rank();
    out.body["relations"] = P->presentation().relations.size();
    out.body["statement"] = o.n == 1 ? "kato-bijection" : "kato-bijection-perfect";
    return out;
}

Outcome verdict_outcome(Outcome out, const mackey::Verdict &v)
{
    json j{{"ok", v.ok}};
    if (!v.ok) {
        if (v.failed_move) {
            j["failed_move"] = *v.failed_move;
        }
        j["reason"] = v.reason;
        out.code = Exit::property_failure;
    }
    out.body["verdict"] = j;
    return out;
}

Outcome cmd_mackey_certify(const Options &o, const std::string &kind, const std::string &base, const std::string &a,
                           std::uint64_t l, const std::string &units)
{
    Outcome out{header("mackey certify", o)};
    auto &in = out.body["inputs"];
    in["kind"] = kind;
    const auto K = finite_field(o);
    const auto k = base.empty() ? K : ff::parse_field(base);
    if (!k->is_subtower_of(*K)) {
        throw ParseError("--base " + k->spec() + " is not a subfield tower of " + K->spec(), 0);
    }
    const auto others = parse_codes(*K, units);
    mackey::Certificate c;
    if (kind == "steinberg") {
        const auto av = parse_codes(*K, a);
        if (av.size() != 1) {
            throw ParseError("--a needs one element code", 0);
        }
        c = mackey::steinberg_certificate(k, K, av[0], l, others, o.seed);
        in["l"] = l;
    } else if (kind == "as") {
        const auto av = parse_codes(*K, a);
        if (av.size() != 1) {
            throw ParseError("--a needs one element code", 0);
        }
        c = mackey::as_vanishing_certificate(k, K, o.r, av[0], others, o.seed);
        in["r"] = o.r;
    } else if (kind == "perfect") {
        Rng rng(o.seed);
        c = mackey::perfect_vanishing_certificate(mackey::random_term(k, o.r, o.n, rng, 3, 256));
        in["r"] = o.r;
        in["n"] = o.n;
        in["seed"] = o.seed;
    } else {
        throw ParseError("unknown certificate kind '" + kind + "'", 0);
    }
    out.body["statement"] = kind == "steinberg" ? "milnor-steinberg" : "mackey-vanishing";
    out.body["certificate"] = io::certificate_json(c);
    return verdict_outcome(std::move(out), mackey::verify_certificate(c));
}

Outcome cmd_mackey_verify(const Options &o, const std::string &path)
{
    Outcome out{header("mackey verify", o)};
    out.body["inputs"]["certificate"] = path;
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot open " + path, 0);
    }
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    // Accepts a bare certificate or the report written by "mackey certify".
    const auto c = io::certificate_from_json(j.contains("certificate") ? j.at("certificate") : j);
    out.body["moves"] = c.moves.size();
    return verdict_outcome(std::move(out), mackey::verify_certificate(c));
}

// derham d|dlog|cartier|exact|trace|norm|ntr
Outcome cmd_derham(const std::string &op, const Options &o, const std::string &expr)
{
    using namespace derham;
    Outcome out{header("derham " + op, o)};
    out.body["inputs"]["x"] = expr;
    if (o.field.empty()) {
        throw ParseError("--field is required", 0);
    }
    const auto F = parse_funfield(o.field);
    const auto x = parse_element(F, expr);
    const auto form_str = [&](const Diff1 &w) { return to_string(F, w); };
    if (op == "d") {
        out.body["result"] = form_str(d(F, x));
    } else if (op == "dlog") {
        out.body["result"] = form_str(dlog(F, x));
    } else if (op == "cartier") {
        out.body["result"] = form_str(cartier(F, Diff1{x}));
        out.body["statement"] = "cartier";
    } else if (op == "exact") {
        out.body["result"] = is_exact(F, Diff1{x});
        out.body["statement"] = "cartier";
    } else if (op == "trace") {
        const auto B = base_field(F);
        out.body["result"] = to_string(B, trace_form(F, Diff1{x}));
        out.body["statement"] = "inseparable-trace";
    } else if (op == "norm") {
        out.body["result"] = F.base().to_string(norm_ff(F, x));
    } else if (op == "ntr") {
        const auto rep = verify_ntr(F, x);
        const auto B = base_field(F);
        out.body["lhs"] = to_string(B, rep.lhs);
        out.body["rhs"] = to_string(B, rep.rhs);
        out.body["ok"] = rep.ok;
        out.body["statement"] = "norm-trace-compat";
        if (!rep.ok) {
            out.code = Exit::property_failure;
        }
    } else {
        throw ParseError("unknown derham operation '" + op + "'", 0);
    }
    return out;
}

Outcome cmd_verify(const Options &o, const std::string &suite)
{
    Outcome out{{{"schema", io::schema_version}, {"command", "verify"}, {"suite", suite}, {"seed", o.seed}}};
    const auto reps = verify::run_suite(suite, o.seed);
    bool passed = true;
    for (const auto &r : reps) {
        passed = passed && r.passed();
    }
    out.body["passed"] = passed;
    out.body["suites"] = io::suites_json(reps);
    out.code = passed ? Exit::ok : Exit::property_failure;
    return out;
}

void render_text(const json &j, std::ostream &os, const std::string &indent = "")
{
    for (const auto &[k, v] : j.items()) {
        if (v.is_object()) {
            os << indent << k << ":\n";
            render_text(v, os, indent + "  ");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << indent << k << ":\n";
            for (const auto &e : v) {
                os << indent << "  -\n";
                render_text(e, os, indent + "    ");
            }
        } else {
            os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Witt vectors, Kato groups and Mackey product certificates over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    if (const char *env = std::getenv("MW_BOUND_ELEMS")) {
        try {
            o.bound_elems = std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "MW_BOUND_ELEMS must be a positive integer\n";
            return Exit::usage;
        }
    }
    app.add_option("--field", o.field,
                   "GF(q), GF(p^d), or a tower GF(Q)/GF(q) for finite fields; Z for integer Witt vectors; "
                   "GF(q)(t) or GF(q)(t)[y]/(g) for the derham commands");
    app.add_option("--tset", o.tset, "truncation set: 1,2,3,6 (divisor-closed) or P(p,r)");
    app.add_option("--r", o.r, "Witt length")->check(CLI::Range(1u, 40u));
    app.add_option("--n", o.n, "degree")->check(CLI::Range(1u, 3u));
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--bound-elems", o.bound_elems,
                   "enumeration cap on Witt ring sizes (default 4096, env MW_BOUND_ELEMS, hard cap 65536)");

    std::function<Outcome()> run;

    auto *witt = app.add_subcommand("witt", "Witt vector arithmetic; elements are comma-separated coordinates");
    std::string wop, xs, ys;
    std::uint64_t m = 1;
    witt->add_option("op", wop, "add, mul, neg, wp, ghost, frobenius, verschiebung or decompose")->required();
    witt->add_option("--x", xs, "first argument");
    witt->add_option("--y", ys, "second argument");
    witt->add_option("--m", m, "index for frobenius and verschiebung")->check(CLI::PositiveNumber);
    witt->callback([&] { run = [&] { return cmd_witt(wop, o, xs, ys, m); }; });

    auto *asw = app.add_subcommand("asw", "cokernel of F - 1 on W_r(k)");
    asw->callback([&] { run = [&] { return cmd_asw(o); }; });

    auto *kato = app.add_subcommand("kato", "Kato presentation of H^n_{p^r}(k)");
    std::string kop;
    kato->add_option("op", kop, "invariants")->required()->check(CLI::IsMember({"invariants"}));
    kato->callback([&] { run = [&] { return cmd_kato(o); }; });

    auto *mack = app.add_subcommand("mackey", "vanishing certificates in the Mackey product");
    mack->require_subcommand(1);
    mack->fallthrough();
    auto *certify = mack->add_subcommand("certify", "generate and replay a certificate");
    std::string kind, base, a, units;
    std::uint64_t l = 2;
    certify->add_option("--kind", kind, "steinberg, as or perfect")->required();
    certify->add_option("--base", base, "base field k (default: --field)");
    certify->add_option("--a", a, "element code");
    certify->add_option("--l", l, "order of the Steinberg symbol")->check(CLI::Range(2u, 1000u));
    certify->add_option("--units", units, "extra unit slots, comma-separated codes");
    certify->callback([&] { run = [&] { return cmd_mackey_certify(o, kind, base, a, l, units); }; });
    auto *mverify = mack->add_subcommand("verify", "replay a certificate file");
    std::string path;
    mverify->add_option("file", path, "certificate JSON")->required();
    mverify->callback([&] { run = [&] { return cmd_mackey_verify(o, path); }; });

    auto *dr = app.add_subcommand("derham", "differential forms on function fields; forms are x dt (or x du)");
    std::string dop, dx;
    dr->add_option("op", dop, "d, dlog, cartier, exact, trace, norm or ntr")->required();
    dr->add_option("--x", dx, "element, or the coefficient of the form")->required();
    dr->callback([&] { run = [&] { return cmd_derham(dop, o, dx); }; });

    auto *ver = app.add_subcommand("verify", "run property suites");
    std::string suite = "all";
    std::vector<std::string> names{"all"};
    for (const auto &s : verify::suites()) {
        names.push_back(s.name);
    }
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(names));
    ver->callback([&] { run = [&] { return cmd_verify(o, suite); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return Exit::usage;
    }

    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        out = run();
    } catch (const BoundExceeded &e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return Exit::bound;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }
    out.body["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    if (o.format == "text") {
        render_text(out.body, std::cout);
    } else {
        std::cout << out.body.dump(2) << "\n";
    }
    return out.code;
}
