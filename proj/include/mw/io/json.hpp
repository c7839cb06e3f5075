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
#ifndef MW_IO_JSON_HPP
#define MW_IO_JSON_HPP

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>
#include <mw/ff/field.hpp>
#include <mw/mackey/certificate.hpp>
#include <mw/verify/suites.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace mw::io {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline json int_json(const Int &n)
{
    if (fits_int64(n)) {
        return static_cast<std::int64_t>(n);
    }
    return to_string(n);
}

inline Int int_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Int(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return Int(j.get<std::string>());
    }
    throw ParseError("expected an integer", 0);
}

inline json ints_json(const std::vector<Int> &v)
{
    json a = json::array();
    for (const auto &x : v) {
        a.push_back(int_json(x));
    }
    return a;
}

inline json field_json(const ff::Field &f)
{
    std::vector<const ff::Field *> chain;
    for (const ff::Field *cur = &f; cur->base(); cur = cur->base().get()) {
        chain.insert(chain.begin(), cur);
    }
    json layers = json::array();
    for (const auto *l : chain) {
        layers.push_back({{"var", l->var()}, {"modulus", l->modulus()}});
    }
    return {{"p", f.characteristic()}, {"spec", f.spec()}, {"layers", layers}};
}

inline ff::FieldRef field_from_json(const json &j)
{
    std::vector<ff::Layer> layers;
    for (const auto &l : j.at("layers")) {
        layers.push_back({l.at("var").get<std::string>(), l.at("modulus").get<std::vector<ff::Elem>>()});
    }
    return ff::field_from_layers(j.at("p").get<std::uint64_t>(), layers);
}

// Fields are written once in a table and referenced by index.
class FieldTable
{
public:
    std::size_t add(const ff::FieldRef &f)
    {
        for (std::size_t i = 0; i < m_fields.size(); ++i) {
            if (m_fields[i]->same_as(*f)) {
                return i;
            }
        }
        m_fields.push_back(f);
        return m_fields.size() - 1;
    }
    json to_json() const
    {
        json a = json::array();
        for (const auto &f : m_fields) {
            a.push_back(field_json(*f));
        }
        return a;
    }
    static FieldTable from_json(const json &a)
    {
        FieldTable t;
        for (const auto &f : a) {
            t.m_fields.push_back(field_from_json(f));
        }
        return t;
    }
    const ff::FieldRef &at(std::size_t i) const
    {
        if (i >= m_fields.size()) {
            throw ParseError("field index " + std::to_string(i) + " out of range", 0);
        }
        return m_fields[i];
    }

private:
    std::vector<ff::FieldRef> m_fields;
};

inline json term_json(const mackey::Term &t, FieldTable &fields)
{
    json entries = json::array();
    for (const auto &e : t.entries) {
        entries.push_back({{"coeff", int_json(e.coeff)},
                           {"field", fields.add(e.sym.field)},
                           {"witt", e.sym.witt},
                           {"units", e.sym.units}});
    }
    return {{"base", fields.add(t.base)},
            {"r", t.r},
            {"n", t.n},
            {"modulus", int_json(t.modulus)},
            {"entries", entries}};
}

inline mackey::Term term_from_json(const json &j, const FieldTable &fields)
{
    mackey::Term t;
    t.base = fields.at(j.at("base").get<std::size_t>());
    t.r = j.at("r").get<unsigned>();
    t.n = j.at("n").get<unsigned>();
    t.modulus = int_from_json(j.at("modulus"));
    for (const auto &e : j.at("entries")) {
        t.entries.push_back({int_from_json(e.at("coeff")),
                             {fields.at(e.at("field").get<std::size_t>()), e.at("witt").get<std::vector<ff::Elem>>(),
                              e.at("units").get<std::vector<ff::Elem>>()}});
    }
    return t;
}

inline json certificate_json(const mackey::Certificate &c)
{
    FieldTable fields;
    json initial = term_json(c.initial, fields);
    json moves = json::array();
    for (const auto &m : c.moves) {
        json jm{{"kind", mackey::move_name(m.kind)}, {"entry", m.entry}, {"slot", m.slot}, {"other", m.other}};
        if (m.field) {
            jm["field"] = fields.add(m.field);
        }
        jm["witness"] = m.witness;
        jm["scalar"] = int_json(m.scalar);
        moves.push_back(std::move(jm));
    }
    return {{"schema", schema_version}, {"fields", fields.to_json()}, {"initial", initial}, {"moves", moves}};
}

inline mackey::Certificate certificate_from_json(const json &j)
{
    try {
        if (j.at("schema").get<int>() != schema_version) {
            throw ParseError("unsupported certificate schema", 0);
        }
        const auto fields = FieldTable::from_json(j.at("fields"));
        mackey::Certificate c;
        c.initial = term_from_json(j.at("initial"), fields);
        for (const auto &jm : j.at("moves")) {
            const auto kind = mackey::move_from_name(jm.at("kind").get<std::string>());
            if (!kind) {
                throw ParseError("unknown move '" + jm.at("kind").get<std::string>() + "'", 0);
            }
            mackey::Move m{*kind, jm.at("entry").get<std::size_t>(), jm.at("slot").get<std::size_t>(),
                           jm.value("other", std::size_t{0}), nullptr, jm.at("witness").get<std::vector<ff::Elem>>(),
                           int_from_json(jm.value("scalar", json(0)))};
            if (jm.contains("field")) {
                m.field = fields.at(jm.at("field").get<std::size_t>());
            }
            c.moves.push_back(std::move(m));
        }
        return c;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

inline json check_json(const verify::Check &c)
{
    json j{{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}, {"instances", c.instances}};
    if (!c.detail.empty()) {
        j["detail"] = c.detail;
    }
    return j;
}

inline json suites_json(const std::vector<verify::SuiteReport> &reps)
{
    json a = json::array();
    for (const auto &r : reps) {
        json checks = json::array();
        for (const auto &c : r.checks) {
            checks.push_back(check_json(c));
        }
        a.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    }
    return a;
}

// Drops the timing field so two reports can be compared byte for byte.
inline json strip_timing(json j)
{
    if (j.is_object()) {
        j.erase("timing");
        for (auto &[k, v] : j.items()) {
            v = strip_timing(v);
        }
    } else if (j.is_array()) {
        for (auto &v : j) {
            v = strip_timing(v);
        }
    }
    return j;
}

} // namespace mw::io

#endif
