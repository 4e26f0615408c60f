#include "minindex/golden.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#ifndef MININDEX_FIXTURE_DIR
#define MININDEX_FIXTURE_DIR "fixtures"
#endif

namespace minindex {

using nlohmann::json;

namespace {

json read(std::filesystem::path const& p)
{
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    return json::parse(in);
}

Triple triple(json const& j)
{
    return {Int(j.at(0).get<long>()), Int(j.at(1).get<long>()), Int(j.at(2).get<long>())};
}

std::vector<Triple> triples(json const& j)
{
    std::vector<Triple> r;
    for (auto const& e : j) r.push_back(triple(e));
    return r;
}

TwoAdicClass class_named(std::string const& s)
{
    for (auto c : {TwoAdicClass::V0, TwoAdicClass::V1, TwoAdicClass::V2, TwoAdicClass::V3plus})
        if (s == to_string(c)) return c;
    throw std::runtime_error("unknown class " + s);
}

std::vector<GoldenTables::GenericElement> generic_elements(json const& j)
{
    std::vector<GoldenTables::GenericElement> r;
    for (auto const& e : j) {
        GoldenTables::GenericElement g;
        for (int i = 0; i < 3; ++i)
            g[i] = {e.at(i).at(0).get<long>(), e.at(i).at(1).get<long>(), e.at(i).at(2).get<long>()};
        r.push_back(g);
    }
    return r;
}

Triple instantiate(GoldenTables::GenericElement const& g, Int const& t)
{
    Triple r;
    for (int i = 0; i < 3; ++i) {
        Int const num = g[i].c + g[i].ct * t;
        if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(g[i].den)))
            throw std::domain_error("generic coordinate not integral at t = " + str(t));
        r[i] = num / g[i].den;
    }
    return r;
}

}  // namespace

std::filesystem::path default_fixture_dir()
{
    if (char const* env = std::getenv("MININDEX_FIXTURES"); env && *env) return env;
    return MININDEX_FIXTURE_DIR;
}

GoldenTables GoldenTables::load(std::filesystem::path const& dir)
{
    GoldenTables g;

    json const monogenic = read(dir / "monogenic_generators.json");
    for (auto const& r : monogenic.at("rows")) {
        ExpectedRow row;
        row.t = r.at("t").get<long>();
        row.m = r.at("m").get<long>();
        row.listed = row.corrected = triples(r.at("elements"));
        g.monogenic.push_back(row);
    }

    json const table = read(dir / "minimal_index_table.json");
    for (auto const& t : table.at("exceptional_t")) g.exceptional_t.emplace_back(t.get<long>());
    for (auto const& r : table.at("generic")) {
        GenericRow row;
        row.v2_class = class_named(r.at("class").get<std::string>());
        row.m = r.at("m").get<long>();
        row.listed = generic_elements(r.at("elements"));
        row.corrected = r.contains("corrected") ? generic_elements(r.at("corrected")) : row.listed;
        row.correction = r.value("correction", "");
        g.generic_rows.push_back(row);
    }
    for (auto const& r : table.at("exceptional")) {
        ExceptionalRow ex;
        ex.row.t = r.at("t").get<long>();
        ex.row.m = r.at("m").get<long>();
        ex.row.listed = triples(r.at("elements"));
        ex.row.corrected = r.contains("corrected") ? triples(r.at("corrected")) : ex.row.listed;
        ex.row.correction = r.value("correction", "");
        ex.row.requires_override = r.value("requires_override", false);
        ex.row.exceptional = true;
        ex.with_generic = r.value("with_generic", false);
        g.exceptional_rows.push_back(ex);
    }

    if (table.contains("errata"))
        for (auto const& r : table.at("errata")) {
            Erratum e;
            e.t = r.at("t").get<long>();
            e.m = r.at("m").get<long>();
            e.elements = triples(r.at("elements"));
            e.correction = r.at("correction").get<std::string>();
            g.errata.push_back(e);
        }

    json const case2 = read(dir / "case2_triples.json");
    for (auto const& tr : case2.at("triples"))
        g.case2_triples.push_back(triple(tr));

    json const thue = read(dir / "thue_base_solutions.json");
    for (auto const& s : thue.at("sets")) {
        ThueBaseSet b;
        b.w = s.at("w").get<int>();
        if (!s.at("t").is_null()) b.t = Int(s.at("t").get<long>());
        for (auto const& p : s.at("pairs")) b.pairs.emplace_back(Int(p.at(0).get<long>()), Int(p.at(1).get<long>()));
        g.thue_base.push_back(b);
    }
    return g;
}

ExpectedRow GoldenTables::expected_for(Int const& t) const
{
    TwoAdicClass const cls = two_adic_class(t);
    GenericRow const* gen = nullptr;
    for (auto const& r : generic_rows)
        if (r.v2_class == cls) gen = &r;

    ExpectedRow row;
    auto add_generic = [&] {
        if (!gen) throw std::runtime_error(std::string("no generic row for class ") + to_string(cls));
        for (auto const& e : gen->listed) row.listed.push_back(instantiate(e, t));
        for (auto const& e : gen->corrected) row.corrected.push_back(instantiate(e, t));
        if (!gen->correction.empty()) row.correction = gen->correction;
    };

    for (auto const& ex : exceptional_rows) {
        if (ex.row.t != t) continue;
        row = ex.row;
        if (ex.with_generic) {
            if (gen->m != row.m) throw std::runtime_error("generic row combined with a different m");
            add_generic();
        }
        return row;
    }
    row.t = t;
    add_generic();
    row.m = gen->m;
    for (auto const& e : errata)
        if (e.t == t) {
            row.m = e.m;
            row.corrected = e.elements;
            row.correction = e.correction;
        }
    return row;
}

SetComparison compare_elements(std::vector<Triple> const& expected, std::vector<Triple> const& got)
{
    std::set<Triple, CanonicalOrder> e, g;
    for (auto const& x : expected) e.insert(canonical(x));
    for (auto const& x : got) g.insert(canonical(x));
    SetComparison c;
    std::set_difference(e.begin(), e.end(), g.begin(), g.end(), std::back_inserter(c.missing), CanonicalOrder{});
    std::set_difference(g.begin(), g.end(), e.begin(), e.end(), std::back_inserter(c.unexpected), CanonicalOrder{});
    c.equal = c.missing.empty() && c.unexpected.empty();
    return c;
}

}  // namespace minindex
