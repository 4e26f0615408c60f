// Command-line front end.  Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include "minindex/conic.hpp"
#include "minindex/driver.hpp"
#include "minindex/element.hpp"
#include "minindex/field_model.hpp"
#include "minindex/forms.hpp"
#include "minindex/golden.hpp"
#include "minindex/thue.hpp"
#include "minindex/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace minindex;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json to_json(Int const& n)
{
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Json to_json(Triple const& v)
{
    return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

Json to_json(Completeness const& c)
{
    if (c.proven) return "Proven";
    return "BoundedSearchOnly(" + std::to_string(c.bound) + ")";
}

Int parse_int(std::string const& s, char const* what)
{
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InvalidInput(std::string("malformed ") + what + ": '" + s + "'");
    return v;
}

std::string rigor_text(Completeness const& c) { return to_json(c).get<std::string>(); }

/* A report document: human text and the structured form are built together. */
struct Report {
    Json doc = Json::object();
    std::ostringstream text;
    int exit_code = kOk;
};

FamilyParameter parameter(std::string const& t, bool allow_violation = false)
{
    return validate_parameter(parse_int(t, "t"), allow_violation);
}

Json basis_json(FamilyParameter const& p)
{
    IntegralBasis const b = integral_basis(p);
    Json rows = Json::array();
    for (auto const& r : b.rows) rows.push_back({to_json(r[0]), to_json(r[1]), to_json(r[2]), to_json(r[3])});
    return {{"class", to_string(p.v2_class)}, {"g", to_json(p.g)}, {"n", to_json(p.n)},
            {"denominator", to_json(b.denom)}, {"rows", rows},
            {"disc_P", to_json(p.disc_P)}, {"disc_K", to_json(p.disc_K)},
            {"odd_part_squarefree", p.odd_part_squarefree}};
}

void cmd_basis(Report& r, std::string const& t_arg)
{
    FamilyParameter const p = parameter(t_arg);
    r.doc["input"] = {{"t", to_json(p.t)}};
    Json res = basis_json(p);
    r.doc["result"] = res;
    r.doc["rigor"] = "Proven";
    r.text << "t = " << p.t << "  class " << to_string(p.v2_class) << "  g = " << p.g << "  n = I(xi) = " << p.n << "\n";
    r.text << "disc(P_t) = " << p.disc_P << "\ndisc(K)   = " << p.disc_K << "\n";
    IntegralBasis const b = integral_basis(p);
    for (std::size_t i = 0; i < 4; ++i) {
        r.text << "b" << i + 1 << " = (";
        for (std::size_t j = 0; j < 4; ++j) r.text << (j ? ", " : "") << b.rows[i][j];
        r.text << ") / " << b.denom << "\n";
    }
}

void cmd_index(Report& r, std::string const& t_arg, std::vector<std::string> const& coords,
               std::vector<std::string> const& power)
{
    FamilyParameter const p = parameter(t_arg);
    if (coords.empty() == power.empty()) throw InvalidInput("give exactly one of --coords and --power");
    AlgebraicInt e;
    Json input = {{"t", to_json(p.t)}};
    if (!coords.empty()) {
        if (coords.size() != 3 && coords.size() != 4) throw InvalidInput("--coords takes X1 X2 X3 or X0 X1 X2 X3");
        std::size_t const off = 4 - coords.size();
        for (auto& c : e.coords) c = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) e.coords[off + i] = parse_int(coords[i], "coordinate");
        input["coords"] = {to_json(e.coords[0]), to_json(e.coords[1]), to_json(e.coords[2]), to_json(e.coords[3])};
    } else {
        if (power.size() != 5) throw InvalidInput("--power takes a x y z d");
        PowerRep pr{parse_int(power[0], "a"), parse_int(power[1], "x"), parse_int(power[2], "y"),
                    parse_int(power[3], "z"), parse_int(power[4], "d")};
        if (pr.d <= 0) throw InvalidInput("denominator must be positive");
        input["power"] = {to_json(pr.a), to_json(pr.x), to_json(pr.y), to_json(pr.z), to_json(pr.d)};
        try {
            e = from_power_rep(pr, p);
        } catch (NotIntegral const& ex) {
            throw InvalidInput(std::string("not an algebraic integer: ") + ex.what());
        }
    }
    r.doc["input"] = input;

    auto const oracle = index_oracle(e, p);
    auto const forms = index_via_forms(to_power_rep(e, p), p);
    Json res;
    if (!oracle || !forms) {
        res = {{"degenerate", true}, {"index_oracle", nullptr}, {"index_via_forms", nullptr}};
        r.text << "degenerate: the element does not generate K\n";
        if (oracle.has_value() != forms.has_value()) {
            r.exit_code = kVerifyFailed;
            r.text << "DISAGREEMENT: one route reports degenerate, the other does not\n";
        }
    } else {
        res = {{"degenerate", false}, {"index_oracle", to_json(*oracle)}, {"index_via_forms", to_json(*forms)}};
        r.text << "index (discriminant) = " << *oracle << "\nindex (forms)        = " << *forms << "\n";
        if (*oracle != *forms) {
            r.exit_code = kVerifyFailed;
            r.text << "DISAGREEMENT\n";
        }
    }
    res["agree"] = r.exit_code == kOk;
    r.doc["result"] = res;
    r.doc["rigor"] = "Proven";
}

struct MinimalFlags {
    bool brute_check = false;
    long box = 0;
    long thue_bound = SearchOptions{}.thue_bound;
    bool allow_violation = false;
};

Json trace_json(Triple const& e, ElementTrace const& tr)
{
    Json j = {{"element", to_json(e)}, {"route", tr.route}, {"u", to_json(tr.u)}, {"v", to_json(tr.v)},
              {"xyz", to_json(tr.xyz)}};
    if (tr.k != 0) {
        j["p"] = to_json(tr.p);
        j["q"] = to_json(tr.q);
        j["k"] = to_json(tr.k);
        j["s"] = to_json(tr.s);
        j["base_point"] = to_json(tr.base_point);
    }
    j["thue_proven"] = tr.proven;
    return j;
}

void cmd_minimal_index(Report& r, std::string const& t_arg, MinimalFlags const& f)
{
    FamilyParameter const p = parameter(t_arg, true);
    if (!p.odd_part_squarefree && !f.allow_violation) {
        Int const sq = odd_square_factor(p.t);
        throw ParameterError(ParameterErrorKind::OddSquareFactor,
                             "OddSquareFactor(" + sq.get_str() + "): t^2+16 has an odd square factor; "
                             "rerun with --allow-hypothesis-violation", sq);
    }
    if (f.thue_bound < 1) throw InvalidInput("--thue-bound must be >= 1");
    SearchOptions opts;
    opts.thue_bound = f.thue_bound;
    opts.allow_hypothesis_violation = f.allow_violation;
    long const box = f.box > 0 ? f.box : static_cast<long>(p.t.get_si()) + 40;

    r.doc["input"] = {{"t", to_json(p.t)}, {"thue_bound", f.thue_bound}, {"brute_check", f.brute_check},
                      {"box", f.brute_check ? Json(box) : Json(nullptr)},
                      {"allow_hypothesis_violation", f.allow_violation}};
    MinimalIndexResult const res = minimal_index(p, opts);
    Json elems = Json::array();
    for (auto const& [e, tr] : res.elements) elems.push_back(trace_json(e, tr));
    Json out = {{"m", to_json(res.m)}, {"count", res.elements.size()}, {"elements", elems},
                {"hypothesis_violated", res.hypothesis_violated}, {"inconclusive", res.inconclusive},
                {"notes", res.notes}};

    r.text << "t = " << p.t << "  class " << to_string(p.v2_class) << "  n = " << p.n << "\n";
    if (res.hypothesis_violated) r.text << "Hypothesis-Violated: odd part of t^2+16 is not squarefree\n";
    r.text << "minimal index m = " << res.m << "  (" << res.elements.size() << " elements, "
           << rigor_text(res.rigor) << (res.inconclusive ? ", inconclusive" : "") << ")\n";
    for (auto const& [e, tr] : res.elements) {
        r.text << "  " << str(e) << "   " << tr.route << " (u,v)=(" << tr.u << "," << tr.v << ")";
        if (tr.k != 0) r.text << " (p,q)=(" << tr.p << "," << tr.q << ") k=" << tr.k;
        r.text << "\n";
    }

    if (f.brute_check) {
        BruteForceResult const bf = brute_force_minimal(p, box);
        std::vector<Triple> const bl(bf.elements.begin(), bf.elements.end());
        // The scan only sees the box; driver elements outside it are listed apart.
        std::vector<Triple> inside, outside;
        for (auto const& e : res.element_list()) {
            bool const in = abs(e[0]) <= box && abs(e[1]) <= box && abs(e[2]) <= box;
            (in ? inside : outside).push_back(e);
        }
        SetComparison const cmp = compare_elements(bl, inside);
        bool const agree = bf.m == res.m && cmp.equal;
        Json missing = Json::array(), extra = Json::array(), beyond = Json::array();
        for (auto const& x : cmp.missing) missing.push_back(to_json(x));
        for (auto const& x : cmp.unexpected) extra.push_back(to_json(x));
        for (auto const& x : outside) beyond.push_back(to_json(x));
        out["brute_check"] = {{"box", box},         {"m", to_json(bf.m)},       {"count", bl.size()},
                              {"agree", agree},     {"only_brute_force", missing}, {"only_driver", extra},
                              {"outside_box", beyond}};
        r.text << "brute force |Xi| <= " << box << ": m = " << bf.m << ", " << bl.size() << " elements: "
               << (agree ? "agree" : "DISAGREE");
        if (!outside.empty()) r.text << " (" << outside.size() << " driver elements outside the box)";
        r.text << "\n";
        if (!agree) r.exit_code = kVerifyFailed;
    }
    r.doc["result"] = out;
    r.doc["rigor"] = to_json(res.rigor);
}

bool power_of_two(Int const& a) { return a > 0 && mpz_popcount(a.get_mpz_t()) == 1; }

void cmd_thue(Report& r, std::string const& t_arg, std::string const& w_arg, long bound)
{
    FamilyParameter const p = parameter(t_arg, true);
    Int const w = parse_int(w_arg, "w");
    if (w == 0) throw InvalidInput("w must be nonzero");
    if (bound < 1) throw InvalidInput("--bound must be >= 1");
    r.doc["input"] = {{"t", to_json(p.t)}, {"w", to_json(w)}, {"bound", bound}};

    Int const aw = abs(w);
    SolutionSet const s = power_of_two(aw) ? solve_power_of_two(p.t, sgn(w), valuation2(aw))
                                           : bounded_search(BinaryQuarticForm::family(p.t), w, bound);
    Json pairs = Json::array();
    for (auto const& [a, b] : s.pairs) pairs.push_back({to_json(a), to_json(b)});
    r.doc["result"] = {{"method", power_of_two(aw) ? "power-of-two recursion" : "bounded search"},
                       {"count", s.pairs.size()}, {"pairs", pairs}};
    r.doc["rigor"] = to_json(s.completeness);
    r.text << "F_" << p.t << "(p,q) = " << w << ": " << s.pairs.size() << " solution(s) up to sign, "
           << rigor_text(s.completeness) << "\n";
    for (auto const& [a, b] : s.pairs) r.text << "  (" << a << ", " << b << ")\n";
}

void cmd_enumerate(Report& r, std::string const& t_max_arg, bool compare)
{
    Int const t_max = parse_int(t_max_arg, "t-max");
    if (t_max < 1) throw InvalidInput("--t-max must be positive");
    r.doc["input"] = {{"t_max", to_json(t_max)}, {"compare_paper", compare}};
    auto const triples = enumerate_case2_triples(t_max);
    Json list = Json::array();
    for (auto const& tr : triples) {
        list.push_back({{"t", to_json(tr.t)}, {"u", to_json(tr.u)}, {"v", to_json(tr.v)}, {"m", to_json(tr.m)},
                        {"class", to_string(tr.v2_class)}, {"a1", to_json(tr.a1)}, {"a2", to_json(tr.a2)},
                        {"i", tr.i}, {"ell", tr.ell}, {"sign_A", tr.sign_A}, {"sign_B", tr.sign_B},
                        {"hypothesis_ok", tr.hypothesis_ok}});
    }
    Json out = {{"count", triples.size()}, {"triples", list}};
    r.text << triples.size() << " triples (t,u,v), v != 0, t <= " << t_max << "\n";
    for (auto const& tr : triples)
        r.text << "  (" << tr.t << "," << tr.u << "," << tr.v << ")  m=" << tr.m << "  (a1,a2,i,l)=(" << tr.a1 << ","
               << tr.a2 << "," << tr.i << "," << tr.ell << ")" << (tr.hypothesis_ok ? "" : "  hypothesis violated")
               << "\n";

    if (compare) {
        GoldenTables const g = GoldenTables::load(default_fixture_dir());
        Json missing = Json::array();
        std::size_t found = 0, checked = 0;
        for (auto const& e : g.case2_triples) {
            if (e[0] > t_max) continue;
            ++checked;
            bool hit = false;
            for (auto const& tr : triples) {
                if (tr.t != e[0]) continue;
                bool const same = (tr.u == e[1] && tr.v == e[2]) || (tr.u == -e[1] && tr.v == -e[2]);
                if (same && tr.provenance_holds()) hit = true;
            }
            if (hit) ++found;
            else missing.push_back(to_json(e));
        }
        out["compare_paper"] = {{"checked", checked}, {"found", found}, {"missing", missing}};
        r.text << "golden table: " << found << " of " << checked << " entries found\n";
        for (auto const& m : missing) r.text << "  missing " << m.dump() << "\n";
        if (!missing.empty()) r.exit_code = kVerifyFailed;
    }
    r.doc["result"] = out;
    r.doc["rigor"] = "Proven";
}

void cmd_verify_paper(Report& r, bool all, std::vector<std::string> const& t_list, bool corrected)
{
    GoldenTables const g = GoldenTables::load(default_fixture_dir());
    std::vector<Int> ts;
    if (all || t_list.empty()) {
        ts = g.exceptional_t;
        for (long t : {1, 5, 6, 10, 36, 40, 48}) ts.emplace_back(t);
    }
    for (auto const& s : t_list) ts.push_back(parse_int(s, "t"));
    for (auto const& t : ts) validate_parameter(t, true);

    r.doc["input"] = {{"t", [&] {
                           Json a = Json::array();
                           for (auto const& t : ts) a.push_back(to_json(t));
                           return a;
                       }()},
                      {"against", corrected ? "corrected" : "listed"}};
    Json rows = Json::array();
    Completeness rigor = Completeness::Proven();
    r.text << "     t   m  exp  listed  corrected  rigor\n";
    for (auto const& t : ts) {
        FamilyParameter const p = validate_parameter(t, true);
        ExpectedRow const exp = g.expected_for(t);
        SearchOptions opts;
        opts.allow_hypothesis_violation = true;
        MinimalIndexResult const res = minimal_index(p, opts);
        rigor = rigor.combine(res.rigor);
        auto const got = res.element_list();
        bool const listed_ok = res.m == exp.m && compare_elements(exp.listed, got).equal;
        bool const corrected_ok = res.m == exp.m && compare_elements(exp.corrected, got).equal;
        bool const pass = corrected ? corrected_ok : listed_ok;
        if (!pass) r.exit_code = kVerifyFailed;
        Json row = {{"t", to_json(t)}, {"m", to_json(res.m)}, {"expected_m", to_json(exp.m)},
                    {"listed_match", listed_ok}, {"corrected_match", corrected_ok},
                    {"hypothesis_violated", res.hypothesis_violated}, {"rigor", to_json(res.rigor)}};
        if (!exp.correction.empty()) row["correction"] = exp.correction;
        rows.push_back(row);
        char line[128];
        std::snprintf(line, sizeof line, "%6s %3s %4s  %-6s  %-9s  %s%s\n", t.get_str().c_str(),
                      res.m.get_str().c_str(), exp.m.get_str().c_str(), listed_ok ? "PASS" : "FAIL",
                      corrected_ok ? "PASS" : "FAIL", rigor_text(res.rigor).c_str(),
                      res.hypothesis_violated ? "  Hypothesis-Violated" : "");
        r.text << line;
    }
    r.doc["result"] = {{"rows", rows}, {"all_pass", r.exit_code == kOk}};
    r.doc["rigor"] = to_json(rigor);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal indices of the simplest quartic fields x^4 - t x^3 - 6 x^2 + t x + 1"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "structured output");
    app.set_version_flag("--version", kVersion);

    std::string t_arg, w_arg, t_max = "256";
    std::vector<std::string> coords, power, t_list;
    MinimalFlags mf;
    long thue_bound = 1000;
    bool compare = false, all = false, corrected = false;

    auto* basis = app.add_subcommand("basis", "integral basis, discriminants and I(xi)");
    basis->add_option("t", t_arg)->required();

    auto* index = app.add_subcommand("index", "index of an element by both routes");
    index->add_option("t", t_arg)->required();
    index->add_option("--coords", coords, "X1 X2 X3 or X0 X1 X2 X3 in the integral basis")->expected(3, 4);
    index->add_option("--power", power, "a x y z d for (a + x xi + y xi^2 + z xi^3)/d")->expected(5);

    auto* minimal = app.add_subcommand("minimal-index", "minimal index and all elements attaining it");
    minimal->add_option("t", t_arg)->required();
    minimal->add_flag("--brute-check", mf.brute_check, "compare with a brute-force box scan");
    minimal->add_option("--box", mf.box, "brute-force box (default t+40)");
    minimal->add_option("--thue-bound", mf.thue_bound, "bounded Thue search box");
    minimal->add_flag("--allow-hypothesis-violation", mf.allow_violation);

    auto* thue = app.add_subcommand("thue", "solutions of F_t(p,q) = w");
    thue->add_option("t", t_arg)->required();
    thue->add_option("w", w_arg)->required()->allow_extra_args(false);
    thue->add_option("--bound", thue_bound, "search box when w is not +-2^e");

    auto* enumerate = app.add_subcommand("enumerate", "(t,u,v) triples with v != 0");
    enumerate->add_option("--t-max", t_max);
    enumerate->add_flag("--compare-paper", compare, "check the golden triple table is contained");

    auto* verify = app.add_subcommand("verify-paper", "compare the driver with the golden tables");
    verify->add_flag("--all", all, "every exceptional t and a generic sample");
    verify->add_option("--t", t_list, "parameters to check")->expected(1, -1);
    verify->add_flag("--corrected", corrected, "compare against the erratum-corrected rows");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    Report r;
    auto* sc = app.get_subcommands().front();
    r.doc["command"] = sc->get_name();
    r.doc["version"] = kVersion;
    auto const start = std::chrono::steady_clock::now();
    try {
        if (sc == basis) cmd_basis(r, t_arg);
        else if (sc == index) cmd_index(r, t_arg, coords, power);
        else if (sc == minimal) cmd_minimal_index(r, t_arg, mf);
        else if (sc == thue) cmd_thue(r, t_arg, w_arg, thue_bound);
        else if (sc == enumerate) cmd_enumerate(r, t_max, compare);
        else cmd_verify_paper(r, all, t_list, corrected);
    } catch (ParameterError const& e) {
        std::cerr << "invalid t: " << e.what() << "\n";
        if (json_out)
            std::cout << Json{{"command", sc->get_name()}, {"version", kVersion}, {"error", e.what()}}.dump(2) << "\n";
        return kInvalid;
    } catch (InvalidInput const& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        if (json_out)
            std::cout << Json{{"command", sc->get_name()}, {"version", kVersion}, {"error", e.what()}}.dump(2) << "\n";
        return kInvalid;
    } catch (std::logic_error const& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerifyFailed;
    }
    double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.doc["timing_ms"] = std::round(ms * 1000) / 1000;
    if (json_out) std::cout << r.doc.dump(2) << "\n";
    else std::cout << r.text.str() << "time " << ms / 1000 << " s\n";
    return r.exit_code;
}
