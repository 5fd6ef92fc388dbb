// File: modknot.cpp
// ----------------------------------------------------------------
// Purpose: Command-line front end.
//
// Subcommands:
//   analyze    full pipeline report from --form "a,b,c", --word or --spec
//   torus      the (p,q) torus knot via the Christoffel word ch_{p/q}(L, LR)
//   enumerate  all specs/knots/polynomials of one degree
//   table      degree table n, p(n), k(n), a(n) for even n up to --max
//   hz         class number h(−p) from the period of √p
//
// Exit codes: 0 success, 2 parse/usage errors, 3 violated mathematical
// preconditions (non-indefinite form, non-knot spec, bad prime, …).
// ----------------------------------------------------------------

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "modknot/alexander.hpp"
#include "modknot/enumeration.hpp"
#include "modknot/invariants.hpp"
#include "modknot/quad.hpp"

namespace {

using nlohmann::json;
using namespace modknot;

QuadraticForm parse_form(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = s.find(',', start)) != std::string::npos; start = pos + 1)
        parts.push_back(s.substr(start, pos - start));
    parts.push_back(s.substr(start));
    if (parts.size() != 3) throw ParseError("form: expected \"a,b,c\"");
    try {
        return QuadraticForm{Int(parts[0]), Int(parts[1]), Int(parts[2])};
    } catch (const std::invalid_argument&) {
        throw ParseError("form: invalid integer in \"" + s + "\"");
    }
}

json period_json(const std::vector<Int>& period) {
    json a = json::array();
    for (const auto& c : period) a.push_back(c.get_str());
    return a;
}

void print_report(const json& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : rep.items()) {
        std::cout << key << ": ";
        if (value.is_string()) std::cout << value.get<std::string>();
        else std::cout << value.dump();
        std::cout << "\n";
    }
}

// Everything derivable once the closure is known to be a knot with word w.
void fill_knot_fields(json& rep, const LRWord& w, const LorenzSpec& spec) {
    const std::vector<Int> period = period_from_word(w);
    rep["word"] = w.str();
    rep["period"] = period_json(period);
    rep["form"] = form_from_period(period).str();
    rep["surd"] = surd_from_period(period).str();
    rep["rademacher"] = rademacher(period).get_str();
    rep["linking_with_trefoil"] = linking_with_trefoil(w).get_str();
    rep["braid_index"] = braid_index(w);
    if (spec.pairs.front().first > 1 && spec.pairs.back().second > 1)
        rep["tbraid"] = tbraid_from_spec(spec).str();
    const AlexanderPoly delta = alexander_of_spec(spec);
    rep["alexander"] = delta.str();
    rep["degree"] = delta.degree();
    rep["genus"] = genus(delta);
}

int run_analyze(const std::string& form_s, const std::string& word_s,
                const std::string& spec_s, bool as_json) {
    json rep;
    LRWord w;
    if (!form_s.empty()) {
        const QuadraticForm f = parse_form(form_s);
        rep["input"] = "form";
        rep["discriminant"] = discriminant(f).get_str();
        const QuadraticSurd root = principal_root(f);
        rep["principal_root"] = root.str();
        const PeriodicCF cf = cf_expand(root);
        rep["cf"] = cf.str();
        w = lyndon_canonical(word_from_period(cf.period));
    } else if (!word_s.empty()) {
        rep["input"] = "word";
        w = lyndon_canonical(parse_word(word_s));
    } else {
        rep["input"] = "spec";
        const LorenzSpec spec = parse_spec(spec_s);
        rep["spec"] = spec.str();
        rep["components"] = components(spec);
        rep["trip_number"] = trip_number(spec);
        rep["degree_formula"] = alexander_degree_formula(spec);
        if (components(spec) == 1) {
            fill_knot_fields(rep, word_from_spec(spec), spec);
        } else {
            rep["note"] = "closure is a link, not a knot; polynomial fields omitted";
        }
        print_report(rep, as_json);
        return 0;
    }
    const LorenzSpec spec = spec_from_word(w);
    rep["spec"] = spec.str();
    rep["components"] = 1; // a single word traces a single closed orbit
    rep["trip_number"] = trip_number(spec);
    rep["degree_formula"] = alexander_degree_formula(spec);
    fill_knot_fields(rep, w, spec);
    print_report(rep, as_json);
    return 0;
}

int run_torus(long p, long q, bool as_json) {
    const LRWord w = substitute(christoffel_lower(p, q), "L", "LR");
    json rep;
    rep["input"] = "torus";
    rep["p"] = p;
    rep["q"] = q;
    fill_knot_fields(rep, lyndon_canonical(w), spec_from_word(w));
    print_report(rep, as_json);
    return 0;
}

int run_enumerate(long n, int jobs, bool as_json) {
    const DegreeReport rep = degree_report(n, jobs);
    if (as_json) {
        json j;
        j["n"] = rep.n;
        j["p_n"] = rep.p_n.get_str();
        j["k_n"] = rep.k_n.get_str();
        j["a_n"] = rep.a_n.get_str();
        j["specs"] = json::array();
        for (std::size_t i = 0; i < rep.specs.size(); ++i)
            j["specs"].push_back({{"spec", rep.specs[i].str()},
                                  {"knot", static_cast<bool>(rep.knots[i])}});
        j["polynomials"] = json::array();
        for (const auto& poly : rep.polynomials) j["polynomials"].push_back(poly.str());
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "degree " << rep.n << ": " << rep.p_n << " specs, " << rep.k_n
              << " knots, " << rep.a_n << " distinct polynomials\n";
    for (std::size_t i = 0; i < rep.specs.size(); ++i)
        std::cout << "  " << rep.specs[i].str()
                  << (rep.knots[i] ? "" : "  (link)") << "\n";
    for (const auto& poly : rep.polynomials) std::cout << poly.str() << "\n";
    return 0;
}

int run_table(long max_n, int jobs, std::string cache_dir, bool as_json) {
    if (cache_dir.empty())
        if (const char* env = std::getenv("MODKNOT_CACHE")) cache_dir = env;
    const std::vector<TableRow> rows = full_table(max_n, jobs, cache_dir);
    if (as_json) {
        json j = json::array();
        for (const auto& row : rows)
            j.push_back({{"n", row.n},
                         {"p_n", row.p_n.get_str()},
                         {"k_n", row.k_n.get_str()},
                         {"a_n", row.a_n.get_str()}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "n\tp(n)\tk(n)\ta(n)\n";
    for (const auto& row : rows)
        std::cout << row.n << "\t" << row.p_n << "\t" << row.k_n << "\t"
                  << row.a_n << "\n";
    return 0;
}

int run_hz(long p, bool as_json) {
    json rep;
    rep["p"] = p;
    rep["class_number"] = hz_class_number(Int(p)).get_str();
    const LRWord w = sqrt_prime_word(Int(p));
    rep["word"] = w.str();
    rep["linking_with_trefoil"] = linking_with_trefoil(w).get_str();
    print_report(rep, as_json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular knot calculator: quadratic forms, Lorenz words and "
                 "braids, Alexander polynomials"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    auto* analyze = app.add_subcommand("analyze", "full pipeline report");
    std::string form_s, word_s, spec_s;
    auto* opt_form = analyze->add_option("--form", form_s, "quadratic form \"a,b,c\"");
    auto* opt_word = analyze->add_option("--word", word_s, "primitive word over {L,R}");
    auto* opt_spec = analyze->add_option("--spec", spec_s, "Lorenz spec \"p1,q1:p2,q2\"");
    opt_form->excludes(opt_word)->excludes(opt_spec);
    opt_word->excludes(opt_spec);

    auto* torus = app.add_subcommand("torus", "(p,q) torus knot");
    long torus_p = 0, torus_q = 0;
    torus->add_option("p", torus_p, "numerator")->required();
    torus->add_option("q", torus_q, "denominator")->required();

    auto* enumerate = app.add_subcommand("enumerate", "one degree in full");
    long enum_n = 0;
    int jobs = 1;
    enumerate->add_option("n", enum_n, "Alexander degree")->required();
    enumerate->add_option("--jobs", jobs, "worker threads");

    auto* table = app.add_subcommand("table", "degree table up to --max");
    long max_n = 30;
    int table_jobs = 1;
    std::string cache_dir;
    table->add_option("--max", max_n, "largest degree (even)");
    table->add_option("--jobs", table_jobs, "worker threads");
    table->add_option("--cache-dir", cache_dir,
                      "report cache directory (default: $MODKNOT_CACHE)");

    auto* hz = app.add_subcommand("hz", "class number h(-p)");
    long hz_p = 0;
    hz->add_option("p", hz_p, "prime p > 3 with p = 3 mod 4")->required();

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) {
            if (form_s.empty() && word_s.empty() && spec_s.empty())
                throw modknot::ParseError("analyze: one of --form/--word/--spec required");
            return run_analyze(form_s, word_s, spec_s, as_json);
        }
        if (torus->parsed()) return run_torus(torus_p, torus_q, as_json);
        if (enumerate->parsed()) return run_enumerate(enum_n, jobs, as_json);
        if (table->parsed()) return run_table(max_n, table_jobs, cache_dir, as_json);
        if (hz->parsed()) return run_hz(hz_p, as_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const modknot::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const modknot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
