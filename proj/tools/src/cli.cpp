#include "k3fib_cli/cli.hpp"

#include "k3fib_cli/selftest.hpp"

#include "k3fib/engine.hpp"
#include "k3fib/errors.hpp"
#include "k3fib/factor.hpp"
#include "k3fib/fibgen.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/salem.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace k3fib::cli {
namespace {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Output {
    Json payload = Json::object();
    std::vector<std::string> errata;
    int exit_code = 0;
};

std::string num(const Integer& v) { return to_string(v); }
std::string num(const Rational& v) { return to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(unsigned v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

std::string real(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

Integer parse_int(const std::string& text, const char* what) {
    try {
        return parse_integer(text);
    } catch (const std::invalid_argument&) {
        throw InputError(std::string(what) + ": not an integer: '" + text + "'");
    }
}

std::uint64_t parse_u64(const std::string& text, const char* what, std::uint64_t min, std::uint64_t max) {
    const Integer v = parse_int(text, what);
    if (v < from_uint64(min) || v > from_uint64(max)) {
        throw InputError(std::string(what) + " must lie in [" + std::to_string(min) + ", " + std::to_string(max) +
                         "], got " + text);
    }
    return to_uint64(v);
}

std::int64_t parse_index(const std::string& text, const char* what, std::uint64_t limit, bool allow_negative) {
    const Integer v = parse_int(text, what);
    const Integer bound = from_uint64(limit);
    if (abs(v) > bound) throw InputError(std::string(what) + " exceeds the limit " + std::to_string(limit) + " (see --limit-n)");
    if (!allow_negative && sgn(v) < 0) throw InputError(std::string(what) + " must be non-negative");
    return to_int64(v);
}

Sign parse_sign(const std::string& text) {
    if (text == "1" || text == "+1" || text == "+") return Sign::plus;
    if (text == "-1" || text == "-") return Sign::minus;
    throw InputError("eps must be +1 or -1, got '" + text + "'");
}

IntPolynomial parse_poly(const std::string& text) {
    std::vector<Integer> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_int(item, "coefficient"));
    if (coeffs.empty() || text.back() == ',') throw InputError("polynomial: expected comma-separated coefficients, got '" + text + "'");
    IntPolynomial p(std::move(coeffs));
    if (p.is_zero()) throw InputError("polynomial must be nonzero");
    return p;
}

Json matrix_json(const IntMatrix2& m) {
    return Json::array({Json::array({num(m.e[0]), num(m.e[1])}), Json::array({num(m.e[2]), num(m.e[3])})});
}

Json matrix_json(const RationalMatrix2& m) {
    return Json::array({Json::array({num(m.e[0]), num(m.e[1])}), Json::array({num(m.e[2]), num(m.e[3])})});
}

Json integers_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(num(x));
    return out;
}

Json check_json(const FilterCheck& f) { return Json{{"id", f.id}, {"passed", f.passed}, {"detail", f.detail}}; }

Json candidate_json(const CandidatePair& c) {
    Json checks = Json::array();
    for (const auto& f : c.checks) checks.push_back(check_json(f));
    return Json{{"l", num(c.l)},
                {"k", num(c.k)},
                {"tau", num(c.tau)},
                {"action", to_string(c.action)},
                {"verdict", to_string(c.verdict)},
                {"checks", checks}};
}

Json keys_json(const std::vector<std::pair<unsigned, std::int64_t>>& keys) {
    Json out = Json::array();
    for (const auto& [l, k] : keys) out.push_back(Json{{"l", num(l)}, {"k", num(k)}});
    return out;
}

Json salem_json(const SalemData& s) {
    return Json{{"tau", num(s.tau)},
                {"polynomial", s.polynomial.to_string()},
                {"lambda", real(s.lambda)},
                {"entropy", real(s.entropy)},
                {"relative_residual", real(s.relative_residual)}};
}

Json report_json(const AnalysisReport& r) {
    Json candidates = Json::array();
    std::vector<std::pair<unsigned, std::int64_t>> survivors;
    for (const auto& c : r.candidates) {
        candidates.push_back(candidate_json(c));
        if (c.verdict == Verdict::survives) survivors.push_back(c.key());
    }
    Json shapes = Json::array();
    for (const auto& s : r.char_poly_shapes) {
        shapes.push_back(Json{{"l", num(s.l)}, {"multiplicity", num(s.multiplicity)}, {"text", s.text}});
    }
    Json salem = Json::array();
    for (const auto& s : r.salem) salem.push_back(salem_json(s));
    return Json{{"m", num(r.m)},
                {"a", num(r.a)},
                {"discriminant", num(r.discriminant)},
                {"discriminant_primes", integers_json(r.discriminant_primes)},
                {"entry_point", num(r.entry_point)},
                {"theorem1_applies", r.theorem1_applies},
                {"generator", r.generator ? candidate_json(*r.generator) : Json(nullptr)},
                {"candidates", candidates},
                {"survivors", keys_json(survivors)},
                {"conclusion", r.conclusion},
                {"char_poly_shapes", shapes},
                {"salem", salem}};
}

void append_flags(std::vector<std::string>& into, const std::vector<std::string>& flags) {
    for (const auto& f : flags) {
        if (std::find(into.begin(), into.end(), f) == into.end()) into.push_back(f);
    }
}

struct Args {
    std::vector<std::string> pos;
    std::vector<std::string> entries;
    std::string suite;
};

using Handler = std::function<Output(const Args&, std::uint64_t limit)>;

Output cmd_fib(const Args& a, std::uint64_t limit) {
    const GenFibParams p(parse_u64(a.pos[0], "a", 1, UINT64_MAX));
    Output o;
    o.payload["value"] = num(gen_fib(p, parse_index(a.pos[1], "n", limit, true)));
    return o;
}

Output cmd_member(const Args& a, std::uint64_t) {
    const GenFibParams p(parse_u64(a.pos[0], "a", 1, UINT64_MAX));
    const MembershipResult r = classify_membership(p, parse_int(a.pos[1], "n"));
    Output o;
    o.payload["member"] = r.member;
    Json matches = Json::array();
    for (const auto& m : r.matches) {
        matches.push_back(Json{{"index", num(m.index)}, {"parity", to_string(m.parity)}, {"square_witness", num(m.square_witness)}});
    }
    o.payload["matches"] = matches;
    return o;
}

Output cmd_entry(const Args& a, std::uint64_t limit) {
    const GenFibParams p(parse_u64(a.pos[0], "a", 1, UINT64_MAX));
    Output o;
    o.payload["value"] = num(entry_point(p, parse_u64(a.pos[1], "m", 2, limit)));
    return o;
}

Output cmd_trace(const Args& a, std::uint64_t limit) {
    const GenFibParams p(parse_u64(a.pos[0], "a", 1, UINT64_MAX));
    Output o;
    o.payload["value"] = num(salem_trace_of_power(p, parse_index(a.pos[1], "n", limit, false)));
    return o;
}

Output cmd_gram(const Args& a, std::uint64_t) {
    const EvenLattice2 L = EvenLattice2::make_Lma(parse_u64(a.pos[0], "m", 1, UINT64_MAX), parse_u64(a.pos[1], "a", 1, UINT64_MAX));
    const auto [rx, ry] = L.cone_reference();
    Output o;
    o.payload["gram"] = matrix_json(L.gram());
    o.payload["discriminant"] = num(L.discriminant());
    o.payload["hyperbolic"] = L.hyperbolic();
    o.payload["cone_reference"] = Json::array({num(rx), num(ry)});
    return o;
}

Output cmd_abpow(const Args& a, std::uint64_t limit) {
    const Isometry2 g = ab_power(parse_u64(a.pos[0], "a", 1, UINT64_MAX), parse_index(a.pos[1], "n", limit, true));
    Output o;
    o.payload["matrix"] = matrix_json(g.matrix);
    o.payload["trace"] = num(g.matrix.trace());
    o.payload["det"] = num(g.matrix.det());
    return o;
}

Output cmd_isometry(const Args& a, std::uint64_t) {
    const std::uint64_t m = parse_u64(a.pos[0], "m", 1, UINT64_MAX);
    const std::uint64_t av = parse_u64(a.pos[1], "a", 1, UINT64_MAX);
    if (a.entries.size() != 4) throw InputError("isometry: expected 4 matrix entries (row-major) after --");
    IntMatrix2 g;
    for (std::size_t i = 0; i < 4; ++i) g.e[i] = parse_int(a.entries[i], "matrix entry");
    const EvenLattice2 L = EvenLattice2::make_Lma(m, av);
    const Isometry2 iso{g};
    Output o;
    o.payload["matrix"] = matrix_json(g);
    o.payload["isometry"] = is_isometry(iso, L);
    if (!is_isometry(iso, L)) return o;
    o.payload["plus_isometry"] = is_plus_isometry(iso, L);
    const auto w = word_decompose(iso, m, av);
    o.payload["decomposition"] = w ? Json{{"sign", num(value(w->sign))}, {"word", w->word}} : Json(nullptr);
    o.payload["disc_action"] = Json{{"plus", disc_action(iso, L, Sign::plus).holds}, {"minus", disc_action(iso, L, Sign::minus).holds}};
    return o;
}

Output cmd_discact(const Args& a, std::uint64_t limit) {
    const std::uint64_t m = parse_u64(a.pos[0], "m", 1, UINT64_MAX);
    const std::uint64_t av = parse_u64(a.pos[1], "a", 1, UINT64_MAX);
    const std::int64_t n = parse_index(a.pos[2], "n", limit, true);
    const Sign eps = parse_sign(a.pos[3]);
    const DiscriminantAction d = disc_action(ab_power(av, n), EvenLattice2::make_Lma(m, av), eps);
    Output o;
    o.payload["epsilon"] = num(value(d.epsilon));
    o.payload["holds"] = d.holds;
    o.payload["integrality_matrix"] = matrix_json(integrality_matrix(n, m, av, eps));
    return o;
}

Output cmd_cyclotomic(const Args& a, std::uint64_t limit) {
    const unsigned l = static_cast<unsigned>(parse_u64(a.pos[0], "l", 1, std::min<std::uint64_t>(limit, UINT32_MAX)));
    const IntPolynomial phi = cyclotomic(l);
    Output o;
    o.payload["polynomial"] = phi.to_string();
    o.payload["degree"] = num(phi.degree());
    o.payload["coefficients"] = integers_json(phi.coefficients());
    return o;
}

Output cmd_resultant(const Args& a, std::uint64_t) {
    const IntPolynomial p = parse_poly(a.pos[0]);
    const IntPolynomial q = parse_poly(a.pos[1]);
    const Integer r = resultant(p, q);
    Output o;
    o.payload["value"] = num(r);
    if (auto flag = published_resultant_flag(p, q, r)) o.errata.push_back(*flag);
    return o;
}

Output cmd_salem(const Args& a, std::uint64_t) {
    const SalemData s = salem_data(parse_int(a.pos[0], "tau"));
    Output o;
    o.payload = salem_json(s);
    o.payload["palindromic"] = is_palindromic(s.polynomial);
    return o;
}

Output cmd_pell(const Args& a, std::uint64_t limit) {
    const Integer D = parse_int(a.pos[0], "D");
    const Sign eps = parse_sign(a.pos[1]);
    const std::uint64_t bound = parse_u64(a.pos[2], "bound", 0, limit);
    Json sols = Json::array();
    for (const auto& s : pell_solutions(D, eps, bound)) sols.push_back(Json{{"alpha", num(s.alpha)}, {"beta", num(s.beta)}});
    Output o;
    o.payload["solutions"] = sols;
    return o;
}

Output cmd_candidates(const Args& a, std::uint64_t limit) {
    const AnalysisReport r = generator_candidates(parse_u64(a.pos[0], "m", 2, limit), parse_u64(a.pos[1], "a", 1, UINT64_MAX));
    Output o;
    o.payload = report_json(r);
    o.errata = r.errata_flags;
    return o;
}

Output cmd_example100(const Args& a, std::uint64_t limit) {
    const TargetScenarioReport s = example_100_scenario(parse_u64(a.pos[0], "m", 2, limit));
    Json considered = Json::array();
    for (const auto& c : s.considered) considered.push_back(candidate_json(c));
    Output o;
    o.payload["m"] = num(s.m);
    o.payload["target"] = num(s.target);
    o.payload["considered"] = considered;
    o.payload["literal_survivors"] = keys_json(s.literal_survivors);
    o.payload["derived_survivors"] = keys_json(s.derived_survivors);
    o.payload["closure"] = report_json(s.closure);
    append_flags(o.errata, s.errata_flags);
    return o;
}

Output cmd_selftest(const Args& a, std::uint64_t) {
    std::vector<const Suite*> chosen;
    if (!a.suite.empty()) {
        const Suite* s = find_suite(a.suite);
        if (!s) {
            std::string names;
            for (const auto& x : suites()) names += " " + x.name;
            throw InputError("unknown suite '" + a.suite + "'; available:" + names);
        }
        chosen.push_back(s);
    } else {
        for (const auto& s : suites()) chosen.push_back(&s);
    }
    Json results = Json::array();
    std::uint64_t passed = 0;
    for (const Suite* s : chosen) {
        const SuiteResult r = s->run();
        passed += r.passed();
        Json j{{"name", r.name}, {"passed", r.passed()}, {"checked", num(r.checked)}, {"failures", num(r.failures)}};
        if (!r.passed()) j["first_counterexample"] = r.first_counterexample;
        results.push_back(j);
    }
    Output o;
    o.payload["suites"] = results;
    o.payload["passed"] = num(passed);
    o.payload["failed"] = num(static_cast<std::uint64_t>(chosen.size()) - passed);
    o.exit_code = passed == chosen.size() ? 0 : 1;
    return o;
}

void flatten_into(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        if (j.empty()) out.emplace_back(path, "{}");
        for (const auto& [k, v] : j.items()) flatten_into(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const Json& payload) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(payload, "", out);
    return out;
}

std::string render_human(const Json& payload, const std::vector<std::string>& errata_flags) {
    std::ostringstream os;
    const auto leaves = flatten(payload);
    if (leaves.size() == 1 && leaves[0].first == "value") {
        os << leaves[0].second << '\n';
    } else {
        for (const auto& [k, v] : leaves) os << k << ": " << v << '\n';
    }
    for (const auto& f : errata_flags) os << "errata: " << f << '\n';
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for generalized Fibonacci sequences, rank-2 K3 lattices and Salem traces", "k3fib"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(
        "Polynomials are comma-separated integer coefficients, constant term first\n"
        "(x^2 - 3x + 1 is 1,-3,1). Matrices are entered row-major.\n"
        "Exit codes: 0 success, 1 input error, 2 internal invariant violation.");

    bool json = false;
    bool quiet = false;
    std::uint64_t limit = 10'000'000;
    app.add_flag("--json", json, "Machine-readable output; all numbers are decimal strings");
    app.add_flag("--quiet", quiet, "Suppress standard output; report through the exit code");
    app.add_option("--limit-n", limit, "Upper bound for index-like arguments")->capture_default_str();

    Args parsed;
    std::string chosen;
    std::map<std::string, Handler> handlers;
    const auto add = [&](const char* name, const char* help, std::vector<const char*> positionals, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->final_callback([&chosen, name] { chosen = name; });
        parsed.pos.reserve(8);
        for (std::size_t i = 0; i < positionals.size(); ++i) {
            sub->add_option_function<std::string>(
                   positionals[i],
                   [&parsed, i](const std::string& v) {
                       if (parsed.pos.size() <= i) parsed.pos.resize(i + 1);
                       parsed.pos[i] = v;
                   })
                ->required();
        }
        handlers[name] = std::move(h);
        return sub;
    };

    add("fib", "Term a_n of the sequence a_{n+2} = a a_{n+1} + a_n (any integer n)", {"a", "n"}, cmd_fib);
    add("member", "Whether n is a term, with every matching index and its square witness", {"a", "n"}, cmd_member);
    add("entry", "Least e >= 1 with m | a_e", {"a", "m"}, cmd_entry);
    add("trace", "Trace of (AB)^n", {"a", "n"}, cmd_trace);
    add("gram", "Gram matrix of L_m(a) = m[[2,a],[a,-2]]", {"m", "a"}, cmd_gram);
    add("abpow", "The matrix (AB)^n (any integer n)", {"a", "n"}, cmd_abpow);
    CLI::App* iso = add("isometry", "Classify a 2x2 integer matrix on L_m(a): isometry <m> <a> -- g11 g12 g21 g22",
                        {"m", "a"}, cmd_isometry);
    iso->add_option("entries", parsed.entries, "Matrix entries, row-major")->expected(4)->required();
    add("discact", "Whether (AB)^n acts on the discriminant group as eps * id", {"m", "a", "n", "eps"}, cmd_discact);
    add("cyclotomic", "Cyclotomic polynomial Phi_l", {"l"}, cmd_cyclotomic);
    add("resultant", "Resultant of two polynomials given as ascending coefficient lists", {"p", "q"}, cmd_resultant);
    add("salem", "Salem polynomial x^2 - tau x + 1, its root and entropy", {"tau"}, cmd_salem);
    add("pell", "Solutions of alpha^2 - D beta^2 = 4 eps with 0 <= beta <= bound", {"D", "eps", "bound"}, cmd_pell);
    add("candidates", "Generator candidates (l, k) on L_m(a) with every filter verdict", {"m", "a"}, cmd_candidates);
    add("example100", "Target-exponent enumeration for a = 1, m | f_100, m not dividing f_50", {"m"}, cmd_example100);
    CLI::App* st = add("selftest", "Run the built-in property suites", {}, cmd_selftest);
    st->add_option("--suite", parsed.suite, "Run a single suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const auto emit = [&](const std::string& status, const Json& payload, const std::vector<std::string>& errata) {
        if (quiet) return;
        if (json) {
            Json doc{{"command", chosen}, {"status", status}, {"payload", payload}, {"errata_flags", errata}};
            out << doc.dump(2) << '\n';
        } else if (status == "ok") {
            out << render_human(payload, errata);
        }
    };
    const auto fail = [&](const std::string& status, const std::string& message, int code) {
        err << "k3fib " << chosen << ": " << message << '\n';
        emit(status, Json{{"message", message}}, {});
        return code;
    };

    try {
        Output o = handlers.at(chosen)(parsed, limit);
        emit("ok", o.payload, o.errata);
        return o.exit_code;
    } catch (const InvariantViolation& e) {
        return fail("internal_error", e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return fail("input_error", e.what(), 1);
    } catch (const std::out_of_range& e) {
        return fail("input_error", e.what(), 1);
    } catch (const FactorizationError& e) {
        return fail("input_error", e.what(), 1);
    } catch (const std::exception& e) {
        return fail("internal_error", e.what(), 2);
    }
}

}  // namespace k3fib::cli
