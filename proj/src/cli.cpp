#include "waring/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "waring/constructors.hpp"
#include "waring/hermite.hpp"
#include "waring/json_io.hpp"
#include "waring/ranks.hpp"
#include "waring/text.hpp"

namespace waring::cli {

namespace {

struct Options {
    bool text = false;
    std::string monomial;
    std::string method;
    std::optional<std::uint64_t> seed;
    std::string file;
    unsigned max_degree = 0;
    unsigned max_vars = 0;
    bool certify = false;
};

std::string read_input(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(arg);
    if (!f) throw ParseError("cannot open '" + arg + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string format_decomposition(const Decomposition& dec) {
    std::ostringstream s;
    s << format_monomial(dec.target) << " =";
    bool first = true;
    for (const auto& t : dec.terms) {
        const bool neg = t.coeff < 0;
        s << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        first = false;
        const Rational mag = abs(t.coeff);
        if (mag != 1) s << to_string(mag) << '*';
        s << format_linear_form(t.form) << '^' << dec.degree();
    }
    return s.str();
}

// Distinct values p/q summing to zero, drawn from the seeded generator.
std::vector<Rational> random_sum_zero_values(unsigned count, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3L * count, 3L * count);
    std::uniform_int_distribution<long> den(1, 3);
    while (true) {
        std::vector<Rational> v;
        Rational sum = 0;
        for (unsigned k = 0; k + 1 < count; ++k) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            v.push_back(r);
            sum += r;
        }
        v.push_back(-sum);
        try {
            validate_sum_zero_values(v, count);
            return v;
        } catch (const std::invalid_argument&) {
        }
    }
}

void print_rank_text(const RankReport& r, std::ostream& out) {
    out << "monomial: " << format_monomial(r.monomial) << '\n';
    out << "complex rank: " << r.complex_rank << '\n';
    if (r.real_exact)
        out << "real rank: " << *r.real_exact << " (exact)\n";
    else
        out << "real rank: " << r.real_lower << " <= rk_R <= " << r.real_upper << '\n';
    out << "upper bound method: " << to_string(r.method) << '\n';
    out << "real equals complex: " << (r.equality ? "yes" : "no") << '\n';
}

int cmd_rank(const Options& o, std::ostream& out) {
    const RankReport r = rank_report(parse_monomial(o.monomial));
    if (o.text)
        print_rank_text(r, out);
    else
        out << to_json(r).dump() << '\n';
    return ok;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const Monomial m = parse_monomial(o.monomial);
    DecomposeOptions opts;
    if (!o.method.empty()) {
        opts.method = parse_method(o.method);
        if (!opts.method) throw ParseError("unknown method '" + o.method + "'");
    }
    if (o.seed) {
        const Method chosen = opts.method.value_or(real_rank_upper(m).method);
        if (chosen != Method::a0eq1) throw ParseError("--seed applies only to the a0eq1 construction");
        const Monomial canon = canonicalize(m).monomial;
        std::mt19937_64 rng(*o.seed);
        std::vector<std::vector<Rational>> values;
        for (std::size_t i = 1; i < canon.nvars(); ++i) values.push_back(random_sum_zero_values(canon[i] + 1, rng));
        opts.a0eq1_values = std::move(values);
    }
    const RealDecomposition rd = [&] {
        try {
            return decompose_real(m, opts);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    if (o.text)
        out << format_decomposition(rd.decomposition) << "\nmethod: " << to_string(rd.method)
            << ", size " << rd.decomposition.size() << '\n';
    else
        out << to_json(rd).dump() << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Decomposition dec = decomposition_from_json(parse_json(read_input(o.file, in)));
    const bool good = verify_decomposition(dec);
    if (o.text)
        out << (good ? "verified" : "FAILED") << ": " << format_monomial(dec.target) << ", " << dec.size()
            << " terms\n";
    else
        out << Json{{"verified", good}, {"target", format_monomial(dec.target)}, {"size", dec.size()}}.dump()
            << '\n';
    if (!good) {
        err << "decomposition does not expand to " << format_monomial(dec.target) << '\n';
        return failed;
    }
    return ok;
}

int cmd_hermite(const Options& o, std::istream& in, std::ostream& out) {
    const std::string source = !o.file.empty() && o.file.front() == '{' ? o.file : read_input(o.file, in);
    const GapSystem sys = gap_system_from_json(parse_json(source));
    const PointCount count = count_real_points(sys);
    bool applies = sys.a0() >= 2;
    for (unsigned ai : sys.a()) applies = applies && ai >= sys.a0();
    const bool obstruction = applies && check_gap_obstruction(sys);
    if (o.text) {
        out << "dim: " << count.dim << '\n'
            << "signature: (" << count.inertia.positive << ", " << count.inertia.negative << ", "
            << count.inertia.zero << ")\n"
            << "real points: " << count.real << '\n'
            << "complex points: " << count.complex_distinct << '\n'
            << "gap obstruction: " << (obstruction ? "yes" : "no") << '\n';
    } else {
        Json j = to_json(count);
        j["gap_obstruction"] = obstruction;
        out << j.dump() << '\n';
    }
    return ok;
}

// Non-decreasing exponent vectors of length nv, entries >= 1, summing to d.
void canonical_exponents(std::size_t nv, unsigned d, unsigned min, std::vector<unsigned>& cur,
                         std::vector<std::vector<unsigned>>& out) {
    if (cur.size() + 1 == nv) {
        if (d >= min) {
            cur.push_back(d);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    const std::size_t left = nv - cur.size();
    for (unsigned a = min; a * left <= d; ++a) {
        cur.push_back(a);
        canonical_exponents(nv, d - a, a, cur, out);
        cur.pop_back();
    }
}

int cmd_table(const Options& o, std::ostream& out) {
    for (std::size_t nv = 2; nv <= o.max_vars; ++nv)
        for (unsigned d = static_cast<unsigned>(nv); d <= o.max_degree; ++d) {
            std::vector<std::vector<unsigned>> exps;
            std::vector<unsigned> cur;
            canonical_exponents(nv, d, 1, cur, exps);
            for (auto& e : exps) {
                const Monomial m{ExponentVector(std::move(e))};
                const RankReport r = rank_report(m);
                if (o.text) {
                    out << format_monomial(m) << "  rk_C=" << r.complex_rank << "  rk_R in [" << r.real_lower << ", "
                        << r.real_upper << "]  " << to_string(r.method);
                    if (o.certify) out << "  certified=" << decompose_real(m).decomposition.size();
                    out << '\n';
                } else {
                    Json j = to_json(r);
                    if (o.certify) j["decomposition"] = to_json(decompose_real(m));
                    out << j.dump() << '\n';
                }
                out.flush();
            }
        }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Waring ranks and certified real decompositions of monomials"};
    app.name("waring");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    auto* text_flag = app.add_flag("--text", o.text, "human-readable output");
    json_flag->excludes(text_flag);

    auto* rank = app.add_subcommand("rank", "complex rank and real rank bounds of a monomial");
    rank->add_option("monomial", o.monomial, "e.g. x0^2*x1^2*x2^2")->required();

    auto* decompose = app.add_subcommand("decompose", "certified real power-sum decomposition");
    decompose->add_option("monomial", o.monomial)->required();
    decompose->add_option("--method", o.method, "binary, a0eq1, squares or general-grid");
    decompose->add_option("--seed", o.seed, "random sum-zero values for the a0eq1 family");

    auto* verify = app.add_subcommand("verify", "check a decomposition JSON file by expansion");
    verify->add_option("file", o.file, "path, or - for stdin")->required();

    auto* hermite = app.add_subcommand("hermite-count", "count real solutions of a gap system");
    hermite->add_option("system", o.file, "path, -, or inline JSON")->required();

    auto* table = app.add_subcommand("table", "one JSON line per monomial");
    table->add_option("--max-degree", o.max_degree)->required();
    table->add_option("--max-vars", o.max_vars)->required();
    table->add_flag("--certify", o.certify, "attach a verified decomposition");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*rank) return cmd_rank(o, out);
        if (*decompose) return cmd_decompose(o, out);
        if (*verify) return cmd_verify(o, in, out, err);
        if (*hermite) return cmd_hermite(o, in, out);
        if (*table) return cmd_table(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const GapSystemError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }
    return usage;
}

}  // namespace waring::cli
