#include "waring/json_io.hpp"

#include "waring/text.hpp"

namespace waring {

Json to_json(const Decomposition& dec) {
    Json terms = Json::array();
    for (const auto& t : dec.terms) {
        Json form = Json::array();
        for (const auto& c : t.form.coefficients()) form.push_back(to_string(c));
        terms.push_back({{"coeff", to_string(t.coeff)}, {"form", std::move(form)}});
    }
    return {{"target", format_monomial(dec.target)}, {"degree", dec.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const RealDecomposition& rd) {
    Json j = to_json(rd.decomposition);
    j["method"] = to_string(rd.method);
    j["size"] = rd.decomposition.size();
    const auto& d = rd.diagnostic;
    j["diagnostic"] = {{"equations", d.equations},
                       {"unknowns", d.unknowns},
                       {"rank", d.rank},
                       {"null_dimension", d.null_dimension},
                       {"pruned", d.pruned}};
    return j;
}

Json to_json(const RankReport& r) {
    Json exps = Json::array();
    for (unsigned a : r.monomial.exponents().values()) exps.push_back(a);
    return {{"monomial", format_monomial(r.monomial)},
            {"exponents", std::move(exps)},
            {"complex_rank", r.complex_rank},
            {"real_upper", r.real_upper},
            {"real_exact", r.real_exact ? Json(*r.real_exact) : Json(nullptr)},
            {"real_lower", r.real_lower},
            {"equality", r.equality},
            {"method", to_string(r.method)}};
}

Json to_json(const PointCount& c) {
    return {{"dim", c.dim},
            {"signature", {c.inertia.positive, c.inertia.negative, c.inertia.zero}},
            {"real_points", c.real},
            {"complex_points", c.complex_distinct}};
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Rational rational_field(const Json& j) {
    if (!j.is_string()) throw ParseError("rationals must be JSON strings like \"3/7\", got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

unsigned count_field(const Json& j) {
    if (!j.is_number_unsigned()) throw ParseError("expected a non-negative integer, got " + j.dump());
    return j.get<unsigned>();
}

}  // namespace

Decomposition decomposition_from_json(const Json& j) {
    const Json& target = field(j, "target");
    if (!target.is_string()) throw ParseError("'target' must be a string");
    Monomial m = parse_monomial(target.get<std::string>());
    if (j.contains("degree") && count_field(j.at("degree")) != m.degree())
        throw ParseError("'degree' does not match the target monomial");

    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("'terms' must be an array");
    Decomposition dec{m, {}};
    for (const Json& t : terms) {
        Rational c = rational_field(field(t, "coeff"));
        if (c == 0) throw ParseError("decomposition coefficients must be nonzero");
        const Json& form = field(t, "form");
        if (!form.is_array() || form.size() != m.nvars())
            throw ParseError("'form' must list " + std::to_string(m.nvars()) + " coefficients");
        std::vector<Rational> coords;
        for (const Json& x : form) coords.push_back(rational_field(x));
        try {
            dec.terms.push_back({std::move(c), LinearForm(std::move(coords))});
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return dec;
}

GapSystem gap_system_from_json(const Json& j) {
    const Json& gens = field(j, "generators");
    const Json& a_json = field(j, "a");
    if (!gens.is_array() || !a_json.is_array()) throw ParseError("'generators' and 'a' must be arrays");
    std::vector<unsigned> a;
    for (const Json& x : a_json) a.push_back(count_field(x));
    const unsigned a0 = count_field(field(j, "a0"));
    const std::size_t n = a.size();
    if (gens.size() != n) throw ParseError("need exactly one generator per entry of 'a'");

    std::vector<Polynomial> generators;
    for (const Json& g : gens) {
        if (!g.is_string()) throw ParseError("generators must be strings");
        // parse over X0..Xn, then drop the unused X0 slot
        const Polynomial wide = parse_polynomial(g.get<std::string>(), n + 1).polynomial;
        Polynomial p(n);
        for (const auto& [e, c] : wide.terms()) {
            if (e[0] != 0) throw ParseError("gap-system variables are X1..X" + std::to_string(n) + "; found X0");
            auto v = e.values();
            p.add_term(ExponentVector(std::vector<unsigned>(v.begin() + 1, v.end())), c);
        }
        generators.push_back(std::move(p));
    }
    return GapSystem::from_generators(generators, std::move(a), a0);
}

}  // namespace waring
