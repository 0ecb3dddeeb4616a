#include "keycomb/json_io.hpp"

#include "keycomb/errors.hpp"

namespace keycomb {

json to_json(const Composition& a) { return json(a); }

json to_json(Cell c) { return json::array({c.col, c.row}); }

json to_json(const Diagram& d) {
    json out = json::array();
    for (const Cell& c : d.cells()) out.push_back(to_json(c));
    return out;
}

json to_json(const MatchingSequence& m) {
    json out = json::array();
    for (const auto& [src, dst] : m.edges) out.push_back(json::array({to_json(src), to_json(dst)}));
    return out;
}

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [exp, coeff] : p.terms())
        out.push_back(json{{"coeff", coeff}, {"exp", exp}});
    return out;
}

json to_json(const SignedKeyExpansion& e) {
    json out = json::array();
    for (const auto& [coeff, idx] : canonicalize(e).terms)
        out.push_back(json{{"coeff", coeff}, {"index", idx}});
    return out;
}

namespace {

json diagram_set_json(const std::set<Diagram>& diagrams) {
    json out = json::array();
    for (const Diagram& d : diagrams) out.push_back(to_json(d));
    return out;
}

} // namespace

json to_json(const KohnertSpace& s) {
    return json{{"source", s.source},
                {"k", nullptr},
                {"m", 0},
                {"count", s.diagrams.size()},
                {"diagrams", diagram_set_json(s.diagrams)}};
}

json to_json(const TargetSpace& s) {
    return json{{"source", s.base},
                {"k", s.k},
                {"m", s.m},
                {"count", s.diagrams.size()},
                {"diagrams", diagram_set_json(s.diagrams)}};
}

json to_json(const RectificationTrace& t) {
    json steps = json::array();
    for (const auto& [src, dst] : t.steps)
        steps.push_back(json::array({to_json(src), to_json(dst)}));
    return json{{"steps", steps}, {"result", to_json(t.result)}};
}

json to_json(const SSYT& t) { return json(t.rows); }

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw InvalidComposition("polynomial JSON must be an array of terms");
    std::size_t nvars = 0;
    for (const json& term : j) {
        if (!term.contains("coeff") || !term.contains("exp"))
            throw InvalidComposition("polynomial term needs coeff and exp");
        nvars = std::max(nvars, term["exp"].size());
    }
    Polynomial p(nvars);
    for (const json& term : j) {
        std::vector<int> exp = term["exp"].get<std::vector<int>>();
        for (int e : exp)
            if (e < 0) throw InvalidComposition("negative exponent");
        exp.resize(nvars, 0);
        p.add_term(exp, term["coeff"].get<long long>());
    }
    return p;
}

} // namespace keycomb
