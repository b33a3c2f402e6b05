// SPDX-License-Identifier: Apache-2.0
#include "exfeec/json_io.hpp"

#include <algorithm>

namespace exfeec {

json to_json(const QuadExt& x) {
    if (x.is_rational()) return x.a().str();
    return json{{"a", x.a().str()}, {"b", x.b().str()}, {"radicand", x.radicand()}};
}

json to_json(const IncreasingMap& m) { return m.values(); }

json to_json(const MultiIndex& a) { return a.exponents; }

json to_json(const PolyForm& w) {
    json terms = json::array();
    PolyForm c = canonicalize(w);
    for (const auto& [key, x] : c.terms()) {
        std::vector<int> dl;
        for (int v : IncreasingMap::from_mask(key.mask).values()) dl.push_back(w.host().at_position(v));
        terms.push_back({{"coeff", x.str()}, {"alpha", unpack_exps(key.exps, w.nvars())}, {"dl", dl}});
    }
    return json{{"host", to_json(w.host())}, {"k", w.k()}, {"text", c.str()}, {"terms", terms}};
}

json to_json(const Matrix<Rational>& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const IsoReport& r) {
    return json{{"statement", r.statement}, {"n", r.n}, {"k", r.k}, {"r", r.r},
                {"source_dim", r.source_dim}, {"target_dim", r.target_dim}, {"image_rank", r.image_rank},
                {"containment", r.containment}, {"injective", r.injective}, {"dims_equal", r.dims_equal},
                {"surjective", r.surjective}};
}

json to_json(const DualReport& r) {
    return json{{"family", family_name(r.family)}, {"n", r.n}, {"k", r.k}, {"r", r.r},
                {"dimension", r.trace_free_basis.size()}, {"square", r.square}, {"det", r.det.str()},
                {"invertible", r.invertible}, {"gram_symmetric", r.gram_symmetric}, {"gram_positive", r.gram_positive},
                {"vandermonde", to_json(r.vandermonde)}, {"gram", to_json(r.gram)}};
}

json to_json(const LegacyHReport& r) {
    auto entries = [](const std::vector<LegacyHEntry>& v) {
        json a = json::array();
        for (const auto& e : v) a.push_back({{"generator", e.generator}, {"rho", to_json(e.rho)}, {"sign", e.sign}});
        return a;
    };
    return json{{"n", r.n}, {"k", r.k}, {"r", r.r}, {"all_signed", r.all_signed}, {"consistent", r.consistent},
                {"full", entries(r.full)}, {"trimmed", entries(r.trimmed)}};
}

json to_json(const ProxyReport& r) {
    json j{{"boundary_ok", r.boundary_ok}, {"relation_found", r.relation_found}};
    if (r.relation_found) j["relation"] = r.relation.str();
    return j;
}

json to_json(const VanishingReport& r) {
    return json{{"pointwise", r.pointwise}, {"symbolic", r.symbolic}, {"points_checked", r.points_checked}};
}

json to_json(const BubbleTrace& W) {
    json comps = json::array();
    for (const auto& [sigma, c] : W.components)
        comps.push_back({{"sigma", to_json(sigma)}, {"form", to_json(c)}});
    return json{{"host", to_json(W.host)}, {"k", W.k}, {"components", comps}};
}

json to_json(const GeometricDecomposition& G) {
    json comps = json::array();
    for (const auto& c : G.components)
        comps.push_back({{"sigma", to_json(c.sigma)}, {"dimension", c.local.dimension()}});
    return json{{"host", to_json(G.host)}, {"k", G.k}, {"r", G.r}, {"family", family_name(G.family)},
                {"target_dim", G.target_dim}, {"dim_sum", G.dim_sum}, {"joint_rank", G.joint},
                {"independent", G.independent}, {"dims_match", G.dims_match}, {"members_ok", G.members_ok},
                {"spans_target", G.spans_target}, {"components", comps}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

PolyForm polyform_from_json(const json& j) {
    IncreasingMap host(0, j.at("host").get<std::vector<int>>());
    const int k = j.at("k").get<int>();
    PolyForm w(host, k);
    for (const auto& t : j.at("terms")) {
        auto alpha = t.at("alpha").get<std::vector<int>>();
        if (static_cast<int>(alpha.size()) != host.size()) throw std::invalid_argument("term alpha must have one entry per vertex");
        std::vector<int> local;
        for (int v : t.value("dl", std::vector<int>{})) {
            int p = host.position_of(v);
            if (p < 0) throw std::invalid_argument("dl label " + std::to_string(v) + " not in host");
            local.push_back(p);
        }
        Rational c = rational_from_json(t.at("coeff"));
        if (permutation_sign(local) < 0) c = -c;
        std::sort(local.begin(), local.end());
        if (std::adjacent_find(local.begin(), local.end()) != local.end()) continue;
        w += PolyForm::monomial(host, MultiIndex(alpha), IncreasingMap(0, local), c);
    }
    return w;
}

}  // namespace exfeec
