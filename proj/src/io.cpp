#include "witt/io.hpp"

#include <fstream>

namespace witt {

namespace {

json neg_list(uint32_t neg, int nvars) {
    json out = json::array();
    for (int v = 0; v < nvars; ++v)
        if (neg >> v & 1) out.push_back(v);
    return out;
}

uint32_t neg_mask(const json& j) {
    uint32_t out = 0;
    if (j.contains("neg"))
        for (int v : j.at("neg")) out |= uint32_t(1) << v;
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("ParseError", what);
}

}  // namespace

json to_json(const Laurent& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms) terms.push_back({{"e", e}, {"c", c}});
    return {{"p", f.p}, {"n", f.k}, {"vars", f.nvars}, {"neg", neg_list(f.neg, f.nvars)}, {"terms", terms}};
}

Laurent laurent_from_json(const json& j) {
    require(j.contains("p") && j.contains("vars"), "Laurent needs p and vars");
    int p = j.at("p"), k = j.value("n", 1), nvars = j.at("vars");
    require(is_prime(p) && k >= 1 && nvars >= 0, "bad Laurent header");
    Laurent f(p, k, nvars, neg_mask(j));
    for (const auto& t : j.value("terms", json::array())) {
        Exp e = t.at("e").get<Exp>();
        require(static_cast<int>(e.size()) == nvars, "exponent length differs from vars");
        f.check_exp(e);
        f.terms.emplace_back(e, t.at("c").get<int64_t>());
    }
    f.normalize();
    return f;
}

json to_json(const WittVec& x) {
    json coords = json::array();
    for (const auto& c : x.c) coords.push_back(to_json(c));
    return {{"p", x.p}, {"n", x.n()}, {"coords", coords}};
}

WittVec witt_from_json(const json& j) {
    WittVec x;
    x.p = j.at("p");
    for (const auto& c : j.at("coords")) {
        Laurent f = laurent_from_json(c);
        require(f.p == x.p && f.k == 1, "Witt coordinates live over F_p");
        x.c.push_back(f);
    }
    require(x.n() == j.value("n", x.n()), "coordinate count differs from n");
    for (const auto& c : x.c) require(c.nvars == x.c[0].nvars && c.neg == x.c[0].neg, "coordinates disagree on the base ring");
    if (!x.c.empty()) x.vars = x.c[0].nvars;
    return x;
}

json to_json(const WeylElement& op) {
    json terms = json::array();
    for (const auto& [key, c] : op.terms) terms.push_back({{"e", key.first}, {"order", key.second}, {"c", c}});
    return {{"p", op.p}, {"n", op.k}, {"vars", op.m}, {"neg", neg_list(op.neg, op.m)}, {"terms", terms}};
}

WeylElement weyl_from_json(const json& j) {
    int p = j.at("p"), k = j.value("n", 1), m = j.at("vars");
    require(is_prime(p) && k >= 1 && m >= 1, "bad Weyl header");
    WeylElement op(p, k, m, neg_mask(j));
    for (const auto& t : j.value("terms", json::array())) {
        Exp e = t.at("e").get<Exp>(), r = t.at("order").get<Exp>();
        require(static_cast<int>(e.size()) == m && static_cast<int>(r.size()) == m, "term length differs from vars");
        for (int v = 0; v < m; ++v) require(r[v] >= 0 && (e[v] >= 0 || (op.neg >> v & 1)), "exponent out of range");
        op.add_term(e, r, t.at("c").get<int64_t>());
    }
    return op;
}

json to_json(const DRWElement& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms) {
        json w = json::array();
        for (const auto& [u, v] : key.first.r) w.push_back({u, v});
        terms.push_back({{"weight", w}, {"partition", key.second.parts}, {"c", c}});
    }
    return {{"p", x.p}, {"n", x.n}, {"degree", x.degree}, {"terms", terms}};
}

DRWElement drw_from_json(const json& j) {
    DRWElement x;
    x.p = j.at("p"), x.n = j.at("n"), x.degree = j.value("degree", 0);
    for (const auto& t : j.value("terms", json::array())) {
        Weight w;
        w.p = x.p;
        for (const auto& uv : t.at("weight")) w.r.emplace_back(uv.at(0).get<int64_t>(), uv.at(1).get<int>());
        Partition P;
        P.parts = t.at("partition").get<std::vector<std::vector<int>>>();
        require(P.degree() == x.degree, "partition degree differs from element degree");
        require(w.admissible(x.n) && valid_partition(w, P), "not a basis key: " + w.str() + " " + P.str());
        x.add(w, P, t.at("c").get<int64_t>());
    }
    return x;
}

json to_json(const CohClass& c) {
    json terms = json::array();
    for (const auto& [key, v] : c.terms) terms.push_back({{"level", key.first}, {"u", key.second}, {"c", v}});
    return {{"p", c.p}, {"n", c.n}, {"d", c.d}, {"j", c.j}, {"terms", terms}, {"str", c.str()}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("ParseError", path + ": " + e.what());
    }
}

}  // namespace witt
