#include "witt/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace witt {

WeylElement WeylElement::identity(int p, int k, int m, uint32_t neg) {
    return term(p, k, Exp(m, 0), Exp(m, 0), 1, neg);
}

WeylElement WeylElement::z_power(int p, int k, int m, int var, int e, uint32_t neg) {
    Exp ex(m, 0);
    ex[var] = e;
    return term(p, k, ex, Exp(m, 0), 1, neg);
}

WeylElement WeylElement::d_power(int p, int k, int m, int var, int r, uint32_t neg) {
    Exp ord(m, 0);
    ord[var] = r;
    return term(p, k, Exp(m, 0), ord, 1, neg);
}

WeylElement WeylElement::term(int p, int k, const Exp& e, const Exp& r, int64_t c, uint32_t neg) {
    WeylElement w(p, k, static_cast<int>(e.size()), neg);
    w.add_term(e, r, c);
    return w;
}

void WeylElement::add_term(const Exp& e, const Exp& r, int64_t c) {
    int64_t md = mod();
    c = pmod(c, md);
    if (!c) return;
    for (int v = 0; v < m; ++v) {
        if (r[v] < 0) throw Error("RangeError", "negative differential order");
        if (e[v] < 0 && !(neg >> v & 1u)) throw Error("NegativeExponentViolation", "coefficient exponent");
    }
    auto key = std::make_pair(e, r);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second = (it->second + c) % md;
        if (!it->second) terms.erase(it);
    }
}

int WeylElement::max_order() const {
    int o = 0;
    for (const auto& [key, c] : terms)
        for (int x : key.second) o = std::max(o, x);
    return o;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    WeylElement r = *this;
    r.neg |= o.neg;
    for (const auto& [key, c] : o.terms) r.add_term(key.first, key.second, c);
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + o.scaled(-1); }

WeylElement WeylElement::scaled(int64_t c) const {
    WeylElement r(p, k, m, neg);
    for (const auto& [key, v] : terms) r.add_term(key.first, key.second, v * pmod(c, mod()) % mod());
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (m != o.m || p != o.p || k != o.k) throw Error("VariableMismatch", "Weyl composition");
    WeylElement r(p, k, m, neg | o.neg);
    int64_t md = mod();
    for (const auto& [k1, c1] : terms) {
        const Exp& e1 = k1.first;
        const Exp& r1 = k1.second;
        for (const auto& [k2, c2] : o.terms) {
            const Exp& e2 = k2.first;
            const Exp& r2 = k2.second;
            // d^{[r1]} z^{e2} = sum_i prod binom(e2, i) z^{e2 - i} d^{[r1 - i]}
            Exp i(m, 0);
            while (true) {
                int64_t c = c1 * c2 % md;
                for (int v = 0; v < m && c; ++v) {
                    c = c * binom_mod(e2[v], i[v], md) % md;
                    c = c * binom_mod(r1[v] - i[v] + r2[v], r2[v], md) % md;
                }
                if (c) {
                    Exp e(m), ord(m);
                    for (int v = 0; v < m; ++v) {
                        e[v] = e1[v] + e2[v] - i[v];
                        ord[v] = r1[v] - i[v] + r2[v];
                    }
                    r.add_term(e, ord, c);
                }
                int v = 0;
                while (v < m && i[v] == r1[v]) i[v++] = 0;
                if (v == m) break;
                ++i[v];
            }
        }
    }
    return r;
}

WeylElement WeylElement::with_modulus(int k2) const {
    WeylElement r(p, k2, m, neg);
    for (const auto& [key, c] : terms) r.add_term(key.first, key.second, c);
    return r;
}

std::string WeylElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto name = [&](char base, int v) { return std::string(1, base) + (m == 1 ? "" : std::to_string(v)); };
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        bool bare = true;
        std::ostringstream body;
        for (int v = 0; v < m; ++v)
            if (key.first[v]) {
                body << name('z', v);
                if (key.first[v] != 1) body << "^" << key.first[v];
                bare = false;
            }
        for (int v = 0; v < m; ++v)
            if (key.second[v]) {
                body << name('d', v);
                if (key.second[v] != 1) body << "^[" << key.second[v] << "]";
                bare = false;
            }
        if (c != 1 || bare) os << c;
        os << body.str();
    }
    return os.str();
}

Laurent apply(const WeylElement& op, const Laurent& f) {
    if (op.m != f.nvars) throw Error("VariableMismatch", "operator and polynomial variable counts");
    Laurent out(f.p, op.k, f.nvars, f.neg | op.neg);
    int64_t md = out.mod();
    for (const auto& [key, c] : op.terms) {
        const Exp& e = key.first;
        const Exp& r = key.second;
        for (const auto& [a, cf] : f.terms) {
            int64_t v = c * pmod(cf, md) % md;
            for (int i = 0; i < f.nvars && v; ++i) v = v * binom_mod(a[i], r[i], md) % md;
            if (!v) continue;
            Exp res(f.nvars);
            for (int i = 0; i < f.nvars; ++i) res[i] = e[i] + a[i] - r[i];
            out.terms.emplace_back(res, v);
        }
    }
    out.normalize();
    for (const auto& t : out.terms) out.check_exp(t.first);
    return out;
}

WeylWord parse_word(const std::string& s, int m) {
    WeylWord w;
    std::string tok;
    std::istringstream is(s);
    auto var_of = [&](const std::string& t, size_t& pos) {
        int v = 0;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            v = 0;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) v = v * 10 + (t[pos++] - '0');
        }
        if (v >= m) throw Error("ParseError", "variable index out of range in '" + t + "'");
        return v;
    };
    while (is >> tok) {
        if (tok == "*") continue;
        if (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-') {
            w.push_back({-1, false, 0, std::stoll(tok)});
            continue;
        }
        size_t pos = 1;
        if (tok[0] == 'z') {
            int v = var_of(tok, pos);
            int e = 1;
            if (pos < tok.size()) {
                if (tok[pos] != '^') throw Error("ParseError", tok);
                e = std::stoi(tok.substr(pos + 1));
            }
            w.push_back({v, false, e, 1});
        } else if (tok[0] == 'd') {
            int v = var_of(tok, pos);
            if (pos == tok.size()) {
                w.push_back({v, true, 1, 1});
            } else if (tok.compare(pos, 2, "^[") == 0) {
                int r = std::stoi(tok.substr(pos + 2));
                w.push_back({v, true, r, 1});
            } else if (tok[pos] == '^') {
                int r = std::stoi(tok.substr(pos + 1));
                for (int i = 0; i < r; ++i) w.push_back({v, true, 1, 1});
            } else {
                throw Error("ParseError", tok);
            }
        } else {
            throw Error("ParseError", "unknown token '" + tok + "'");
        }
    }
    return w;
}

namespace {

// normal form of d^{[r]} z^s in one variable: list of (z exponent, order, coeff)
struct PushTable {
    int64_t md;
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, int64_t>> memo;
    const std::map<std::pair<int, int>, int64_t>& push(int r, int s) {
        auto key = std::make_pair(r, s);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::map<std::pair<int, int>, int64_t> out;
        if (r == 0 || s == 0) {
            out[{s, r}] = 1 % md;
        } else {
            for (const auto& [k, c] : push(r - 1, s - 1)) out[k] = (out[k] + c) % md;
            for (const auto& [k, c] : push(r, s - 1)) {
                auto k2 = std::make_pair(k.first + 1, k.second);
                out[k2] = (out[k2] + c) % md;
            }
            for (auto i = out.begin(); i != out.end();) i = i->second ? std::next(i) : out.erase(i);
        }
        return memo[key] = out;
    }
};

}  // namespace

WeylElement normal_form(const WeylWord& w, int p, int k, int m, uint32_t neg) {
    WeylElement acc = WeylElement::identity(p, k, m, neg);
    PushTable tab{acc.mod(), {}};
    int64_t md = acc.mod();
    for (const auto& g : w) {
        WeylElement next(p, k, m, neg);
        if (g.var < 0) {
            acc = acc.scaled(g.coeff);
            continue;
        }
        for (const auto& [key, c] : acc.terms) {
            const Exp& e = key.first;
            const Exp& r = key.second;
            int v = g.var;
            if (g.is_d) {
                Exp ord = r;
                ord[v] += g.power;
                next.add_term(e, ord, c * binom_mod(r[v] + g.power, g.power, md) % md);
            } else if (g.power >= 0) {
                for (const auto& [zk, c2] : tab.push(r[v], g.power)) {
                    Exp e2 = e, ord = r;
                    e2[v] += zk.first;
                    ord[v] = zk.second;
                    next.add_term(e2, ord, c * c2 % md);
                }
            } else {
                WeylElement one = WeylElement::term(p, k, e, r, c, neg | (1u << v));
                next = next + one * WeylElement::z_power(p, k, m, v, g.power, neg | (1u << v));
            }
        }
        acc = next;
    }
    return acc;
}

Laurent apply_word(const WeylWord& w, const Laurent& f) {
    Laurent g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->var < 0) {
            g = g.scaled(it->coeff);
            continue;
        }
        WeylElement op = it->is_d ? WeylElement::d_power(f.p, f.k, f.nvars, it->var, it->power, f.neg)
                                  : WeylElement::z_power(f.p, f.k, f.nvars, it->var, it->power, f.neg);
        g = apply(op, g);
    }
    return g;
}

WeylElement theta(int p, int n, const Exp& i, const Exp& j) {
    int m = static_cast<int>(i.size());
    int q = static_cast<int>(ipow(p, n));
    Exp top(m), low(m), zero(m, 0);
    for (int v = 0; v < m; ++v) {
        if (i[v] < 0 || i[v] >= q || j[v] < 0 || j[v] >= q) throw Error("RangeError", "theta index outside [0, p^n)");
        top[v] = q - 1;
        low[v] = q - 1 - j[v];
    }
    return WeylElement::term(p, 1, i, top) * WeylElement::term(p, 1, low, zero);
}

WeylElement z2d_divided(int p, int k, int s) {
    WeylElement w(p, k, 1);
    if (s == 0) return WeylElement::identity(p, k, 1);
    for (int i = 0; i < s; ++i) w.add_term({2 * s - i}, {s - i}, binom_mod(s - 1, i, w.mod()));
    return w;
}

WeylElement y_homogeneous(int p, int k, int d, int i, int l, int r) {
    Exp e(d + 1, 0), ord(d + 1, 0);
    e[i] = r;
    ord[l] = r;
    return WeylElement::term(p, k, e, ord, 1, (1u << (d + 1)) - 1);
}

WeylElement y_operator(int p, int k, int d, int i, int l, int r, int chart) {
    if (i == l || i < 0 || l < 0 || i > d || l > d || chart < 0 || chart > d)
        throw Error("RangeError", "y operator indices");
    return homogeneous_to_chart(y_homogeneous(p, k, d, i, l, r), chart, r);
}

WeylElement homogeneous_to_chart(const WeylElement& hop, int chart, int max_order) {
    int d = hop.m - 1;
    uint32_t all = (1u << (d + 1)) - 1;
    WeylElement out(hop.p, hop.k, d);
    int64_t md = out.mod();
    auto lift = [&](const Exp& a) {
        Exp h(d + 1, 0);
        int s = 0;
        for (int v = 0, idx = 0; v <= d; ++v) {
            if (v == chart) continue;
            h[v] = a[idx++];
            s += h[v];
        }
        h[chart] = -s;
        return h;
    };
    auto drop = [&](const Exp& h) {
        Exp a;
        for (int v = 0; v <= d; ++v)
            if (v != chart) a.push_back(h[v]);
        return a;
    };
    // g_a = op(t^a) - sum_{r < a} g_r binom(a, r) t^{a-r}, by increasing |a|
    for (int deg = 0; deg <= max_order; ++deg) {
        std::vector<std::pair<int, int>> box(d, {0, deg});
        for (const auto& a : graded_basis(d, deg, box).basis) {
            Laurent img = apply(hop, Laurent::monomial(hop.p, hop.k, lift(a), 1, all));
            std::map<Exp, int64_t> g;
            for (const auto& [h, c] : img.terms) {
                int s = 0;
                for (int x : h) s += x;
                if (s) throw Error("DegreeError", "operator does not preserve degree zero");
                g[drop(h)] = c;
            }
            for (const auto& [key, c] : out.terms) {
                const Exp& e = key.first;
                const Exp& r = key.second;
                int64_t v = c;
                bool below = false;
                for (int x = 0; x < d && v; ++x) {
                    if (r[x] > a[x]) v = 0;
                    else if (r[x] < a[x]) below = true;
                    v = v * binom_mod(a[x], r[x], md) % md;
                }
                if (!v || !below) continue;
                Exp t(d);
                for (int x = 0; x < d; ++x) t[x] = e[x] + a[x] - r[x];
                g[t] = pmod(g[t] - v, md);
            }
            for (const auto& [e, c] : g) out.add_term(e, a, c);
        }
    }
    return out;
}

WeylElement chart_to_homogeneous(const WeylElement& op, int chart) {
    int d = op.m;
    WeylElement h(op.p, op.k, d + 1, (1u << (d + 1)) - 1);
    for (const auto& [key, c] : op.terms) {
        Exp e(d + 1, 0), ord(d + 1, 0);
        int se = 0, sr = 0;
        for (int v = 0, idx = 0; v <= d; ++v) {
            if (v == chart) continue;
            e[v] = key.first[idx];
            ord[v] = key.second[idx];
            se += key.first[idx];
            sr += key.second[idx];
            ++idx;
        }
        e[chart] = sr - se;
        h.add_term(e, ord, c);
    }
    return h;
}

bool is_global_homogeneous(const WeylElement& hop, int d, int bound) {
    uint32_t all = (1u << (d + 1)) - 1;
    for (int c = 0; c <= d; ++c) {
        for (int deg = 0; deg <= bound; ++deg) {
            std::vector<std::pair<int, int>> box(d, {0, deg});
            for (const auto& rest : graded_basis(d, deg, box).basis) {
                Exp h(d + 1, 0);
                for (int v = 0, idx = 0; v <= d; ++v) {
                    if (v == c) continue;
                    h[v] = rest[idx++];
                }
                h[c] = -deg;
                Laurent img = apply(hop, Laurent::monomial(hop.p, hop.k, h, 1, all));
                for (const auto& [e, cf] : img.terms)
                    for (int v = 0; v <= d; ++v)
                        if (v != c && e[v] < 0) return false;
            }
        }
    }
    return true;
}

GlobalityReport is_global(const WeylElement& op, int d, int chart, int bound) {
    WeylElement h = chart_to_homogeneous(op, chart);
    int span = 0;
    for (const auto& [key, c] : h.terms)
        for (int v = 0; v <= d; ++v) span = std::max({span, std::abs(key.first[v]), key.second[v]});
    GlobalityReport rep;
    rep.bound = bound > 0 ? bound : 2 * span + 2;
    rep.global = is_global_homogeneous(h, d, rep.bound);
    rep.stable = is_global_homogeneous(h, d, 2 * rep.bound) == rep.global;
    return rep;
}

}  // namespace witt
