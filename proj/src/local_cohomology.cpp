#include "witt/local_cohomology.hpp"

#include "witt/linalg.hpp"
#include "witt/witt_diff.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace witt {

namespace {

std::string exp_str(const Exp& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

int64_t powmod(int64_t b, int64_t e, int64_t m) {
    int64_t r = 1 % m;
    b = pmod(b, m);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

// nonnegative vectors of length len with the given sum, entries <= cap
void compositions(int len, int sum, int cap, const std::function<void(const Exp&)>& f) {
    Exp v(len, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == len - 1) {
            if (left <= cap) {
                v[i] = left;
                f(v);
            }
            return;
        }
        for (int x = 0; x <= std::min(left, cap); ++x) {
            v[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (len == 0) {
        if (sum == 0) f(v);
        return;
    }
    rec(0, sum);
}

}  // namespace

bool in_index_set(const Exp& m, int j) {
    int d = static_cast<int>(m.size()) - 1;
    if (j >= d) return false;
    long s = 0;
    for (int i = 0; i <= d; ++i) {
        if (i <= j ? m[i] < 0 : m[i] >= 0) return false;
        s += m[i];
    }
    return s == 0;
}

std::vector<Exp> enumerate_index(int d, int j, int bound) {
    std::vector<Exp> out;
    if (j >= d || j < 0) return out;
    int k = d - j;
    Exp neg(k, 1);
    while (true) {
        int s = std::accumulate(neg.begin(), neg.end(), 0);
        compositions(j + 1, s, bound, [&](const Exp& pos) {
            Exp m(d + 1);
            for (int a = 0; a <= j; ++a) m[a] = pos[a];
            for (int b = 0; b < k; ++b) m[j + 1 + b] = -neg[b];
            out.push_back(m);
        });
        int i = 0;
        while (i < k && neg[i] == bound) neg[i++] = 1;
        if (i == k) break;
        ++neg[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exp> index_generators(int d, int j) {
    std::vector<Exp> out;
    if (j >= d || j < 0) return out;
    compositions(j + 1, d - j, d - j, [&](const Exp& pos) {
        Exp m(d + 1, -1);
        for (int a = 0; a <= j; ++a) m[a] = pos[a];
        out.push_back(m);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool killed(const Exp& u, int j) {
    int d = static_cast<int>(u.size()) - 1;
    if (j >= d) return true;
    for (int i = j + 1; i <= d; ++i)
        if (u[i] >= 0) return true;
    return false;
}

uint32_t inverted_mask(int d, int j) {
    uint32_t m = 0;
    for (int i = j + 1; i <= d; ++i) m |= 1u << i;
    return m;
}

CohClass CohClass::symbol(int p, int n, int d, int j, int l, const Exp& u, int64_t c) {
    CohClass x(p, n, d, j);
    x.add(l, u, c);
    return x;
}

void CohClass::add(int l, Exp u, int64_t c) {
    if (static_cast<int>(u.size()) != d + 1) throw Error("VariableMismatch", "exponent of length " + std::to_string(u.size()));
    if (std::accumulate(u.begin(), u.end(), 0L) != 0) throw Error("DegreeError", "symbol " + exp_str(u) + " is not of degree 0");
    for (int a = 0; a <= std::min(j, d); ++a)
        if (u[a] < 0) throw Error("NotInDomain", "z_" + std::to_string(a) + " is not inverted in " + exp_str(u));
    while (l > 0 && std::all_of(u.begin(), u.end(), [&](int e) { return e % p == 0; })) {
        for (auto& e : u) e /= p;
        --l;
        c *= p;
    }
    if (l >= n || killed(u, j)) return;
    int64_t md = ipow(p, n - l);
    c = pmod(c, md);
    if (!c) return;
    auto key = std::make_pair(l, u);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second = (it->second + c) % md;
        if (!it->second) terms.erase(it);
    }
}

CohClass CohClass::operator+(const CohClass& o) const {
    if (p != o.p || n != o.n || d != o.d || j != o.j) throw Error("VariableMismatch", "classes of different modules");
    CohClass r = *this;
    for (const auto& [key, c] : o.terms) r.add(key.first, key.second, c);
    return r;
}

CohClass CohClass::scaled(int64_t c) const {
    CohClass r(p, n, d, j);
    for (const auto& [key, v] : terms) r.add(key.first, key.second, pmod(c, ipow(p, n)) * v);
    return r;
}

std::vector<MonoTerm> CohClass::digits() const {
    std::vector<MonoTerm> out;
    for (const auto& [key, c] : terms) {
        int64_t v = c;
        Exp u = key.second;
        for (int l = key.first; l < n && v; ++l) {
            if (v % p) out.push_back({l, u, v % p});
            v /= p;
            for (auto& e : u) e *= p;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string CohClass::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        if (key.first) os << "V^" << key.first << "[z^" << exp_str(key.second) << "]";
        else os << "[z^" << exp_str(key.second) << "]";
    }
    return os.str();
}

CohClass class_reduce(const WittVec& x, int d, int j) {
    CohClass out(x.p, x.n(), d, j);
    if (x.n() == 0) return out;
    if (x.nvars() != d + 1) throw Error("VariableMismatch", "Witt vector in " + std::to_string(x.nvars()) + " variables");
    for (const auto& t : monomial_expand(x)) out.add(t.level, t.e, t.coeff);
    return out;
}

WittVec class_representative(const CohClass& c) {
    uint32_t neg = inverted_mask(c.d, c.j);
    if (c.terms.empty()) return wzero(c.p, c.n, c.d + 1, neg);
    std::vector<MonoTerm> ts;
    for (const auto& [key, v] : c.terms) ts.push_back({key.first, key.second, v});
    return monomial_recompose(ts, c.p, c.n, c.d + 1, neg);
}

namespace {

void check_y(int i, int l, int r, const CohClass& c) {
    if (i == l || i < 0 || l < 0 || i > c.d || l > c.d || r < 0) throw Error("RangeError", "y operator indices");
}

WeylElement y_op(int p, int d, int i, int l, int r) { return y_homogeneous(p, 1, d, i, l, r); }

// the lift z_i^r d_l^{[r]} over Z/p^len, conjugated by w~; it commutes with V
WittDiffOp y_lift(int p, int d, int i, int l, int r, int len) {
    return conjugate_operator(y_homogeneous(p, len, d, i, l, r), len - 1);
}

}  // namespace

CohClass y_action(int i, int l, int r, const CohClass& c) {
    check_y(i, l, r, c);
    CohClass out(c.p, c.n, c.d, c.j);
    if (c.n == 1) {
        for (const auto& [key, v] : c.terms) {
            const Exp& u = key.second;
            int64_t b = binom_mod(u[l], r, c.p);
            if (!b) continue;
            Exp w = u;
            w[i] += r;
            w[l] -= r;
            out.add(0, w, v * b);
        }
        return out;
    }
    uint32_t neg = inverted_mask(c.d, c.j);
    for (const auto& [key, v] : c.terms) {
        int lv = key.first, len = c.n - lv;
        WittVec t = teichmuller(Laurent::monomial(c.p, 1, key.second, 1, neg), len);
        WittVec y = apply_witt(y_lift(c.p, c.d, i, l, r, len), t);
        out = out + class_reduce(vshift(y, lv, c.n), c.d, c.j).scaled(v);
    }
    return out;
}

CohClass y_action_witt(int i, int l, int r, const CohClass& c) {
    check_y(i, l, r, c);
    WittVec x = class_representative(c);
    return class_reduce(apply_witt(y_lift(c.p, c.d, i, l, r, c.n), x), c.d, c.j);
}

CohClass y_action_weyl(int i, int l, int r, const CohClass& c) {
    check_y(i, l, r, c);
    if (c.n != 1) throw Error("RangeError", "the Weyl route acts on W_1 only");
    CohClass out(c.p, 1, c.d, c.j);
    uint32_t neg = inverted_mask(c.d, c.j);
    WeylElement op = y_op(c.p, c.d, i, l, r);
    for (const auto& [key, v] : c.terms) {
        Laurent img = apply(op, Laurent::monomial(c.p, 1, key.second, 1, neg));
        for (const auto& [e, cf] : img.terms) out.add(0, e, cf * v);
    }
    return out;
}

GenerationReport generation_run(int p, int d, int j, int bound, bool trace) {
    if (!is_prime(p)) throw Error("RangeError", "p must be prime");
    if (j < 0 || j > d) throw Error("RangeError", "need 0 <= j <= d");
    GenerationReport rep;
    rep.p = p, rep.d = d, rep.j = j, rep.bound = bound;
    std::vector<Exp> all = enumerate_index(d, j, bound);
    rep.expected = static_cast<int>(all.size());
    if (j == d) {
        rep.operators_global = true;
        return rep;
    }
    uint32_t neg = inverted_mask(d, j);
    uint32_t every = (1u << (d + 1)) - 1;

    auto redistribute_op = [&](int a, int x) {
        Exp e(d + 1, 0), r(d + 1, 0);
        e[a] = p - 1;
        e[x] = 1;
        r[a] = p;
        return WeylElement::term(p, 1, e, r, 1, every);  // T_{ax}^{p-1} y_{xa}^{[p]}
    };

    // every operator family used below must be a global differential operator
    rep.operators_global = true;
    int gb = 2 * p + 2;
    for (int a = 0; a <= j; ++a) {
        for (int b = j + 1; b <= d; ++b)
            rep.operators_global = rep.operators_global && is_global_homogeneous(y_op(p, d, a, b, 1), d, gb) &&
                                   is_global_homogeneous(y_op(p, d, a, b, p), d, gb);
        for (int x = 0; x <= j; ++x)
            if (x != a)
                rep.operators_global = rep.operators_global && is_global_homogeneous(redistribute_op(a, x), d, gb) &&
                                       is_global_homogeneous(y_op(p, d, x, a, 1), d, gb);
    }

    auto verify = [&](const WeylElement& op, const std::string& name, GenStepKind kind, const Exp& from, const Exp& to,
                      int64_t formula) {
        Laurent img = apply(op, Laurent::monomial(p, 1, from, 1, neg));
        int64_t c = pmod(img.coeff(to), p);
        if (c != pmod(formula, p))
            throw Error("InternalError", name + " on " + exp_str(from) + ": operator gives " + std::to_string(c) +
                                             ", binomial formula " + std::to_string(pmod(formula, p)));
        if (!c) throw Error("CoefficientVanished", name + " maps z^" + exp_str(from) + " to 0 * z^" + exp_str(to));
        if (trace) rep.steps.push_back({kind, name, from, to, c});
    };
    auto within = [&](const Exp& m, int cap_pos) {
        for (int i = 0; i <= d; ++i)
            if (i <= j ? m[i] > cap_pos : -m[i] > bound) return false;
        return true;
    };
    auto level_of = [&](const Exp& m) {
        int r = 0;
        for (int b = j + 1; b <= d; ++b) r = std::max(r, (-m[b] - 1) / p);
        return r;
    };
    auto nm = [](const char* f, int a, int b) {
        return std::string(f) + "_" + std::to_string(a) + std::to_string(b);
    };

    std::map<int, std::deque<Exp>> levels;
    std::set<Exp> seen_start, seen_redist;
    auto push_start = [&](const Exp& m) {
        if (seen_start.insert(m).second) levels[level_of(m)].push_back(m);
    };
    for (const auto& m : index_generators(d, j))
        if (within(m, bound)) push_start(m);

    for (int r = 0; !levels.empty() && levels.begin()->first >= r; ++r) {
        auto lit = levels.find(r);
        while (lit != levels.end() && !lit->second.empty()) {
            Exp s = lit->second.front();
            lit->second.pop_front();
            // Step 1 (Step 3 from later starts): y_{ab} while p does not divide m_b
            std::vector<Exp> stack{s};
            rep.reached.insert(s);
            while (!stack.empty()) {
                Exp v = stack.back();
                stack.pop_back();
                for (int a = 0; a <= j; ++a)
                    for (int b = j + 1; b <= d; ++b) {
                        if (v[b] % p == 0) continue;
                        Exp w = v;
                        ++w[a];
                        --w[b];
                        if (!within(w, bound) || rep.reached.count(w)) continue;
                        verify(y_op(p, d, a, b, 1), nm("y", a, b), GenStepKind::Step1, v, w, v[b]);
                        rep.reached.insert(w);
                        stack.push_back(w);
                    }
            }
            // Step 2: y_{ab}^{[p]} on a start, then move mass between z_0..z_j
            for (int b = j + 1; b <= d; ++b)
                for (int a = 0; a <= j; ++a) {
                    Exp w = s;
                    w[a] += p;
                    w[b] -= p;
                    if (-w[b] > bound || w[a] > bound + p) continue;
                    verify(y_op(p, d, a, b, p), nm("y^[p]", a, b), GenStepKind::Step2, s, w, binom_mod(s[b], p, p));
                    std::vector<Exp> st{w};
                    seen_redist.insert(w);
                    while (!st.empty()) {
                        Exp v = st.back();
                        st.pop_back();
                        if (within(v, bound)) push_start(v);
                        for (int x = 0; x <= j; ++x)
                            for (int y = 0; y <= j; ++y) {
                                int e = v[x];
                                if (x == y || e < 1 || e > 2 * p - 1) continue;
                                Exp u = v;
                                --u[x];
                                ++u[y];
                                if (u[y] > bound + p || seen_redist.count(u)) continue;
                                if (e >= p)
                                    verify(redistribute_op(x, y), nm("T^(p-1)y^[p]", x, y), GenStepKind::Redistribute, v,
                                           u, binom_mod(e, p, p));
                                else
                                    verify(y_op(p, d, y, x, 1), nm("y", y, x), GenStepKind::Redistribute, v, u, e);
                                seen_redist.insert(u);
                                st.push_back(u);
                            }
                    }
                }
        }
        if (lit != levels.end()) levels.erase(lit);
        CoverageLevel cl;
        cl.iteration = r;
        cl.neg_bound = std::min(r * p + p, bound);
        for (const auto& m : all) {
            int mx = 0;
            for (int b = j + 1; b <= d; ++b) mx = std::max(mx, -m[b]);
            if (mx > cl.neg_bound) continue;
            ++cl.expected;
            if (rep.reached.count(m)) ++cl.reached;
        }
        rep.coverage.push_back(cl);
    }
    for (const auto& m : all)
        if (!rep.reached.count(m)) rep.missing.push_back(m);
    return rep;
}

std::string ParabolicGen::str() const {
    std::ostringstream os;
    if (torus) {
        os << "diag(";
        for (size_t i = 0; i < diag.size(); ++i) os << (i ? "," : "") << diag[i];
        os << ")";
    } else {
        os << "z" << s << "->z" << s << "+" << c << "*z" << t;
    }
    return os.str();
}

bool in_parabolic(const ParabolicGen& g, int j) {
    if (g.torus) return true;
    if (g.s == g.t) return false;
    return g.s <= j || g.t > j;
}

std::vector<ParabolicGen> parabolic_generators(int p, int d, int j) {
    std::vector<ParabolicGen> out;
    for (int s = 0; s <= d; ++s)
        for (int t = 0; t <= d; ++t) {
            if (s == t) continue;
            for (int64_t c = 1; c < p; ++c) {
                ParabolicGen g;
                g.s = s, g.t = t, g.c = c;
                if (in_parabolic(g, j)) out.push_back(g);
            }
        }
    for (int i = 0; i <= d; ++i)
        for (int64_t t = 2; t < p; ++t) {
            ParabolicGen g;
            g.torus = true;
            g.diag.assign(d + 1, 1);
            g.diag[i] = t;
            out.push_back(g);
        }
    return out;
}

Laurent substitute_monomial(const ParabolicGen& g, const Exp& u, int p, int d, int j, int64_t trunc) {
    uint32_t neg = inverted_mask(d, j);
    Laurent out(p, 1, d + 1, neg);
    if (g.torus) {
        int64_t c = 1;
        for (int i = 0; i <= d; ++i) {
            int64_t inv = powmod(g.diag[i], p - 2, p);
            c = c * (u[i] >= 0 ? powmod(inv, u[i], p) : powmod(g.diag[i], -u[i], p)) % p;
        }
        return Laurent::monomial(p, 1, u, c, neg);
    }
    // (z_s + c z_t)^{u_s} = sum_k binom(u_s, k) c^k z_t^k z_s^{u_s - k}
    int64_t K;
    if (u[g.s] >= 0) K = u[g.s] + 1;
    else K = u[g.t] < 0 ? trunc * -u[g.t] : 0;
    for (int64_t k = 0; k < K; ++k) {
        int64_t cf = binom_mod(u[g.s], k, p) * powmod(g.c, k, p) % p;
        if (!cf) continue;
        Exp e = u;
        e[g.s] -= static_cast<int>(k);
        e[g.t] += static_cast<int>(k);
        out.terms.emplace_back(e, cf);
    }
    out.normalize();
    return out;
}

CohClass parabolic_action(const ParabolicGen& g, const CohClass& c) {
    if (c.n != 1) throw Error("RangeError", "class action is implemented at n = 1");
    if (!in_parabolic(g, c.j)) throw Error("NotInParabolic", g.str());
    CohClass out(c.p, 1, c.d, c.j);
    for (const auto& [key, v] : c.terms)
        for (const auto& [e, cf] : substitute_monomial(g, key.second, c.p, c.d, c.j, 1).terms) out.add(0, e, cf * v);
    return out;
}

CohClass GeneratorModule::element(const NGenerator& g) const {
    return CohClass::symbol(p, n, d, j, g.level, g.exponent);
}

bool GeneratorModule::contains(const CohClass& c) const {
    for (const auto& [key, v] : c.terms) {
        const Exp& u = key.second;
        int w = -u[j + 1];
        for (int b = j + 1; b <= d; ++b)
            if (u[b] != -w) return false;
        int r0 = 0;
        while (w % p == 0) w /= p, ++r0;
        if (w != 1 || r0 > key.first) return false;
    }
    return true;
}

GeneratorModule generator_module(int p, int n, int d, int j) {
    GeneratorModule N;
    N.p = p, N.n = n, N.d = d, N.j = j;
    N.basis_vectors = index_generators(d, j);
    int s = static_cast<int>(N.basis_vectors.size());
    std::set<std::pair<int, Exp>> seen;
    for (int l = 0; l < n; ++l)
        for (int r = 0; r <= l; ++r)
            compositions(s, static_cast<int>(ipow(p, r)), static_cast<int>(ipow(p, r)), [&](const Exp& mult) {
                Exp u(d + 1, 0);
                for (int i = 0; i < s; ++i)
                    for (int v = 0; v <= d; ++v) u[v] += mult[i] * N.basis_vectors[i][v];
                if (seen.insert({l, u}).second) N.gens.push_back({l, mult, u});
            });
    return N;
}

namespace {

// n = 1 image of T^m, kill rule applied; must stay in the span of I_j
std::vector<std::pair<int64_t, Exp>> truncated_image(const ParabolicGen& g, const GeneratorModule& N, const Exp& m) {
    std::vector<std::pair<int64_t, Exp>> out;
    for (const auto& [e, c] : substitute_monomial(g, m, N.p, N.d, N.j, 1).terms) {
        if (killed(e, N.j)) continue;
        if (!std::binary_search(N.basis_vectors.begin(), N.basis_vectors.end(), e))
            throw Error("NotStable", g.str() + " moves z^" + exp_str(m) + " outside N_1");
        out.emplace_back(c, e);
    }
    return out;
}

WittVec wpow(const WittVec& x, int e, const WittVec& one) {
    WittVec r = one;
    for (int i = 0; i < e; ++i) r = wmul(r, x);
    return r;
}

}  // namespace

CohClass parabolic_action_n(const ParabolicGen& g, const GeneratorModule& N, const NGenerator& x, NAction how) {
    if (!in_parabolic(g, N.j)) throw Error("NotInParabolic", g.str());
    int p = N.p, d = N.d, j = N.j, len = N.n - x.level;
    uint32_t neg = inverted_mask(d, j);
    CohClass out(p, N.n, d, j);
    if (how == NAction::Functorial) {
        Laurent f = substitute_monomial(g, x.exponent, p, d, j, ipow(p, len - 1));
        if (f.is_zero()) return out;
        return class_reduce(vshift(teichmuller(f, len), x.level, N.n), d, j);
    }
    if (how == NAction::Product) {
        WittVec one = wone(p, len, d + 1, neg), acc = one;
        for (size_t i = 0; i < N.basis_vectors.size(); ++i) {
            if (!x.mult[i]) continue;
            Laurent f(p, 1, d + 1, neg);
            for (const auto& [c, e] : truncated_image(g, N, N.basis_vectors[i])) f += Laurent::monomial(p, 1, e, c, neg);
            if (f.is_zero()) return out;
            acc = wmul(acc, wpow(teichmuller(f, len), x.mult[i], one));
        }
        return class_reduce(vshift(acc, x.level, N.n), d, j);
    }
    // Rewriting: [sum_m' b_m' z^m']^i as sum coeff V^s(prod [b z^m']^{e}), then V-products
    int64_t md = ipow(p, len);
    struct Factor {
        int64_t coeff;
        int level;
        Exp e;
    };
    std::vector<std::vector<Factor>> per;
    for (size_t i = 0; i < N.basis_vectors.size(); ++i) {
        if (!x.mult[i]) continue;
        auto img = truncated_image(g, N, N.basis_vectors[i]);
        if (img.empty()) return out;
        std::vector<Laurent> summands;
        for (const auto& [c, e] : img) summands.push_back(Laurent::monomial(p, 1, e, 1, neg));
        std::vector<Factor> fs;
        for (const auto& t : teichmuller_sum_power(summands, x.mult[i], len)) {
            int64_t beta = 1;
            Exp e(d + 1, 0);
            for (size_t a = 0; a < img.size(); ++a) {
                beta = beta * powmod(img[a].first, t.m[a], p) % p;
                for (int v = 0; v <= d; ++v) e[v] += t.m[a] * img[a].second[v];
            }
            fs.push_back({t.coeff * teich_digit(beta, p, len) % md, t.level, e});
        }
        per.push_back(fs);
    }
    std::vector<size_t> idx(per.size(), 0);
    while (true) {
        int64_t c = 1;
        std::vector<std::pair<int, Exp>> factors;
        for (size_t i = 0; i < per.size(); ++i) {
            const Factor& f = per[i][idx[i]];
            c = c * f.coeff % md;
            factors.emplace_back(f.level, f.e);
        }
        VProduct vp_ = factors.empty() ? VProduct{1, 0, Exp(d + 1, 0)} : v_product_normalize(p, factors);
        if (vp_.level < len) out.add(x.level + vp_.level, vp_.exponent, c * (vp_.scalar % md) % md);
        size_t i = 0;
        while (i < per.size() && ++idx[i] == per[i].size()) idx[i++] = 0;
        if (i == per.size()) break;
    }
    return out;
}

StabilityReport stability_check(int p, int n, int d, int j) {
    StabilityReport rep;
    rep.p = p, rep.n = n, rep.d = d, rep.j = j;
    GeneratorModule N = generator_module(p, n, d, j);
    for (const auto& g : parabolic_generators(p, d, j))
        for (const auto& x : N.gens) {
            ++rep.checked;
            std::string where = g.str() + " on V^" + std::to_string(x.level) + "[z^" + exp_str(x.exponent) + "]";
            CohClass rw = parabolic_action_n(g, N, x, NAction::Rewriting);
            CohClass pr = parabolic_action_n(g, N, x, NAction::Product);
            if (rw != pr) rep.route_mismatches.push_back(where + ": " + rw.str() + " vs " + pr.str());
            if (!N.contains(rw)) rep.rewriting_failures.push_back(where + " = " + rw.str());
            CohClass fu = parabolic_action_n(g, N, x, NAction::Functorial);
            if (!N.contains(fu)) rep.functorial_escapes.push_back(where + " = " + fu.str());
        }
    return rep;
}

CrossCheck small_case_crosscheck(int p, int d, int j, int n, int box) {
    CrossCheck cc;
    cc.p = p, cc.n = n, cc.d = d, cc.j = j, cc.box = box;
    cc.symbol_layers.assign(n, 0);
    cc.cech_layers.assign(n, 0);
    if (j >= d) return cc;
    uint32_t neg = inverted_mask(d, j);
    int k = d - j;
    // degree-0 monomials with z_0..z_j exponents >= 0 inside the box
    std::vector<Exp> monos;
    Exp u(d + 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == d + 1) {
            if (std::accumulate(u.begin(), u.end(), 0) == 0) monos.push_back(u);
            return;
        }
        for (int e = (i <= j ? 0 : -box); e <= box; ++e) {
            u[i] = e;
            rec(i + 1);
        }
    };
    rec(0);

    // Cech side: cover {D+(z_b) : b > j}; z^u lives on U_J iff u_b >= 0 for b outside J
    int cech = 0;
    for (const auto& m : monos) {
        auto present = [&](uint32_t J) {
            for (int b = 0; b < k; ++b)
                if (!(J >> b & 1) && m[j + 1 + b] < 0) return false;
            return true;
        };
        uint32_t full = (1u << k) - 1;
        int h;
        if (k == 1) {
            h = 1;  // H^0 of the affine chart
            if (std::all_of(m.begin(), m.end(), [](int e) { return e == 0; })) h = 0;  // modulo W_n(k)
        } else {
            std::vector<uint32_t> src;
            for (int b = 0; b < k; ++b)
                if (present(full & ~(1u << b))) src.push_back(full & ~(1u << b));
            MatZ D(1, std::max<size_t>(src.size(), 1));
            D.setZero();
            for (size_t c = 0; c < src.size(); ++c) {
                int b = __builtin_ctz(full & ~src[c]);
                D(0, c) = b % 2 ? -1 : 1;
            }
            h = 1 - (src.empty() ? 0 : rank_mod_p(D, p));
        }
        cech += h;
    }
    // symbol side: gr^l coordinates of V^l([z^u])
    for (int l = 0; l < n; ++l) {
        cc.cech_layers[l] = cech;
        std::map<std::pair<int, Exp>, int> cols;
        std::vector<std::vector<std::pair<int, int64_t>>> rows;
        for (const auto& m : monos) {
            WittVec x = vshift(teichmuller(Laurent::monomial(p, 1, m, 1, neg), n - l), l, n);
            CohClass c = class_reduce(x, d, j);
            std::vector<std::pair<int, int64_t>> row;
            for (const auto& [key, v] : c.terms) {
                int e = vp(v, p);
                if (key.first + e != l) continue;
                auto it = cols.emplace(key, static_cast<int>(cols.size())).first;
                row.emplace_back(it->second, (v / ipow(p, e)) % p);
            }
            rows.push_back(row);
        }
        if (cols.empty()) continue;
        MatZ A = MatZ::Zero(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r]) A(static_cast<long>(r), c) = v;
        cc.symbol_layers[l] = rank_mod_p(A, p);
    }
    return cc;
}

}  // namespace witt
