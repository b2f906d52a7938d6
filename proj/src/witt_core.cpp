#include "witt/witt_core.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace witt {

namespace {

using ZPoly = std::unordered_map<uint64_t, mpz_class>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.reserve(a.size() * 2 + b.size() * 2);
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto& slot = r[ka + kb];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

ZPoly zpow(const ZPoly& a, int e) {
    ZPoly result{{0, mpz_class(1)}}, base = a;
    while (e) {
        if (e & 1) result = zmul(result, base);
        e >>= 1;
        if (e) base = zmul(base, base);
    }
    return result;
}

void zaxpy(ZPoly& acc, const ZPoly& a, const mpz_class& s) {
    for (const auto& [k, c] : a) {
        auto& slot = acc[k];
        mpz_addmul(slot.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
}

uint64_t var_key(int v, int e) { return static_cast<uint64_t>(e) << (8 * v); }

ZPoly ghost_poly(int p, int k, int offset) {
    ZPoly g;
    mpz_class pj = 1;
    for (int j = 0; j <= k; ++j) {
        g[var_key(offset + j, static_cast<int>(ipow(p, k - j)))] += pj;
        pj *= p;
    }
    return g;
}

UPoly to_upoly(const ZPoly& z, int nvars) {
    UPoly u;
    u.nvars = nvars;
    u.terms.assign(z.begin(), z.end());
    std::sort(u.terms.begin(), u.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return u;
}

ZPoly from_upoly(const UPoly& u) { return ZPoly(u.terms.begin(), u.terms.end()); }

ReducedPoly reduce_poly(const UPoly& u, int p) {
    ReducedPoly r;
    r.nvars = u.nvars;
    mpz_class pp(p), rem;
    for (const auto& [k, c] : u.terms) {
        mpz_fdiv_r(rem.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
        if (rem == 0) continue;
        std::array<uint8_t, 8> e{};
        for (int v = 0; v < 8; ++v) {
            e[v] = static_cast<uint8_t>(UPoly::exp_of(k, v));
            r.max_exp[v] = std::max<int>(r.max_exp[v], e[v]);
        }
        r.terms.emplace_back(e, rem.get_si());
    }
    return r;
}

// divide by p^k, demanding exactness
UPoly exact_divide(ZPoly z, int p, int k, int nvars) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    for (auto& [key, c] : z) {
        if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()))
            throw Error("IntegralityFailure", "non-integral universal Witt polynomial");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    }
    return to_upoly(z, nvars);
}

int64_t eval_scalar(const ReducedPoly& r, const std::vector<int64_t>& vals, int p) {
    std::vector<std::vector<int64_t>> pw(r.nvars);
    for (int v = 0; v < r.nvars; ++v) {
        pw[v].resize(r.max_exp[v] + 1);
        pw[v][0] = 1;
        for (int e = 1; e <= r.max_exp[v]; ++e) pw[v][e] = pw[v][e - 1] * vals[v] % p;
    }
    int64_t acc = 0;
    for (const auto& [e, c] : r.terms) {
        int64_t t = c;
        for (int v = 0; v < r.nvars && t; ++v) t = t * pw[v][e[v]] % p;
        acc += t;
    }
    return acc % p;
}

Laurent eval_laurent(const ReducedPoly& r, const std::vector<Laurent>& vals) {
    const Laurent& proto = vals[0];
    std::vector<std::vector<Laurent>> pw(r.nvars);
    for (int v = 0; v < r.nvars; ++v) {
        pw[v].push_back(proto.one_like());
        for (int e = 1; e <= r.max_exp[v]; ++e) pw[v].push_back(pw[v].back() * vals[v]);
    }
    Laurent acc = proto.zero_like();
    for (const auto& [e, c] : r.terms) {
        Laurent t = proto.one_like().scaled(c);
        for (int v = 0; v < r.nvars && !t.is_zero(); ++v)
            if (e[v]) t = t * pw[v][e[v]];
        acc += t;
    }
    return acc;
}

void require_same(const WittVec& x, const WittVec& y) {
    if (x.p != y.p || x.n() != y.n() || x.nvars() != y.nvars())
        throw Error("Mismatch", "Witt vectors of different shape");
}

Laurent shift_into(const Laurent& a, int i, int N) {
    // a has modulus p^{N-i}; returns p^i * a at modulus p^N
    Laurent r = a.with_modulus(N);
    int64_t pi = ipow(a.p, i);
    for (auto& t : r.terms) t.second *= pi;
    return r;
}

}  // namespace

uint64_t UPoly::key_of(const std::vector<int>& e) {
    uint64_t k = 0;
    for (size_t v = 0; v < e.size(); ++v) k |= var_key(static_cast<int>(v), e[v]);
    return k;
}

int UPoly::max_coeff_bits() const {
    size_t b = 0;
    for (const auto& t : terms) b = std::max(b, mpz_sizeinbase(t.second.get_mpz_t(), 2));
    return static_cast<int>(b);
}

std::string UPoly::str() const {
    std::ostringstream os;
    bool first = true;
    int half = nvars / 2;
    for (const auto& [k, c] : terms) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        bool unit = k == 0;
        if (a != 1 || unit) os << a;
        for (int v = 0; v < nvars; ++v) {
            int e = exp_of(k, v);
            if (!e) continue;
            if (nvars == 1 || half == 0) os << "X" << v + 1;
            else os << (v < half ? "X" : "Y") << (v % half) + 1;
            if (e > 1) os << "^" << e;
        }
    }
    return first ? "0" : os.str();
}

UniversalWittPolys build_universal_polys(int p, int n) {
    if (!is_prime(p) || n < 1) throw Error("RangeError", "build_universal_polys needs prime p, n >= 1");
    if (n > 4 || ipow(p, n - 1) > 255) throw Error("ScaleExceeded", "universal polynomials limited to n <= 4, p^{n-1} < 256");
    UniversalWittPolys u;
    u.p = p;
    u.n = n;
    std::vector<ZPoly> spow, ppow, ipw;  // current powers S_j^{p^{k-j}}
    for (int k = 0; k < n; ++k) {
        for (auto& s : spow) s = zpow(s, p);
        for (auto& s : ppow) s = zpow(s, p);
        for (auto& s : ipw) s = zpow(s, p);
        ZPoly gx = ghost_poly(p, k, 0), gy = ghost_poly(p, k, n);
        ZPoly s = gx, pr = zmul(gx, gy), ng;
        zaxpy(s, gy, 1);
        zaxpy(ng, gx, -1);
        mpz_class pj = 1;
        for (int j = 0; j < k; ++j) {
            zaxpy(s, spow[j], -pj);
            zaxpy(pr, ppow[j], -pj);
            zaxpy(ng, ipw[j], -pj);
            pj *= p;
        }
        u.sum.push_back(exact_divide(s, p, k, 2 * n));
        u.prod.push_back(exact_divide(pr, p, k, 2 * n));
        u.neg.push_back(exact_divide(ng, p, k, n));
        spow.push_back(from_upoly(u.sum.back()));
        ppow.push_back(from_upoly(u.prod.back()));
        ipw.push_back(from_upoly(u.neg.back()));
    }
    for (int k = 0; k < n; ++k) {
        u.sum_r.push_back(reduce_poly(u.sum[k], p));
        u.prod_r.push_back(reduce_poly(u.prod[k], p));
        u.neg_r.push_back(reduce_poly(u.neg[k], p));
    }
    return u;
}

const UniversalWittPolys& universal_polys(int p, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<UniversalWittPolys>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, n}];
    if (!slot) slot = std::make_unique<UniversalWittPolys>(build_universal_polys(p, n));
    return *slot;
}

bool verify_ghost_symbolic(const UniversalWittPolys& u, std::string* why) {
    int p = u.p, n = u.n;
    auto lhs = [&](const std::vector<UPoly>& polys, int k) {
        ZPoly acc;
        mpz_class pj = 1;
        for (int j = 0; j <= k; ++j) {
            zaxpy(acc, zpow(from_upoly(polys[j]), static_cast<int>(ipow(p, k - j))), pj);
            pj *= p;
        }
        return acc;
    };
    auto same = [](ZPoly a, const ZPoly& b) {
        zaxpy(a, b, -1);
        return a.empty();
    };
    for (int k = 0; k < n; ++k) {
        ZPoly gx = ghost_poly(p, k, 0), gy = ghost_poly(p, k, n);
        ZPoly sum = gx;
        zaxpy(sum, gy, 1);
        ZPoly ng;
        zaxpy(ng, gx, -1);
        if (!same(lhs(u.sum, k), sum)) {
            if (why) *why = "sum ghost " + std::to_string(k);
            return false;
        }
        if (!same(lhs(u.prod, k), zmul(gx, gy))) {
            if (why) *why = "product ghost " + std::to_string(k);
            return false;
        }
        if (!same(lhs(u.neg, k), ng)) {
            if (why) *why = "negation ghost " + std::to_string(k);
            return false;
        }
    }
    return true;
}

uint32_t WittVec::negmask() const {
    uint32_t m = 0;
    for (const auto& a : c) m |= a.neg;
    return m;
}

bool WittVec::is_zero() const {
    for (const auto& a : c)
        if (!a.is_zero()) return false;
    return true;
}

std::string WittVec::str() const {
    std::string s = "(";
    for (int i = 0; i < n(); ++i) s += (i ? ", " : "") + c[i].str();
    return s + ")";
}

WittVec wzero(int p, int n, int nvars, uint32_t neg) {
    WittVec w;
    w.p = p;
    w.vars = nvars;
    w.c.assign(n, Laurent(p, 1, nvars, neg));
    return w;
}

WittVec wone(int p, int n, int nvars, uint32_t neg) {
    WittVec w = wzero(p, n, nvars, neg);
    if (n) w.c[0] = Laurent::constant(p, 1, nvars, 1, neg);
    return w;
}

WittVec teichmuller(const Laurent& a, int n) {
    if (a.k != 1) throw Error("Mismatch", "teichmuller expects F_p coefficients");
    WittVec w = wzero(a.p, n, a.nvars, a.neg);
    if (n) w.c[0] = a;
    return w;
}

WittVec wscalar(int p, int n, int64_t c) {
    return tilde_w_inverse(Laurent::constant(p, n, 0, c), p);
}

static bool use_universal(const WittVec& x) { return x.nvars() == 0 && x.n() <= 4 && ipow(x.p, x.n() - 1) <= 255; }

WittVec wadd_universal(const WittVec& x, const WittVec& y) {
    require_same(x, y);
    int n = x.n(), p = x.p;
    if (n == 0) return x;
    const auto& u = universal_polys(p, n);
    WittVec r = wzero(p, n, x.nvars(), x.negmask() | y.negmask());
    if (x.nvars() == 0) {
        std::vector<int64_t> vals(2 * n);
        for (int i = 0; i < n; ++i) vals[i] = x.c[i].coeff({}), vals[n + i] = y.c[i].coeff({});
        for (int k = 0; k < n; ++k) r.c[k] = Laurent::constant(p, 1, 0, eval_scalar(u.sum_r[k], vals, p));
        return r;
    }
    std::vector<Laurent> vals(x.c);
    vals.insert(vals.end(), y.c.begin(), y.c.end());
    for (auto& v : vals) v.neg = r.negmask() | v.neg;
    for (int k = 0; k < n; ++k) r.c[k] = eval_laurent(u.sum_r[k], vals);
    return r;
}

WittVec wmul_universal(const WittVec& x, const WittVec& y) {
    require_same(x, y);
    int n = x.n(), p = x.p;
    if (n == 0) return x;
    const auto& u = universal_polys(p, n);
    WittVec r = wzero(p, n, x.nvars(), x.negmask() | y.negmask());
    if (x.nvars() == 0) {
        std::vector<int64_t> vals(2 * n);
        for (int i = 0; i < n; ++i) vals[i] = x.c[i].coeff({}), vals[n + i] = y.c[i].coeff({});
        for (int k = 0; k < n; ++k) r.c[k] = Laurent::constant(p, 1, 0, eval_scalar(u.prod_r[k], vals, p));
        return r;
    }
    std::vector<Laurent> vals(x.c);
    vals.insert(vals.end(), y.c.begin(), y.c.end());
    for (int k = 0; k < n; ++k) r.c[k] = eval_laurent(u.prod_r[k], vals);
    return r;
}

WittVec wneg_universal(const WittVec& x) {
    int n = x.n(), p = x.p;
    if (n == 0) return x;
    const auto& u = universal_polys(p, n);
    WittVec r = wzero(p, n, x.nvars(), x.negmask());
    if (x.nvars() == 0) {
        std::vector<int64_t> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = x.c[i].coeff({});
        for (int k = 0; k < n; ++k) r.c[k] = Laurent::constant(p, 1, 0, eval_scalar(u.neg_r[k], vals, p));
        return r;
    }
    for (int k = 0; k < n; ++k) r.c[k] = eval_laurent(u.neg_r[k], x.c);
    return r;
}

Laurent tilde_w(const WittVec& x) {
    int N = x.n(), p = x.p;
    Laurent acc(p, N, x.nvars(), x.negmask());
    for (int i = 0; i < N; ++i) {
        if (x.c[i].is_zero()) continue;
        int m = N - 1 - i;
        Laurent t = x.c[i].with_modulus(m + 1).pow_p(m);
        t.neg = acc.neg;
        acc += shift_into(t, i, N);
    }
    return acc;
}

WittVec tilde_w_inverse(const Laurent& y, int p) {
    int N = y.k;
    WittVec out = wzero(p, N, y.nvars, y.neg);
    Laurent cur = y;
    for (int i = 0; i < N; ++i) {
        int m = N - 1 - i;
        Laurent r = cur.with_modulus(1);
        int64_t q = ipow(p, m);
        if (!r.exps_divisible(q)) throw Error("NotInImage", "layer " + std::to_string(i) + " is not a p^" + std::to_string(m) + "-th power");
        Laurent f = r.exps_divided(q);
        out.c[i] = f;
        if (m == 0) break;
        cur = (cur - f.with_modulus(m + 1).pow_p(m)).div_p();
    }
    return out;
}

WittVec wadd_lift(const WittVec& x, const WittVec& y) {
    require_same(x, y);
    if (x.n() == 0) return x;
    return tilde_w_inverse(tilde_w(x) + tilde_w(y), x.p);
}

WittVec wmul_lift(const WittVec& x, const WittVec& y) {
    require_same(x, y);
    if (x.n() == 0) return x;
    return tilde_w_inverse(tilde_w(x) * tilde_w(y), x.p);
}

WittVec wneg_lift(const WittVec& x) {
    if (x.n() == 0) return x;
    return tilde_w_inverse(-tilde_w(x), x.p);
}

WittVec wadd(const WittVec& x, const WittVec& y) { return use_universal(x) ? wadd_universal(x, y) : wadd_lift(x, y); }
WittVec wmul(const WittVec& x, const WittVec& y) { return use_universal(x) ? wmul_universal(x, y) : wmul_lift(x, y); }
WittVec wneg(const WittVec& x) { return use_universal(x) ? wneg_universal(x) : wneg_lift(x); }
WittVec wsub(const WittVec& x, const WittVec& y) { return wadd(x, wneg(y)); }

WittVec wint(int64_t c, const WittVec& x) {
    if (x.n() == 0) return x;
    return tilde_w_inverse(tilde_w(x).scaled(c), x.p);
}

WittVec frobenius(const WittVec& x) {
    if (x.n() < 1) throw Error("LengthUnderflow", "frobenius of empty vector");
    WittVec r;
    r.p = x.p;
    r.vars = x.nvars();
    for (int i = 0; i + 1 < x.n(); ++i) r.c.push_back(x.c[i].map_exponents(x.p));
    return r;
}

WittVec phi(const WittVec& x) {
    WittVec r = x;
    for (auto& a : r.c) a = a.map_exponents(x.p);
    return r;
}

WittVec verschiebung(const WittVec& x) {
    WittVec r;
    r.p = x.p;
    r.vars = x.nvars();
    r.c.push_back(Laurent(x.p, 1, x.nvars(), x.negmask()));
    r.c.insert(r.c.end(), x.c.begin(), x.c.end());
    return r;
}

WittVec vshift(const WittVec& x, int i, int n_out) {
    WittVec r = wzero(x.p, n_out, x.nvars(), x.negmask());
    for (int j = 0; j < x.n() && j + i < n_out; ++j) r.c[j + i] = x.c[j];
    return r;
}

WittVec restrict_w(const WittVec& x, int times) {
    if (x.n() < times) throw Error("LengthUnderflow", "restriction below length 0");
    WittVec r = x;
    r.vars = x.nvars();
    r.c.resize(x.n() - times);
    return r;
}

std::vector<WittVec> decompose(const WittVec& x) {
    std::vector<WittVec> out;
    for (int l = 0; l < x.n(); ++l) out.push_back(vshift(teichmuller(x.c[l], x.n() - l), l, x.n()));
    return out;
}

std::vector<mpz_class> ghost(const std::vector<mpz_class>& a, int p) {
    std::vector<mpz_class> w(a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        mpz_class pj = 1;
        for (size_t j = 0; j <= k; ++j) {
            mpz_class t;
            mpz_pow_ui(t.get_mpz_t(), a[j].get_mpz_t(), static_cast<unsigned long>(ipow(p, static_cast<int>(k - j))));
            w[k] += pj * t;
            pj *= p;
        }
    }
    return w;
}

int64_t witt_to_int(const WittVec& x) {
    if (x.nvars() != 0) throw Error("Mismatch", "witt_to_int needs scalar coordinates");
    std::vector<mpz_class> a;
    for (const auto& c : x.c) a.emplace_back(static_cast<long>(c.coeff({})));
    auto g = ghost(a, x.p);
    mpz_class m(static_cast<long>(ipow(x.p, x.n()))), r;
    mpz_fdiv_r(r.get_mpz_t(), g.back().get_mpz_t(), m.get_mpz_t());
    return r.get_si();
}

Laurent tilde_F(const WittVec& x) {
    int n = x.n(), p = x.p;
    Laurent acc(p, n, x.nvars(), x.negmask());
    for (int i = 0; i < n; ++i) {
        if (x.c[i].is_zero()) continue;
        int m = n - i;
        Laurent t = x.c[i].with_modulus(m).pow_p(m);
        acc += shift_into(t, i, n);
    }
    return acc;
}

Laurent formal_derivative(const Laurent& f, int v) {
    Laurent r = f.zero_like();
    for (const auto& [e, c] : f.terms) {
        if (e[v] == 0) continue;
        Exp e2 = e;
        e2[v] -= 1;
        r.terms.emplace_back(e2, c * e[v]);
    }
    r.normalize();
    return r;
}

int64_t teich_digit(int64_t c, int p, int k) {
    int64_t m = ipow(p, k), r = pmod(c, p);
    for (int i = 0; i + 1 < k; ++i) {
        int64_t acc = 1;
        for (int j = 0; j < p; ++j) acc = acc * r % m;
        r = acc;
    }
    return r % m;
}

std::vector<MonoTerm> monomial_expand(const WittVec& x) {
    std::vector<MonoTerm> out;
    WittVec cur = x;
    int level = 0;
    while (cur.n() > 0) {
        int N = cur.n();
        const Laurent& f = cur.c[0];
        if (N == 1) {
            for (const auto& [e, c] : f.terms) out.push_back({level, e, c});
            break;
        }
        Laurent L = tilde_w(cur);
        int64_t q = ipow(cur.p, N - 1);
        Laurent sub(cur.p, N, cur.nvars(), L.neg);
        for (const auto& [e, c] : f.terms) {
            int64_t w = teich_digit(c, cur.p, N);
            out.push_back({level, e, w});
            Exp eq = e;
            for (auto& v : eq) v = static_cast<int>(v * q);
            sub.terms.emplace_back(eq, w);
        }
        sub.normalize();
        WittVec z = tilde_w_inverse(L - sub, cur.p);
        if (!z.c[0].is_zero()) throw Error("InternalError", "monomial_expand leading layer did not cancel");
        z.c.erase(z.c.begin());
        cur = z;
        ++level;
    }
    std::sort(out.begin(), out.end());
    return out;
}

WittVec monomial_recompose(const std::vector<MonoTerm>& terms, int p, int n, int nvars, uint32_t neg) {
    Laurent acc(p, n, nvars, neg);
    for (const auto& t : terms) {
        if (t.level >= n) continue;
        int64_t q = ipow(p, n - 1 - t.level);
        Exp e = t.e;
        for (auto& v : e) v = static_cast<int>(v * q);
        acc += Laurent::monomial(p, n, e, t.coeff * ipow(p, t.level), neg);
    }
    return tilde_w_inverse(acc, p);
}

std::vector<TeichSumTerm> teichmuller_sum_power(const std::vector<Laurent>& summands, int i, int n) {
    if (summands.empty()) throw Error("RangeError", "no summands");
    int p = summands[0].p, r = static_cast<int>(summands.size());
    if (p == 2 && r > 2) throw Error("CharTwoUnsupported", "three or more summands need p != 2");
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (summands[a] == summands[b]) throw Error("DuplicateSummand", "summands must be pairwise distinct");
    Laurent q = Laurent::constant(p, 1, r, 0);
    for (int a = 0; a < r; ++a) {
        Exp e(r, 0);
        e[a] = 1;
        q += Laurent::monomial(p, 1, e);
    }
    q = q.pow(i);
    std::vector<TeichSumTerm> out;
    for (const auto& t : monomial_expand(teichmuller(q, n))) out.push_back({t.level, t.e, t.coeff});
    return out;
}

WittVec teich_sum_recompose(const std::vector<TeichSumTerm>& terms, const std::vector<Laurent>& summands, int n) {
    const Laurent& s0 = summands[0];
    uint32_t neg = 0;
    for (const auto& s : summands) neg |= s.neg;
    int p = s0.p;
    Laurent acc(p, n, s0.nvars, neg);
    for (const auto& t : terms) {
        Laurent prod = Laurent::constant(p, 1, s0.nvars, 1, neg);
        for (size_t j = 0; j < summands.size(); ++j) prod = prod * summands[j].with_neg(neg).pow(t.m[j]);
        WittVec w = vshift(teichmuller(prod, n - t.level), t.level, n);
        acc += tilde_w(w).scaled(t.coeff);
    }
    return tilde_w_inverse(acc, p);
}

VProduct v_product_normalize(int p, const std::vector<std::pair<int, Exp>>& factors) {
    VProduct r;
    if (factors.empty()) return r;
    size_t top = 0;
    for (size_t i = 1; i < factors.size(); ++i)
        if (factors[i].first > factors[top].first) top = i;
    int smax = factors[top].first;
    r.level = smax;
    r.exponent.assign(factors[0].second.size(), 0);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i != top) r.scalar *= ipow(p, factors[i].first);
        int64_t mult = ipow(p, smax - factors[i].first);
        for (size_t v = 0; v < r.exponent.size(); ++v) r.exponent[v] += static_cast<int>(mult * factors[i].second[v]);
    }
    return r;
}

WittVec random_witt(Rng& rng, int p, int n, int nvars, int max_terms, int max_deg) {
    WittVec w = wzero(p, n, nvars);
    for (int i = 0; i < n; ++i) {
        if (nvars == 0) {
            std::uniform_int_distribution<int> d(0, p - 1);
            w.c[i] = Laurent::constant(p, 1, 0, d(rng));
        } else {
            w.c[i] = random_poly(rng, p, 1, nvars, max_terms, max_deg);
        }
    }
    return w;
}

}  // namespace witt
