#include "witt/rings.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <tuple>

namespace witt {

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int64_t pmod(int64_t a, int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

int vp(int64_t x, int p) {
    if (x == 0) throw Error("RangeError", "valuation of zero");
    int v = 0;
    if (x < 0) x = -x;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

static mpz_class binom_z(int64_t m, int64_t r) {
    mpz_class out, top(static_cast<long>(m));
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

int64_t binom_mod(int64_t m, int64_t r, int64_t mod) {
    if (r < 0) return 0;
    if (r == 0) return 1 % mod;
    thread_local std::map<std::tuple<int64_t, int64_t, int64_t>, int64_t> cache;
    auto key = std::make_tuple(m, r, mod);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    mpz_class b = binom_z(m, r);
    mpz_class mm(static_cast<long>(mod));
    mpz_class res;
    mpz_fdiv_r(res.get_mpz_t(), b.get_mpz_t(), mm.get_mpz_t());
    int64_t v = res.get_si();
    if (cache.size() > 2000000) cache.clear();
    cache.emplace(key, v);
    return v;
}

int binom_val(int64_t m, int64_t r, int p) {
    mpz_class b = binom_z(m, r);
    if (b == 0) return -1;
    mpz_class pp(p);
    return static_cast<int>(mpz_remove(b.get_mpz_t(), b.get_mpz_t(), pp.get_mpz_t()));
}

Laurent Laurent::constant(int p, int k, int nvars, int64_t c, uint32_t neg) {
    Laurent r(p, k, nvars, neg);
    c = pmod(c, r.mod());
    if (c) r.terms.emplace_back(Exp(nvars, 0), c);
    return r;
}

Laurent Laurent::monomial(int p, int k, const Exp& e, int64_t c, uint32_t neg) {
    Laurent r(p, k, static_cast<int>(e.size()), neg);
    r.check_exp(e);
    c = pmod(c, r.mod());
    if (c) r.terms.emplace_back(e, c);
    return r;
}

int64_t Laurent::coeff(const Exp& e) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), e,
                               [](const auto& t, const Exp& x) { return t.first < x; });
    if (it != terms.end() && it->first == e) return it->second;
    return 0;
}

void Laurent::check_exp(const Exp& e) const {
    if (static_cast<int>(e.size()) != nvars) throw Error("VariableMismatch", "exponent length");
    for (int i = 0; i < nvars; ++i)
        if (e[i] < 0 && !(neg >> i & 1u))
            throw Error("NegativeExponentViolation", "variable " + std::to_string(i));
}

void Laurent::normalize() {
    int64_t m = mod();
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Exp, int64_t>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = pmod(out.back().second + t.second, m);
        } else {
            t.second = pmod(t.second, m);
            out.push_back(std::move(t));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.second == 0; }), out.end());
    terms = std::move(out);
}

void require_compatible(const Laurent& a, const Laurent& b) {
    if (a.nvars != b.nvars || a.p != b.p || a.k != b.k)
        throw Error("VariableMismatch", "incompatible Laurent operands");
}

Laurent Laurent::operator+(const Laurent& o) const {
    require_compatible(*this, o);
    Laurent r(p, k, nvars, neg | o.neg);
    int64_t m = mod();
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
        if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
            r.terms.push_back(terms[i++]);
        } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
            r.terms.push_back(o.terms[j++]);
        } else {
            int64_t c = (terms[i].second + o.terms[j].second) % m;
            if (c) r.terms.emplace_back(terms[i].first, c);
            ++i, ++j;
        }
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    int64_t m = mod();
    for (auto& t : r.terms) t.second = (m - t.second) % m;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    require_compatible(*this, o);
    Laurent r(p, k, nvars, neg | o.neg);
    if (terms.empty() || o.terms.empty()) return r;
    int64_t m = mod();
    // pack exponents of the product into mixed-radix integer keys
    std::vector<int> lo(nvars), span(nvars);
    bool packable = true;
    int64_t box = 1;
    for (int v = 0; v < nvars && packable; ++v) {
        int alo = INT32_MAX, ahi = INT32_MIN, blo = INT32_MAX, bhi = INT32_MIN;
        for (const auto& t : terms) alo = std::min(alo, t.first[v]), ahi = std::max(ahi, t.first[v]);
        for (const auto& t : o.terms) blo = std::min(blo, t.first[v]), bhi = std::max(bhi, t.first[v]);
        lo[v] = alo + blo;
        span[v] = ahi + bhi - lo[v] + 1;
        if (box > (int64_t(1) << 40) / span[v]) packable = false;
        box *= span[v];
    }
    if (!packable) {
        r.terms.reserve(terms.size() * o.terms.size());
        Exp e(nvars);
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                for (int v = 0; v < nvars; ++v) e[v] = ea[v] + eb[v];
                r.terms.emplace_back(e, (ca * cb) % m);
            }
        r.normalize();
        return r;
    }
    auto key = [&](const Exp& e, bool shift) {
        int64_t kk = 0;
        for (int v = 0; v < nvars; ++v) kk = kk * span[v] + (e[v] - (shift ? lo[v] : 0));
        return kk;
    };
    std::vector<int64_t> ka(terms.size()), kb(o.terms.size());
    for (size_t i = 0; i < terms.size(); ++i) ka[i] = key(terms[i].first, false);
    for (size_t i = 0; i < o.terms.size(); ++i) kb[i] = key(o.terms[i].first, false);
    Exp zero_lo(nvars);
    for (int v = 0; v < nvars; ++v) zero_lo[v] = lo[v];
    int64_t base = key(zero_lo, false);
    std::vector<std::pair<int64_t, int64_t>> acc;
    int64_t pairs = static_cast<int64_t>(terms.size()) * static_cast<int64_t>(o.terms.size());
    if (box <= (int64_t(1) << 22) && box <= 8 * pairs + 64) {
        std::vector<int64_t> dense(box, 0);
        for (size_t i = 0; i < terms.size(); ++i)
            for (size_t j = 0; j < o.terms.size(); ++j) {
                int64_t& c = dense[ka[i] + kb[j] - base];
                c = (c + terms[i].second * o.terms[j].second) % m;
            }
        for (int64_t kk = 0; kk < box; ++kk)
            if (dense[kk]) acc.emplace_back(kk, dense[kk]);
    } else {
        acc.reserve(pairs);
        for (size_t i = 0; i < terms.size(); ++i)
            for (size_t j = 0; j < o.terms.size(); ++j)
                acc.emplace_back(ka[i] + kb[j] - base, terms[i].second * o.terms[j].second % m);
        std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        size_t w = 0;
        for (size_t i = 0; i < acc.size(); ++i) {
            if (w && acc[w - 1].first == acc[i].first)
                acc[w - 1].second = (acc[w - 1].second + acc[i].second) % m;
            else
                acc[w++] = acc[i];
        }
        acc.resize(w);
    }
    r.terms.reserve(acc.size());
    Exp e(nvars);
    for (const auto& [kk, c] : acc) {
        if (!c) continue;
        int64_t rest = kk;
        for (int v = nvars - 1; v >= 0; --v) e[v] = static_cast<int>(rest % span[v]) + lo[v], rest /= span[v];
        r.terms.emplace_back(e, c);
    }
    // variable 0 is the most significant digit, so key order is lex order
    return r;
}

Laurent Laurent::scaled(int64_t c) const {
    Laurent r = *this;
    int64_t m = mod();
    c = pmod(c, m);
    for (auto& t : r.terms) t.second = (t.second * c) % m;
    r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(), [](const auto& t) { return t.second == 0; }),
                  r.terms.end());
    return r;
}

bool Laurent::operator==(const Laurent& o) const {
    return p == o.p && k == o.k && nvars == o.nvars && terms == o.terms;
}

bool Laurent::operator<(const Laurent& o) const { return terms < o.terms; }

Laurent Laurent::pow(int64_t e) const {
    if (e < 0) {
        if (!is_monomial() || terms[0].second % p == 0) throw Error("NotInvertible", "negative power");
        // monomial with unit coefficient
        int64_t m = mod(), c = terms[0].second, inv = 1;
        for (int64_t t = 1; t < m; ++t)
            if ((c * t) % m == 1) inv = t;
        Exp ne = terms[0].first;
        for (auto& x : ne) x = -x;
        return Laurent::monomial(p, k, ne, inv, neg).pow(-e);
    }
    Laurent result = one_like(), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Laurent Laurent::pow_p(int m) const {
    Laurent g = *this;
    for (int i = 0; i < m; ++i) {
        if (g.is_monomial()) {
            g = g.map_exponents(p);
            int64_t base = g.terms[0].second, acc = 1;
            for (int j = 0; j < p; ++j) acc = (acc * base) % g.mod();
            g.terms[0].second = acc;
            if (acc == 0) g.terms.clear();
        } else {
            g = g.pow(p);
        }
    }
    return g;
}

Laurent Laurent::with_modulus(int k2) const {
    Laurent r = *this;
    r.k = k2;
    if (k2 < k) r.normalize();
    return r;
}

Laurent Laurent::with_neg(uint32_t neg2) const {
    Laurent r = *this;
    r.neg = neg2;
    for (const auto& t : r.terms) r.check_exp(t.first);
    return r;
}

Laurent Laurent::div_p() const {
    if (k < 2) throw Error("RangeError", "div_p at modulus p");
    Laurent r(p, k - 1, nvars, neg);
    for (const auto& [e, c] : terms) {
        if (c % p) throw Error("NotInImage", "coefficient not divisible by p");
        r.terms.emplace_back(e, c / p);
    }
    r.normalize();
    return r;
}

Laurent Laurent::map_exponents(int mul) const {
    Laurent r = *this;
    for (auto& t : r.terms)
        for (auto& x : t.first) x *= mul;
    if (mul < 0) r.normalize();
    return r;
}

bool Laurent::exps_divisible(int64_t q) const {
    for (const auto& t : terms)
        for (int x : t.first)
            if (x % q) return false;
    return true;
}

Laurent Laurent::exps_divided(int64_t q) const {
    Laurent r = *this;
    for (auto& t : r.terms)
        for (auto& x : t.first) {
            if (x % q) throw Error("NotInImage", "exponent not divisible");
            x = static_cast<int>(x / q);
        }
    return r;
}

int Laurent::max_abs_exp() const {
    int m = 0;
    for (const auto& t : terms)
        for (int x : t.first) m = std::max(m, std::abs(x));
    return m;
}

std::string Laurent::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        bool unit = true;
        for (int x : e) unit = unit && x == 0;
        if (c != 1 || unit) os << c;
        for (int v = 0; v < nvars; ++v) {
            if (e[v] == 0) continue;
            os << (nvars == 1 ? "z" : "z" + std::to_string(v));
            if (e[v] != 1) os << "^" << e[v];
        }
    }
    return os.str();
}

Laurent random_poly(Rng& rng, int p, int k, int nvars, int max_terms, int max_deg) {
    Laurent r(p, k, nvars);
    int64_t m = r.mod();
    std::uniform_int_distribution<int> nt(0, max_terms), deg(0, max_deg);
    std::uniform_int_distribution<int64_t> coef(1, m - 1);
    int count = nt(rng);
    for (int t = 0; t < count; ++t) {
        Exp e(nvars);
        for (auto& x : e) x = deg(rng);
        r.terms.emplace_back(e, coef(rng));
    }
    r.normalize();
    return r;
}

static void graded_rec(int v, int d, int left, const std::vector<std::pair<int, int>>& box, Exp& cur,
                       std::vector<Exp>& out) {
    if (v == d - 1) {
        if (left >= box[v].first && left <= box[v].second) {
            cur[v] = left;
            out.push_back(cur);
        }
        return;
    }
    for (int x = box[v].first; x <= box[v].second; ++x) {
        cur[v] = x;
        graded_rec(v + 1, d, left - x, box, cur, out);
    }
}

GradedSlice graded_basis(int d, int m, const std::vector<std::pair<int, int>>& box) {
    GradedSlice s;
    s.degree = m;
    s.box = box;
    if (d <= 0) return s;
    Exp cur(d);
    graded_rec(0, d, m, box, cur, s.basis);
    std::sort(s.basis.begin(), s.basis.end());
    return s;
}

}  // namespace witt
