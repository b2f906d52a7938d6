#include "witt/witt_diff.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>

namespace witt {

int vp_multi(const Exp& r, int p) {
    int v = -1;
    for (int x : r)
        if (x > 0) {
            int w = vp(x, p);
            v = v < 0 ? w : std::min(v, w);
        }
    return v;
}

static bool twist_is_plain(const Exp& r, int p, int n) {
    int v = vp_multi(r, p);
    return v < 0 || v > n;
}

WittDiffOp lift_operator(const WeylElement& base, int n) {
    if (base.k != 1) throw Error("RangeError", "base operator must live over F_p");
    WittDiffOp op;
    op.p = base.p;
    op.n = n;
    op.mode = DiffMode::Twisted;
    op.base = base;
    op.lift = WeylElement(base.p, n + 1, base.m, base.neg);
    for (const auto& [key, c] : base.terms) op.lift.add_term(key.first, key.second, teich_digit(c, base.p, n + 1));
    return op;
}

WittDiffOp conjugate_operator(const WeylElement& lift, int n) {
    WittDiffOp op;
    op.p = lift.p;
    op.n = n;
    op.mode = DiffMode::Conjugate;
    op.lift = lift.with_modulus(n + 1);
    op.base = lift.with_modulus(1);
    return op;
}

WittDiffOp teichmuller_lift_op(const WeylElement& base, int n) {
    WittDiffOp op = lift_operator(base, n);
    op.mode = DiffMode::Teichmuller;
    for (const auto& [key, c] : base.terms) {
        Laurent b = Laurent::monomial(base.p, 1, key.first, c, base.neg);
        op.teich.emplace_back(teichmuller(b, n + 1), key.second);
    }
    return op;
}

WeylElement reduce_op(const WittDiffOp& op) {
    if (op.mode != DiffMode::Teichmuller) return op.lift.with_modulus(1);
    WeylElement out(op.p, 1, op.nvars(), op.base.neg);
    for (const auto& [b, r] : op.teich)
        for (const auto& [e, c] : b.c[0].terms) out.add_term(e, r, c);
    return out;
}

WittDiffOp partial_op(int p, int n, int m, const Exp& r, uint32_t neg) {
    return lift_operator(WeylElement::term(p, 1, Exp(m, 0), r, 1, neg), n);
}

static void check_input(const WittDiffOp& op, const WittVec& x) {
    if (x.n() != op.n + 1) throw Error("LengthMismatch", "operator acts on W_" + std::to_string(op.n + 1));
    if (x.nvars() != op.nvars()) throw Error("VariableMismatch", "operator and Witt vector variable counts");
}

// The w~-conjugate of the whole operator: coefficients z^e of a twisted
// term become z^{e p^{min(v_p(r), n)}}.
static WeylElement conjugation_lift(const WittDiffOp& op) {
    if (op.mode == DiffMode::Conjugate) return op.lift;
    WeylElement out(op.p, op.n + 1, op.lift.m, op.lift.neg);
    for (const auto& [key, c] : op.lift.terms) {
        int v = vp_multi(key.second, op.p);
        int s = (v < 0 || v > op.n || op.mode == DiffMode::Teichmuller) ? op.n : v;
        Exp e = key.first;
        for (auto& x : e) x = static_cast<int>(x * ipow(op.p, s));
        out.add_term(e, key.second, c);
    }
    return out;
}

WittVec apply_witt(const WittDiffOp& op, const WittVec& x) {
    check_input(op, x);
    if (op.mode == DiffMode::Teichmuller) {
        WittVec acc = wzero(op.p, op.n + 1, x.nvars(), x.negmask() | op.lift.neg);
        for (const auto& [b, r] : op.teich) {
            WeylElement d = WeylElement::term(op.p, op.n + 1, Exp(op.nvars(), 0), r, 1, op.lift.neg);
            WittVec y = tilde_w_inverse(apply(d, tilde_w(x)), op.p);
            acc = wadd(acc, wmul(b, y));
        }
        return acc;
    }
    return tilde_w_inverse(apply(conjugation_lift(op), tilde_w(x)), op.p);
}

WittVec apply_witt_explicit(const WittDiffOp& op, const WittVec& x) {
    check_input(op, x);
    int p = op.p, n = op.n, N = n + 1, m = op.nvars();
    std::vector<MonoTerm> in = monomial_expand(x), out;
    mpz_class pN;
    mpz_ui_pow_ui(pN.get_mpz_t(), p, N);
    auto terms = op.lift.terms;
    for (const auto& [key, c] : terms) {
        const Exp& ce = key.first;
        const Exp& r = key.second;
        bool plain = op.mode == DiffMode::Teichmuller || twist_is_plain(r, p, n);
        int v = vp_multi(r, p);
        for (const auto& t : in) {
            // d^{[r]}(p^l z^{S p^{n-l}}) = p^l prod binom(S p^{n-l}, r) z^{S p^{n-l} - r}
            mpz_class b = mpz_class(t.coeff) * c;
            for (int i = 0; i < t.level; ++i) b *= p;
            Exp E(m);
            int64_t q = ipow(p, n - t.level);
            for (int j = 0; j < m; ++j) {
                mpz_class bin, top = mpz_class(static_cast<long>(t.e[j])) * q;
                mpz_bin_ui(bin.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r[j]));
                b *= bin;
                E[j] = static_cast<int>(t.e[j] * q - r[j]);
            }
            b %= pN;
            if (b < 0) b += pN;
            if (b == 0) continue;
            int u = 0;
            while (mpz_divisible_ui_p(b.get_mpz_t(), p)) {
                b /= p;
                ++u;
            }
            int64_t pu = ipow(p, n - u);
            for (int j = 0; j < m; ++j)
                if (E[j] % pu) throw Error("NotInImage", "exponent not divisible in the V^" + std::to_string(u) + " layer");
            MonoTerm res;
            res.level = u;
            res.e.resize(m);
            int shift = u;
            if (!plain) {
                int layer = n - v;
                if (u < layer) throw Error("FiltrationViolation", "output below V^" + std::to_string(layer));
                shift = u - layer;
            }
            for (int j = 0; j < m; ++j) res.e[j] = static_cast<int>(E[j] / pu + ce[j] * ipow(p, shift));
            res.coeff = mpz_class(b % mpz_class(ipow(p, N - u))).get_si();
            out.push_back(res);
        }
    }
    return monomial_recompose(out, p, N, m, x.negmask() | op.lift.neg);
}

Relation parse_relation(const std::string& s) {
    if (s == "restr" || s == "restriction") return Relation::Restriction;
    if (s == "frob" || s == "frobenius") return Relation::Frobenius;
    if (s == "versch" || s == "verschiebung") return Relation::Verschiebung;
    if (s == "filtr" || s == "filtration") return Relation::Filtration;
    throw Error("UnknownRelation", s);
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Restriction: return "restriction";
        case Relation::Frobenius: return "frobenius";
        case Relation::Verschiebung: return "verschiebung";
        case Relation::Filtration: return "filtration";
    }
    return "";
}

static Exp unit_order(int m, int var, int r) {
    Exp e(m, 0);
    e[var] = r;
    return e;
}

static WittVec random_sample(Rng& rng, int p, int len, int m) { return random_witt(rng, p, len, m, 3, 3); }

static void record(RelationReport& rep, bool ok, const WittVec& x, const std::string& what) {
    ++rep.cases;
    if (!ok) rep.failures.push_back(what + " on " + x.str());
}

RelationReport check_relation(Relation which, int p, int n, int m, int var, int r, int samples, Rng& rng) {
    RelationReport rep;
    std::ostringstream name;
    name << relation_name(which) << " p=" << p << " n=" << n << " m=" << m << " r=" << r;
    rep.relation = name.str();
    WittDiffOp d = partial_op(p, n, m, unit_order(m, var, r));
    bool divisible = r % p == 0;
    for (int s = 0; s < samples; ++s) {
        try {
            switch (which) {
                case Relation::Restriction: {
                    if (n < 1) throw Error("RangeError", "restriction needs n >= 1");
                    WittVec x = random_sample(rng, p, n + 1, m);
                    WittVec lhs = restrict_w(apply_witt(d, x));
                    WittVec rhs = divisible ? apply_witt(partial_op(p, n - 1, m, unit_order(m, var, r / p)), restrict_w(x))
                                            : wzero(p, n, m);
                    record(rep, lhs == rhs, x, "R d^[r] != d^[r/p] R");
                    break;
                }
                case Relation::Frobenius: {
                    WittVec x = random_sample(rng, p, n + 1, m);
                    WittVec lhs = apply_witt(d, phi(x));
                    WittVec rhs = divisible ? phi(apply_witt(partial_op(p, n, m, unit_order(m, var, r / p)), x))
                                            : wzero(p, n + 1, m);
                    record(rep, lhs == rhs, x, "d^[r] Phi != Phi d^[r/p]");
                    break;
                }
                case Relation::Verschiebung: {
                    if (n < 1) throw Error("RangeError", "verschiebung needs n >= 1");
                    WittVec y = random_sample(rng, p, n, m);
                    WittVec lhs = apply_witt(d, verschiebung(y));
                    WittVec rhs = verschiebung(apply_witt(partial_op(p, n - 1, m, unit_order(m, var, r)), y));
                    record(rep, lhs == rhs, y, "d^[r] V != V d^[r]");
                    break;
                }
                case Relation::Filtration: {
                    int i = static_cast<int>(rng() % (n + 1));
                    WittVec y = random_sample(rng, p, n + 1 - i, m);
                    WittVec x = vshift(y, i, n + 1);
                    WittVec out = apply_witt(d, x);
                    bool ok = true;
                    for (int j = 0; j < i; ++j) ok = ok && out.c[j].is_zero();
                    record(rep, ok, x, "d^[r] leaves V^" + std::to_string(i));
                    break;
                }
            }
        } catch (const Error& e) {
            ++rep.cases;
            rep.failures.push_back(e.kind() + ": " + e.what());
        }
    }
    return rep;
}

RelationReport check_lift_independence(int p, int n, int m, int var, int r, int pairs, Rng& rng) {
    RelationReport rep;
    rep.relation = "lift-independence p=" + std::to_string(p) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
    Exp ord = unit_order(m, var, r);
    int v = vp(r, p);
    WeylElement pure = WeylElement::term(p, n + 1, Exp(m, 0), ord);
    for (int s = 0; s < pairs; ++s) {
        Laurent g = random_poly(rng, p, n + 1, m, 3, 4);
        WeylElement other = pure;
        for (const auto& [e, c] : g.terms) other.add_term(e, ord, c * ipow(p, std::min(v + 1, n + 1)) % ipow(p, n + 1));
        WittVec x = random_sample(rng, p, n + 1, m);
        try {
            WittVec a = apply_witt(conjugate_operator(pure, n), x);
            WittVec b = apply_witt(conjugate_operator(other, n), x);
            record(rep, a == b, x, "lifts disagree");
        } catch (const Error& e) {
            ++rep.cases;
            rep.failures.push_back(e.kind() + ": " + e.what());
        }
    }
    return rep;
}

RelationReport image_valuation_check(int p, int n, int m, int var, int q, int samples, Rng& rng) {
    RelationReport rep;
    rep.relation = "image-valuation p=" + std::to_string(p) + " n=" + std::to_string(n) + " q=" + std::to_string(q);
    int v = vp(q, p);
    if (v > n) throw Error("RangeError", "v_p(q) must not exceed n");
    WittDiffOp d = partial_op(p, n, m, unit_order(m, var, q));
    for (int s = 0; s < samples; ++s) {
        WittVec x = random_sample(rng, p, n + 1, m);
        try {
            WittVec y = apply_witt(d, x);
            bool ok = true;
            for (int j = 0; j < n - v; ++j) ok = ok && y.c[j].is_zero();
            record(rep, ok, x, "output outside V^" + std::to_string(n - v));
        } catch (const Error& e) {
            ++rep.cases;
            rep.failures.push_back(e.kind() + ": " + e.what());
        }
    }
    return rep;
}

RelationReport check_frobenius_power(int p, int m, int r, int samples, Rng& rng) {
    RelationReport rep;
    rep.relation = "frobenius-power p=" + std::to_string(p) + " r=" + std::to_string(r);
    for (int var = 0; var < m; ++var) {
        WeylElement d = WeylElement::term(p, 1, Exp(m, 0), unit_order(m, var, r));
        WeylElement dq = WeylElement::term(p, 1, Exp(m, 0), unit_order(m, var, r / p));
        for (int s = 0; s < samples; ++s) {
            Laurent f = random_poly(rng, p, 1, m, 4, 6);
            Laurent lhs = r % p ? Laurent(p, 1, m) : apply(dq, f).pow_p(1);
            Laurent rhs = apply(d, f.pow_p(1));
            ++rep.cases;
            if (lhs != rhs) rep.failures.push_back("f = " + f.str());
        }
    }
    return rep;
}

BinomValuation valuation_binom(int p, int64_t w, int64_t z) {
    if (z <= 0 || z > w) throw Error("RangeError", "need 0 < z <= w");
    auto legendre = [p](int64_t x) {
        int64_t s = 0;
        for (int64_t q = p; q <= x; q *= p) s += x / q;
        return s;
    };
    BinomValuation b;
    b.valuation = static_cast<int>(legendre(w) - legendre(z) - legendre(w - z));
    b.bound = vp(w, p) - vp(z, p);
    return b;
}

}  // namespace witt
