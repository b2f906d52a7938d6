#include "witt/derham_witt.hpp"

#include <algorithm>
#include <sstream>

namespace witt {

Weight Weight::from_fractions(int p, const std::vector<int64_t>& num, int denom_exp) {
    Weight w;
    w.p = p;
    for (int64_t a : num) {
        if (a < 0) throw Error("RangeError", "weights are nonnegative");
        if (a == 0) {
            w.r.emplace_back(0, 0);
            continue;
        }
        int v = vp(a, p);
        w.r.emplace_back(a / ipow(p, v), v - denom_exp);
    }
    return w;
}

std::vector<int> Weight::support() const {
    std::vector<int> s;
    for (int j = 0; j < d(); ++j)
        if (in_support(j)) s.push_back(j);
    std::stable_sort(s.begin(), s.end(), [&](int a, int b) { return r[a].second < r[b].second; });
    return s;
}

Weight Weight::restricted(const std::vector<int>& idx) const {
    Weight w = *this;
    for (auto& x : w.r) x = {0, 0};
    for (int j : idx) w.r[j] = r[j];
    return w;
}

Weight Weight::scaled_p(int m) const {
    Weight w = *this;
    for (auto& x : w.r)
        if (x.first) x.second += m;
    return w;
}

int Weight::t() const {
    bool any = false;
    int mn = 0;
    for (const auto& [u, v] : r)
        if (u) {
            mn = any ? std::min(mn, v) : v;
            any = true;
        }
    return any ? -mn : 0;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < d(); ++j) {
        if (j) os << ", ";
        auto [u, v] = r[j];
        if (!u) os << 0;
        else if (v >= 0) os << u * ipow(p, v);
        else os << u << "/" << ipow(p, -v);
    }
    os << ")";
    return os.str();
}

std::pair<int, int> t_and_u(const Weight& r, const std::vector<int>& subset) {
    int t = r.restricted(subset).t();
    return {t, std::max(0, t)};
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < parts.size(); ++j) {
        if (j) os << ", ";
        os << "{";
        for (size_t k = 0; k < parts[j].size(); ++k) os << (k ? "," : "") << parts[j][k];
        os << "}";
    }
    os << ")";
    return os.str();
}

std::vector<Partition> enumerate_partitions(const Weight& r, int i) {
    std::vector<int> s = r.support();
    int l = static_cast<int>(s.size());
    if (i < 0 || l < i) throw Error("SupportTooSmall", "support of size " + std::to_string(l) + " below degree " + std::to_string(i));
    std::vector<Partition> out;
    // c_0 >= 0, c_1..c_i >= 1, sum = l; parts are consecutive runs of s
    std::vector<int> c(i + 1, 0);
    auto emit = [&]() {
        Partition P;
        int pos = 0;
        for (int j = 0; j <= i; ++j) {
            P.parts.emplace_back(s.begin() + pos, s.begin() + pos + c[j]);
            pos += c[j];
        }
        out.push_back(P);
    };
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == i) {
            if (i == 0 || left >= 1) {
                c[j] = left;
                emit();
            }
            return;
        }
        for (int x = (j == 0 ? 0 : 1); x <= left - (i - j); ++x) {
            c[j] = x;
            self(self, j + 1, left - x);
        }
    };
    if (i == 0) {
        c[0] = l;
        emit();
    } else {
        rec(rec, 0, l);
    }
    return out;
}

bool valid_partition(const Weight& r, const Partition& P) {
    std::vector<int> s = r.support();
    std::vector<int> flat;
    for (size_t j = 0; j < P.parts.size(); ++j) {
        if (j >= 1 && P.parts[j].empty()) return false;
        for (int x : P.parts[j]) flat.push_back(x);
    }
    // union, disjointness, order and convexity together say: concatenation is the support in order
    return flat == s;
}

void DRWElement::add(const Weight& r, const Partition& P, int64_t c) {
    // e_n(1, r, P) is annihilated by p^{n - u(r)}
    int64_t md = ipow(p, std::max(0, n - r.u()));
    c = pmod(c, md);
    if (!c) return;
    auto key = std::make_pair(r, P);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second = (it->second + c) % md;
        if (!it->second) terms.erase(it);
    }
}

DRWElement DRWElement::scaled(int64_t c) const {
    DRWElement out{p, n, degree, {}};
    for (const auto& [key, v] : terms) out.add(key.first, key.second, v * pmod(c, mod()) % mod());
    return out;
}

std::string DRWElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << "e_" << n << "(" << key.first.str() << ", " << key.second.str() << ")";
    }
    return os.str();
}

DRWElement basis_element(int p, int n, const Weight& r, const Partition& P) {
    if (!r.admissible(n)) throw Error("Inadmissible", "p^{n-1} r is not integral for r = " + r.str());
    if (!valid_partition(r, P)) throw Error("InvalidPartition", P.str());
    DRWElement e{p, n, P.degree(), {}};
    e.add(r, P, 1);
    return e;
}

DRWOp parse_drw_op(const std::string& s) {
    if (s == "F") return DRWOp::F;
    if (s == "V") return DRWOp::V;
    if (s == "d") return DRWOp::d;
    throw Error("UnknownOperator", s);
}

DRWElement act(DRWOp which, const DRWElement& x) {
    int p = x.p;
    DRWElement out{p, x.n, x.degree, {}};
    if (which == DRWOp::F) out.n = x.n - 1;
    if (which == DRWOp::V) out.n = x.n + 1;
    if (which == DRWOp::d) out.degree = x.degree + 1;
    if (out.n < 0) throw Error("LevelUnderflow", "F on level 0");
    for (const auto& [key, c] : x.terms) {
        const Weight& r = key.first;
        const Partition& P = key.second;
        bool i0 = !P.parts[0].empty();
        switch (which) {
            case DRWOp::F: {
                int64_t s = (i0 && !r.integral()) ? p : 1;
                out.add(r.scaled_p(1), P, c * s);
                break;
            }
            case DRWOp::V: {
                // V(e(p r)) = p e(r) whenever I_0 is empty or r/p is integral, e.g. V(T^p) = p T
                Weight q = r.scaled_p(-1);
                int64_t s = (i0 && !q.integral()) ? 1 : p;
                out.add(q, P, c * s);
                break;
            }
            case DRWOp::d: {
                if (!i0) break;
                Partition Q;
                Q.parts.push_back({});
                for (const auto& part : P.parts) Q.parts.push_back(part);
                int64_t s = 1;
                if (r.integral()) {
                    if (-r.t() < 0) throw Error("RangeError", "negative exponent in d");
                    s = ipow(p, -r.t());
                }
                out.add(r, Q, c * s);
                break;
            }
        }
    }
    return out;
}

std::vector<BasisKey> enumerate_basis(int p, int n, int d, int i, int bound) {
    std::vector<BasisKey> out;
    if (i > d || i < 0 || n < 1) return out;
    std::vector<int64_t> a(d, 0);
    while (true) {
        Weight r = Weight::from_fractions(p, a, n - 1);
        if (static_cast<int>(r.support().size()) >= i)
            for (auto& P : enumerate_partitions(r, i)) out.push_back({r, P});
        int j = 0;
        while (j < d && a[j] == bound) a[j++] = 0;
        if (j == d) break;
        ++a[j];
    }
    return out;
}

DRWIdentityReport check_drw_identities(int p, int n, int d, int i, int bound) {
    DRWIdentityReport rep;
    auto F = [](const DRWElement& x) { return act(DRWOp::F, x); };
    auto V = [](const DRWElement& x) { return act(DRWOp::V, x); };
    auto D = [](const DRWElement& x) { return act(DRWOp::d, x); };
    for (const auto& key : enumerate_basis(p, n, d, i, bound)) {
        DRWElement e = basis_element(p, n, key.r, key.P);
        ++rep.elements;
        auto fail = [&](const char* what) { rep.failures.push_back(std::string(what) + " on " + e.str()); };
        if (!D(D(e)).is_zero()) fail("d^2 = 0");
        if (F(V(e)) != e.scaled(p)) fail("FV = p");
        if (n >= 2 && V(F(e)) != e.scaled(p)) fail("VF = p");
        if (F(D(V(e))) != D(e)) fail("FdV = d");
        if (V(D(e)) != D(V(e)).scaled(p)) fail("Vd = pdV");
        if (n >= 2 && D(F(e)) != F(D(e)).scaled(p)) fail("dF = pFd");
    }
    return rep;
}

}  // namespace witt
