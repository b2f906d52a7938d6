#include "witt/proj_cech.hpp"

#include "witt/linalg.hpp"

#include <mutex>
#include <numeric>

namespace witt {

int FinLenModule::length() const { return std::accumulate(layers.begin(), layers.end(), 0); }

static long choose(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long classical_cohomology(int d, int m, int i) {
    if (i == 0 && m >= 0) return choose(m + d, d);
    if (i == d && -m - d - 1 >= 0) return choose(-m - 1, d);
    return 0;
}

std::vector<uint32_t> subsets_of_size(int d, int size) {
    std::vector<uint32_t> out;
    for (uint32_t I = 0; I < (1u << (d + 1)); ++I)
        if (__builtin_popcount(I) == size) out.push_back(I);
    return out;
}

static std::vector<int> members(uint32_t I) {
    std::vector<int> v;
    for (int i = 0; I >> i; ++i)
        if (I >> i & 1u) v.push_back(i);
    return v;
}

// delta restricted to subsets containing N: rows of size k+2, columns of size k+1
static MatZ pattern_delta(int d, uint32_t N, int k, std::vector<uint32_t>& rows, std::vector<uint32_t>& cols) {
    rows.clear();
    cols.clear();
    for (uint32_t I : subsets_of_size(d, k + 2))
        if ((I & N) == N) rows.push_back(I);
    for (uint32_t I : subsets_of_size(d, k + 1))
        if ((I & N) == N) cols.push_back(I);
    MatZ m = MatZ::Zero(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        auto mem = members(rows[r]);
        for (size_t j = 0; j < mem.size(); ++j) {
            uint32_t face = rows[r] & ~(1u << mem[j]);
            auto it = std::find(cols.begin(), cols.end(), face);
            if (it != cols.end()) m(static_cast<int>(r), static_cast<int>(it - cols.begin())) = j % 2 ? -1 : 1;
        }
    }
    return m;
}

static std::vector<long> cech_dims_in_box(int d, int m, int B) {
    int full = (1 << (d + 1));
    // cohomology of the complex of subsets containing each pole pattern
    std::vector<std::vector<long>> pattern(full, std::vector<long>(d + 1, 0));
    for (int N = 0; N < full; ++N) {
        std::vector<uint32_t> rows, cols;
        std::vector<int> rk(d + 2, 0);
        for (int k = 0; k <= d; ++k) rk[k] = rank_mod_p(pattern_delta(d, N, k, rows, cols), 2);
        for (int k = 0; k <= d; ++k) {
            std::vector<uint32_t> ck;
            for (uint32_t I : subsets_of_size(d, k + 1))
                if ((I & N) == static_cast<uint32_t>(N)) ck.push_back(I);
            pattern[N][k] = static_cast<long>(ck.size()) - rk[k] - (k ? rk[k - 1] : 0);
        }
    }
    std::vector<long> count(full, 0);
    std::vector<std::pair<int, int>> box(d + 1, {-B, B});
    for (const auto& e : graded_basis(d + 1, m, box).basis) {
        int N = 0;
        for (int j = 0; j <= d; ++j)
            if (e[j] < 0) N |= 1 << j;
        ++count[N];
    }
    std::vector<long> dims(d + 1, 0);
    for (int N = 0; N < full; ++N)
        for (int k = 0; k <= d; ++k) dims[k] += count[N] * pattern[N][k];
    return dims;
}

long classical_cohomology_cech(int d, int m, int i) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<long>> memo;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = memo.find({d, m});
        if (it != memo.end()) return it->second[i];
    }
    int B = std::abs(m) + d + 1;
    std::vector<long> dims = cech_dims_in_box(d, m, B);
    if (dims != cech_dims_in_box(d, m, B + 1)) throw Error("BoxUnstable", "Cech dimensions change with the box");
    std::lock_guard<std::mutex> g(mu);
    memo[{d, m}] = dims;
    return dims[i];
}

Cochain cech_differential(const Cochain& c, int d, int k) {
    Cochain out;
    for (uint32_t I : subsets_of_size(d, k + 2)) {
        auto mem = members(I);
        Laurent acc;
        bool any = false;
        for (size_t j = 0; j < mem.size(); ++j) {
            auto it = c.find(I & ~(1u << mem[j]));
            if (it == c.end()) continue;
            Laurent t = it->second.with_neg(I);
            if (!any) {
                acc = Laurent(t.p, t.k, t.nvars, I);
                any = true;
            }
            acc = j % 2 ? acc - t : acc + t;
        }
        if (any && !acc.is_zero()) out[I] = acc;
    }
    return out;
}

static WittVec wwith_neg(const WittVec& x, uint32_t I) {
    WittVec r = x;
    for (auto& a : r.c) a = a.with_neg(I);
    return r;
}

WittCochain witt_cech_differential(const WittCochain& c, int d, int k, int p, int n) {
    WittCochain out;
    for (uint32_t I : subsets_of_size(d, k + 2)) {
        auto mem = members(I);
        WittVec acc = wzero(p, n, d + 1, I);
        bool any = false;
        for (size_t j = 0; j < mem.size(); ++j) {
            auto it = c.find(I & ~(1u << mem[j]));
            if (it == c.end()) continue;
            WittVec t = wwith_neg(it->second, I);
            acc = j % 2 ? wsub(acc, t) : wadd(acc, t);
            any = true;
        }
        if (any && !acc.is_zero()) out[I] = acc;
    }
    return out;
}

WittCochain teichmuller_cochain(const Cochain& c, int n) {
    WittCochain out;
    for (const auto& [I, f] : c) out[I] = teichmuller(f, n);
    return out;
}

bool is_witt_section(const WittVec& x, uint32_t I, int a) {
    for (int l = 0; l < x.n(); ++l) {
        int64_t deg = a * ipow(x.p, l);
        for (const auto& [e, c] : x.c[l].terms) {
            int64_t s = 0;
            for (int j = 0; j < static_cast<int>(e.size()); ++j) {
                s += e[j];
                if (e[j] < 0 && !(I >> j & 1u)) return false;
            }
            if (s != deg) return false;
        }
    }
    return true;
}

WittCochain ses_V(const WittCochain& c) {
    WittCochain out;
    for (const auto& [I, x] : c) out[I] = verschiebung(x);
    return out;
}

Cochain ses_R(const WittCochain& c) {
    Cochain out;
    for (const auto& [I, x] : c)
        if (x.n() && !x.c[0].is_zero()) out[I] = x.c[0];
    return out;
}

ClassicalClass classical_class(const Cochain& c, int d, int k, int p) {
    uint32_t full = (1u << (d + 1)) - 1;
    std::map<Exp, std::map<uint32_t, int64_t>> by_exp;
    for (const auto& [I, f] : c)
        for (const auto& [e, v] : f.terms) by_exp[e][I] = v;
    ClassicalClass out;
    for (const auto& [e, vals] : by_exp) {
        uint32_t N = 0;
        for (int j = 0; j <= d; ++j)
            if (e[j] < 0) N |= 1u << j;
        auto value = [&](uint32_t I) {
            auto it = vals.find(I);
            return it == vals.end() ? int64_t{0} : it->second;
        };
        if (N == 0 && k == 0) {
            int64_t v = value(1u);
            for (uint32_t I : subsets_of_size(d, 1))
                if (value(I) != v) throw Error("NotACocycle", "degree 0 sections disagree on overlaps");
            out.coords[e] = v;
            continue;
        }
        if (N == full && k == d) {
            out.coords[e] = value(full);
            continue;
        }
        std::vector<uint32_t> rows, cols;
        MatZ m = k ? pattern_delta(d, N, k - 1, rows, cols) : MatZ();
        if (!k) rows = [&] {
            std::vector<uint32_t> r;
            for (uint32_t I : subsets_of_size(d, 1))
                if ((I & N) == N) r.push_back(I);
            return r;
        }();
        VecZ b(static_cast<int>(rows.size()));
        for (size_t r = 0; r < rows.size(); ++r) b(static_cast<int>(r)) = value(rows[r]);
        if (!k) {
            if (b.any()) throw Error("NotACocycle", "nonzero degree 0 cocycle in an acyclic exponent");
            continue;
        }
        VecZ x;
        if (!solve_mod_p(m, b, p, x)) throw Error("NotACocycle", "not a cocycle in degree " + std::to_string(k));
        for (size_t j = 0; j < cols.size(); ++j) {
            if (!x(static_cast<int>(j))) continue;
            Laurent t = Laurent::monomial(p, 1, e, x(static_cast<int>(j)), cols[j]);
            auto it = out.h.find(cols[j]);
            if (it == out.h.end()) out.h[cols[j]] = t;
            else it->second += t;
        }
    }
    return out;
}

Cochain classical_representative(const Exp& e, int d, int k, int p) {
    Cochain c;
    if (k == 0) {
        for (uint32_t I : subsets_of_size(d, 1)) c[I] = Laurent::monomial(p, 1, e, 1, I);
    } else if (k == d) {
        uint32_t full = (1u << (d + 1)) - 1;
        c[full] = Laurent::monomial(p, 1, e, 1, full);
    } else {
        throw Error("RangeError", "no classical cohomology in middle degrees");
    }
    return c;
}

static WittCochain drop_first(const WittCochain& z) {
    WittCochain out;
    for (const auto& [I, x] : z) {
        if (!x.c[0].is_zero()) throw Error("InternalError", "first coordinate survived the V-shift");
        WittVec y = x;
        y.c.erase(y.c.begin());
        if (!y.is_zero()) out[I] = y;
    }
    return out;
}

WittClassLead witt_class_lead(const WittCochain& z0, int d, int k, int p, int n, int a) {
    WittCochain z = z0;
    for (int layer = 0; layer < n; ++layer) {
        Cochain c = ses_R(z);
        for (const auto& [I, f] : c)
            if (!is_witt_section(teichmuller(f, 1), I, a * static_cast<int>(ipow(p, layer))))
                throw Error("DegreeError", "cocycle not homogeneous of the expected degree");
        ClassicalClass cls = classical_class(c, d, k, p);
        if (!cls.coords.empty()) return {layer, cls.coords};
        if (!cls.h.empty()) {
            WittCochain dh = witt_cech_differential(teichmuller_cochain(cls.h, n - layer), d, k - 1, p, n - layer);
            for (const auto& [I, y] : dh) {
                auto it = z.find(I);
                WittVec cur = it == z.end() ? wzero(p, n - layer, d + 1, I) : it->second;
                z[I] = wsub(wwith_neg(cur, I), y);
            }
        }
        if (n - layer == 1) break;
        z = drop_first(z);
    }
    return {};
}

WittCochain connecting_cocycle(const Cochain& c, int d, int k, int p, int n) {
    if (n < 2) return {};
    return drop_first(witt_cech_differential(teichmuller_cochain(c, n), d, k, p, n));
}

static std::vector<Exp> h_basis(int d, int k, int a) {
    if (k == 0 && a >= 0) return graded_basis(d + 1, a, std::vector<std::pair<int, int>>(d + 1, {0, a})).basis;
    if (k == d && a <= -d - 1)
        return graded_basis(d + 1, a, std::vector<std::pair<int, int>>(d + 1, {a + d, -1})).basis;
    return {};
}

ConnectingMap connecting_map(int d, int k, int p, int n, int a) {
    ConnectingMap out;
    out.k = k;
    std::vector<Exp> basis = h_basis(d, k, a);
    out.source_dim = static_cast<int>(basis.size());
    if (n < 2 || k + 1 > d) return out;
    std::map<std::pair<int, Exp>, std::pair<WittCochain, int64_t>> pivots;
    for (const auto& e : basis) {
        WittCochain w = connecting_cocycle(classical_representative(e, d, k, p), d, k, p, n);
        for (int guard = 0; guard < 1000; ++guard) {
            WittClassLead lead = witt_class_lead(w, d, k + 1, p, n - 1, p * a);
            if (lead.layer < 0) break;
            auto [key, c] = *lead.coords.begin();
            auto it = pivots.find({lead.layer, key});
            if (it == pivots.end()) {
                pivots[{lead.layer, key}] = {w, c};
                out.pivot_layers.push_back(lead.layer);
                break;
            }
            // w -= (c / c_pivot) * pivot; the images are p-torsion, so any integer lift of the ratio works
            int64_t inv = 1;
            while (inv * it->second.second % p != 1) ++inv;
            int64_t s = c * inv % p;
            for (const auto& [I, x] : it->second.first) {
                auto jt = w.find(I);
                WittVec cur = jt == w.end() ? wzero(p, n - 1, d + 1, I) : jt->second;
                w[I] = wsub(cur, wint(s, x));
            }
        }
    }
    return out;
}

LineBundleCohomology witt_cohomology(int p, int d, int n, int a) {
    LineBundleCohomology out;
    out.p = p, out.n = n, out.d = d, out.a = a;
    out.degrees.assign(d + 1, FinLenModule{p, n, std::vector<int>(n, 0)});
    if (n == 0) return out;
    LineBundleCohomology sub = witt_cohomology(p, d, n - 1, p * a);
    for (int k = 0; k <= d; ++k) out.connecting.push_back(connecting_map(d, k, p, n, a));
    for (int k = 0; k <= d; ++k) {
        auto& L = out.degrees[k].layers;
        long h = classical_cohomology_cech(d, a, k);
        L[0] = static_cast<int>(h) - out.connecting[k].rank();
        for (int l = 0; l + 1 < n; ++l) {
            int killed = 0;
            if (k > 0)
                for (int pl : out.connecting[k - 1].pivot_layers) killed += pl == l;
            L[l + 1] = sub.degrees[k].layers[l] - killed;
        }
        for (int x : L)
            if (x < 0) throw Error("InternalError", "negative layer dimension in the long exact sequence");
    }
    return out;
}

LineBundleCohomology witt_structure_sheaf_cohomology(int p, int d, int n) { return witt_cohomology(p, d, n, 0); }

std::vector<FinLenModule> witt_cohomology_closed_form(int p, int d, int n, int a) {
    std::vector<FinLenModule> out(d + 1, FinLenModule{p, n, std::vector<int>(n, 0)});
    for (int l = 0; l < n; ++l) {
        long m = a * ipow(p, l);
        if (m >= 0) out[0].layers[l] += static_cast<int>(choose(m + d, d));
        if (-m - d - 1 >= 0) out[d].layers[l] += static_cast<int>(choose(-m - 1, d));
    }
    return out;
}

}  // namespace witt
