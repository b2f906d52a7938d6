#include "witt/steinberg.hpp"

#include "witt/rings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace witt {

namespace {

int inv_mod_q(int a, int q) {
    for (int x = 1; x < q; ++x)
        if (a * x % q == 1) return x;
    throw Error("InternalError", "no inverse mod q");
}

// Reduced row echelon form of a rows x cols matrix over F_q, in place; returns rank.
int rref(std::vector<int>& m, int rows, int cols, int q) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i * cols + c]) { piv = i; break; }
        if (piv < 0) continue;
        for (int k = 0; k < cols; ++k) std::swap(m[r * cols + k], m[piv * cols + k]);
        int inv = inv_mod_q(m[r * cols + c], q);
        for (int k = 0; k < cols; ++k) m[r * cols + k] = m[r * cols + k] * inv % q;
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i * cols + c]) continue;
            int f = m[i * cols + c];
            for (int k = 0; k < cols; ++k) m[i * cols + k] = ((m[i * cols + k] - f * m[r * cols + k]) % q + q) % q;
        }
        ++r;
    }
    return r;
}

// Break positions k (dimensions of the flag's subspaces) for P_I.
std::vector<int> breaks(int size, RootSet I) {
    std::vector<int> out;
    for (int k = 1; k < size; ++k)
        if (!(I >> (k - 1) & 1)) out.push_back(k);
    return out;
}

RootSet full_roots(int size) { return size <= 1 ? 0 : (RootSet(1) << (size - 1)) - 1; }

// All k-dimensional subspaces of F_q^size in reduced echelon form.
std::vector<std::vector<int>> subspaces(int q, int size, int k) {
    std::set<std::vector<int>> seen;
    int cells = k * size;
    int64_t total = ipow(q, cells);
    std::vector<int> m(cells);
    for (int64_t code = 0; code < total; ++code) {
        int64_t c = code;
        for (int i = 0; i < cells; ++i) m[i] = static_cast<int>(c % q), c /= q;
        std::vector<int> r = m;
        if (rref(r, k, size, q) == k) seen.insert(r);
    }
    return {seen.begin(), seen.end()};
}

bool contains(const std::vector<int>& big, int kb, const std::vector<int>& small, int ks, int q, int size) {
    std::vector<int> m = big;
    m.insert(m.end(), small.begin(), small.end());
    return rref(m, kb + ks, size, q) == kb;
}

// Restrict a flag for P_fine (more breaks) to the breaks of P_coarse.
Flag restrict_flag(const Flag& f, int size, RootSet fine, RootSet coarse) {
    Flag out;
    int off = 0;
    std::vector<int> cb = breaks(size, coarse);
    for (int k : breaks(size, fine)) {
        if (std::find(cb.begin(), cb.end(), k) != cb.end())
            out.insert(out.end(), f.begin() + off, f.begin() + off + k * size);
        off += k * size;
    }
    return out;
}

int popcount(RootSet x) { return __builtin_popcount(x); }

std::string homology_str(int free_rank, const std::vector<int64_t>& torsion) {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank) os << "Z^" << free_rank, first = false;
    for (int64_t t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

}  // namespace

int64_t FiniteGL::order_formula(int q, int size) {
    int64_t out = 1;
    for (int i = 0; i < size; ++i) out *= ipow(q, size) - ipow(q, i);
    return out;
}

FiniteGL enumerate_gl(int q, int size) {
    if (!is_prime(q)) throw Error("DomainError", "q must be prime");
    if (size < 1 || ipow(q, size * size) > (1 << 20)) throw Error("ScaleExceeded", "GL too large to enumerate");
    FiniteGL G;
    G.q = q, G.size = size;
    int cells = size * size;
    int64_t total = ipow(q, cells);
    std::vector<int> m(cells);
    for (int64_t code = 0; code < total; ++code) {
        int64_t c = code;
        for (int i = 0; i < cells; ++i) m[i] = static_cast<int>(c % q), c /= q;
        std::vector<int> r = m;
        if (rref(r, size, size, q) == size) G.elements.push_back(m);
    }
    return G;
}

RootSet parse_roots(const std::string& s, int size) {
    RootSet out = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" ") == std::string::npos) continue;
        int a = std::stoi(tok);
        if (a < 0 || a > size - 2) throw Error("DomainError", "simple root index out of range: " + tok);
        out |= RootSet(1) << a;
    }
    return out;
}

std::string roots_str(RootSet I) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int a = 0; a < 32; ++a)
        if (I >> a & 1) os << (first ? "" : ",") << a, first = false;
    os << "}";
    return os.str();
}

Flag flag_of(const std::vector<int>& g, int q, int size, RootSet I) {
    Flag out;
    for (int k : breaks(size, I)) {
        // rows = first k columns of g
        std::vector<int> m(k * size);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < size; ++r) m[c * size + r] = g[r * size + c];
        rref(m, k, size, q);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

ParabolicCosets parabolic_cosets(const FiniteGL& G, RootSet I) {
    ParabolicCosets out;
    out.q = G.q, out.size = G.size, out.I = I;
    std::map<Flag, int64_t> count;
    for (const auto& g : G.elements) ++count[flag_of(g, G.q, G.size, I)];
    std::vector<int> id(G.size * G.size, 0);
    for (int i = 0; i < G.size; ++i) id[i * G.size + i] = 1;
    out.parabolic_order = count[flag_of(id, G.q, G.size, I)];
    out.partition_ok = true;
    for (const auto& [f, c] : count) {
        out.cosets.push_back(f);
        if (c != out.parabolic_order) out.partition_ok = false;
    }
    if (static_cast<int64_t>(out.cosets.size()) * out.parabolic_order != static_cast<int64_t>(G.elements.size()))
        out.partition_ok = false;
    return out;
}

int64_t flag_count(int q, int size, RootSet I) {
    auto qfact = [q](int m) {
        int64_t out = 1;
        for (int i = 1; i <= m; ++i) out *= (ipow(q, i) - 1) / (q - 1);
        return out;
    };
    int64_t den = 1;
    int prev = 0;
    std::vector<int> b = breaks(size, I);
    b.push_back(size);
    for (int k : b) den *= qfact(k - prev), prev = k;
    return qfact(size) / den;
}

std::vector<Flag> enumerate_flags(int q, int size, RootSet I) {
    std::vector<int> b = breaks(size, I);
    std::vector<std::vector<std::vector<int>>> subs;
    for (int k : b) subs.push_back(subspaces(q, size, k));
    std::vector<Flag> out;
    std::vector<const std::vector<int>*> chosen(b.size());
    auto rec = [&](auto&& self, size_t level) -> void {
        if (level == b.size()) {
            Flag f;
            for (auto* s : chosen) f.insert(f.end(), s->begin(), s->end());
            out.push_back(std::move(f));
            return;
        }
        for (const auto& s : subs[level]) {
            if (level && !contains(s, b[level], *chosen[level - 1], b[level - 1], q, size)) continue;
            chosen[level] = &s;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

InductionComplex build_complex(int q, int d, RootSet I, CoeffRing ring, int n) {
    int size = d + 1;
    if (!((size == 2 && (q == 2 || q == 3)) || (size == 3 && q == 2)))
        throw Error("ScaleExceeded", "induction complex limited to GL_2(F_2), GL_2(F_3), GL_3(F_2)");
    RootSet delta = full_roots(size);
    if (I & ~delta) throw Error("DomainError", "I is not a subset of the simple roots");
    if (ring == CoeffRing::Zpn && n < 1) throw Error("DomainError", "n must be positive");

    InductionComplex cx;
    cx.q = q, cx.size = size, cx.I = I, cx.ring = ring, cx.p = q, cx.n = n;
    int m = popcount(delta & ~I);
    cx.parts.assign(m + 1, {});
    for (RootSet J = 0; J <= delta; ++J)
        if ((J & I) == I && (J & ~delta) == 0) cx.parts[popcount(delta & ~J)].push_back(J);

    std::map<RootSet, std::vector<Flag>> flags;
    std::vector<std::map<RootSet, int>> offset(m + 1);
    cx.dims.assign(m + 1, 0);
    for (int s = 0; s <= m; ++s)
        for (RootSet J : cx.parts[s]) {
            flags[J] = enumerate_flags(q, size, J);
            offset[s][J] = cx.dims[s];
            cx.dims[s] += static_cast<int>(flags[J].size());
        }

    for (int s = 0; s < m; ++s) {
        MatZ D = MatZ::Zero(cx.dims[s + 1], cx.dims[s]);
        for (RootSet J : cx.parts[s])
            for (int a = 0; a < size - 1; ++a) {
                if (!(J >> a & 1) || (I >> a & 1)) continue;
                RootSet Jp = J & ~(RootSet(1) << a);
                // sign from the position of the new break among the breaks of Jp
                int before = popcount(delta & ~Jp & ((RootSet(1) << a) - 1));
                int sign = before % 2 ? -1 : 1;
                const auto& coarse = flags[J];
                const auto& fine = flags[Jp];
                for (size_t c = 0; c < fine.size(); ++c) {
                    Flag r = restrict_flag(fine[c], size, Jp, J);
                    auto it = std::lower_bound(coarse.begin(), coarse.end(), r);
                    if (it == coarse.end() || *it != r) throw Error("InternalError", "refinement lost");
                    D(offset[s + 1][Jp] + static_cast<int>(c), offset[s][J] + static_cast<int>(it - coarse.begin())) += sign;
                }
            }
        cx.diff.push_back(std::move(D));
    }
    cx.d_squared_zero = true;
    for (int s = 0; s + 1 < m; ++s)
        if (!(cx.diff[s + 1] * cx.diff[s]).isZero()) cx.d_squared_zero = false;
    if (!cx.d_squared_zero) throw Error("InternalError", "d o d != 0 in the induction complex");
    return cx;
}

AcyclicityReport acyclicity_check(const InductionComplex& cx) {
    AcyclicityReport rep;
    rep.ring = cx.ring, rep.p = cx.p, rep.n = cx.n;
    int m = static_cast<int>(cx.dims.size()) - 1;
    rep.exact = true;
    if (cx.ring == CoeffRing::Z) {
        std::vector<SmithForm> snf;
        for (const auto& D : cx.diff) snf.push_back(smith_normal_form(D));
        for (int s = 0; s < m; ++s) {
            int ker = cx.dims[s] - snf[s].rank();
            int im = s ? snf[s - 1].rank() : 0;
            std::vector<int64_t> tors;
            if (s)
                for (int64_t v : snf[s - 1].diag)
                    if (std::llabs(v) != 1) tors.push_back(std::llabs(v));
            rep.homology.push_back(homology_str(ker - im, tors));
            if (ker != im || !tors.empty()) rep.exact = false;
        }
        rep.cokernel_rank = cx.dims[m] - (m ? snf[m - 1].rank() : 0);
        if (m)
            for (int64_t v : snf[m - 1].diag)
                if (std::llabs(v) != 1) rep.torsion.push_back(std::llabs(v));
        rep.cokernel_free = rep.torsion.empty();
    } else {
        int n = cx.n;
        std::vector<int> img;
        for (const auto& D : cx.diff) img.push_back(image_length(D, cx.p, n));
        for (int s = 0; s < m; ++s) {
            int ker = n * cx.dims[s] - img[s];
            int im = s ? img[s - 1] : 0;
            rep.homology.push_back(ker == im ? "0" : "length " + std::to_string(ker - im));
            if (ker != im) rep.exact = false;
        }
        std::vector<int> e = m ? local_smith(cx.diff[m - 1], cx.p, n) : std::vector<int>{};
        int full = cx.dims[m] - static_cast<int>(e.size());
        rep.cokernel_layers.assign(n, full);
        for (int t = 0; t < n; ++t)
            for (int v : e)
                if (v > t) ++rep.cokernel_layers[t];
        rep.cokernel_free = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
        rep.cokernel_rank = rep.cokernel_layers[0];
    }
    int alt = 0;
    for (int s = 0; s <= m; ++s) alt += (s % 2 ? -1 : 1) * cx.dims[s];
    // Euler characteristic in lengths: ranks over Z, composition lengths over Z/p^n
    int coker_len = rep.cokernel_rank, scale = 1;
    if (cx.ring == CoeffRing::Zpn) {
        coker_len = 0;
        for (int v : rep.cokernel_layers) coker_len += v;
        scale = cx.n;
    }
    rep.euler = scale * alt + ((m + 1) % 2 ? -1 : 1) * coker_len;
    return rep;
}

SteinbergRank steinberg_rank(int q, int d, RootSet I) {
    InductionComplex cx = build_complex(q, d, I, CoeffRing::Z);
    AcyclicityReport rep = acyclicity_check(cx);
    SteinbergRank out;
    out.rank = rep.cokernel_rank;
    int m = static_cast<int>(cx.dims.size()) - 1;
    for (int s = 0; s <= m; ++s) out.alternating_sum += ((m - s) % 2 ? -1 : 1) * cx.dims[s];
    out.free = rep.exact && rep.cokernel_free;
    return out;
}

}  // namespace witt
