#include "witt/linalg.hpp"

#include "witt/rings.hpp"

#include <cstdlib>
#include <utility>

namespace witt {

static int64_t inv_mod(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, r = pmod(a, m);
    while (r) {
        int64_t q = g / r;
        std::swap(g, r);
        r -= q * g;
        std::swap(x, x1);
        x1 -= q * x;
    }
    if (g != 1) throw Error("NotInvertible", "inverse mod m");
    return pmod(x, m);
}

int rank_mod_p(MatZ a, int64_t p) {
    a = a.unaryExpr([p](int64_t v) { return pmod(v, p); });
    int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols()), r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.row(piv).swap(a.row(r));
        int64_t inv = inv_mod(a(r, c), p);
        a.row(r) = a.row(r).unaryExpr([&](int64_t v) { return v * inv % p; });
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a(i, c)) continue;
            int64_t f = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) = pmod(a(i, j) - f * a(r, j), p);
        }
        ++r;
    }
    return r;
}

bool solve_mod_p(const MatZ& a0, const VecZ& b, int64_t p, VecZ& x) {
    int rows = static_cast<int>(a0.rows()), cols = static_cast<int>(a0.cols());
    MatZ a(rows, cols + 1);
    a.leftCols(cols) = a0;
    a.col(cols) = b;
    a = a.unaryExpr([p](int64_t v) { return pmod(v, p); });
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.row(piv).swap(a.row(r));
        int64_t inv = inv_mod(a(r, c), p);
        a.row(r) = a.row(r).unaryExpr([&](int64_t v) { return v * inv % p; });
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a(i, c)) continue;
            int64_t f = a(i, c);
            for (int j = c; j <= cols; ++j) a(i, j) = pmod(a(i, j) - f * a(r, j), p);
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (a(i, cols)) return false;
    x = VecZ::Zero(cols);
    for (int i = 0; i < r; ++i) x(pivcol[i]) = a(i, cols);
    return true;
}

bool SmithForm::unimodular() const {
    for (auto d : diag)
        if (d != 1 && d != -1) return false;
    return true;
}

static int64_t checked_mul_sub(int64_t a, int64_t f, int64_t b) {
    int64_t m, r;
    if (__builtin_mul_overflow(f, b, &m) || __builtin_sub_overflow(a, m, &r))
        throw Error("Overflow", "Smith normal form entry overflow");
    return r;
}

SmithForm smith_normal_form(MatZ a) {
    SmithForm out;
    int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    int t = 0;
    while (t < rows && t < cols) {
        // pick the smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        int64_t best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a(i, j) && (pi < 0 || std::llabs(a(i, j)) < best)) {
                    best = std::llabs(a(i, j));
                    pi = i, pj = j;
                }
        if (pi < 0) break;
        a.row(pi).swap(a.row(t));
        a.col(pj).swap(a.col(t));
        bool done = false;
        while (!done) {
            done = true;
            for (int i = t + 1; i < rows; ++i) {
                if (!a(i, t)) continue;
                int64_t q = a(i, t) / a(t, t);
                for (int j = t; j < cols; ++j) a(i, j) = checked_mul_sub(a(i, j), q, a(t, j));
                if (a(i, t)) {
                    a.row(i).swap(a.row(t));
                    done = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (!a(t, j)) continue;
                int64_t q = a(t, j) / a(t, t);
                for (int i = t; i < rows; ++i) a(i, j) = checked_mul_sub(a(i, j), q, a(i, t));
                if (a(t, j)) {
                    a.col(j).swap(a.col(t));
                    done = false;
                }
            }
            if (done) {
                // divisibility condition on the remaining block
                for (int i = t + 1; i < rows && done; ++i)
                    for (int j = t + 1; j < cols && done; ++j)
                        if (a(i, j) % a(t, t)) {
                            for (int c = t; c < cols; ++c) a(t, c) += a(i, c);
                            done = false;
                        }
            }
        }
        out.diag.push_back(a(t, t) < 0 ? -a(t, t) : a(t, t));
        ++t;
    }
    return out;
}

std::vector<int> local_smith(MatZ a, int64_t p, int n) {
    int64_t m = ipow(p, n);
    a = a.unaryExpr([m](int64_t v) { return pmod(v, m); });
    int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    std::vector<int> out;
    int t = 0;
    auto val = [&](int64_t v) { return v == 0 ? n : vp(v, static_cast<int>(p)); };
    while (t < rows && t < cols) {
        int pi = -1, pj = -1, best = n;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                int v = val(a(i, j));
                if (v < best) best = v, pi = i, pj = j;
            }
        if (pi < 0) break;
        a.row(pi).swap(a.row(t));
        a.col(pj).swap(a.col(t));
        int64_t piv = a(t, t);
        int64_t unit = piv / ipow(p, best);
        int64_t uinv = inv_mod(unit, m);
        int64_t pb = ipow(p, best);
        for (int i = t + 1; i < rows; ++i) {
            if (!a(i, t)) continue;
            int64_t f = (a(i, t) / pb) % m * uinv % m;
            for (int j = t; j < cols; ++j) a(i, j) = pmod(a(i, j) - f * a(t, j) % m, m);
        }
        for (int j = t + 1; j < cols; ++j) {
            if (!a(t, j)) continue;
            int64_t f = (a(t, j) / pb) % m * uinv % m;
            for (int i = t; i < rows; ++i) a(i, j) = pmod(a(i, j) - f * a(i, t) % m, m);
        }
        out.push_back(best);
        ++t;
    }
    return out;
}

int image_length(const MatZ& a, int64_t p, int n) {
    int len = 0;
    for (int e : local_smith(a, p, n)) len += n - e;
    return len;
}

}  // namespace witt
