#include "qfano/linalg.hpp"

#include <algorithm>

namespace qfano {

Vec::Vec(int ambient, std::initializer_list<int> coords) : n(ambient) {
    if ((int)coords.size() != ambient || ambient > kMaxAmbient)
        throw std::invalid_argument("vec: coordinate count does not match ambient");
    int i = 0;
    for (int x : coords) c[i++] = (uint8_t)x;
}

bool Vec::is_zero() const {
    for (int i = 0; i < n; ++i)
        if (c[i]) return false;
    return true;
}

int Vec::pivot() const {
    for (int i = 0; i < n; ++i)
        if (c[i]) return i;
    return n;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.n != b.n) throw std::invalid_argument("vec: ambient mismatch");
    Vec r;
    r.n = a.n;
    for (int i = 0; i < a.n; ++i) r.c[i] = (uint8_t)f.add(a.c[i], b.c[i]);
    return r;
}

Vec vec_scale(const Field& f, int c, const Vec& v) {
    Vec r;
    r.n = v.n;
    for (int i = 0; i < v.n; ++i) r.c[i] = (uint8_t)f.mul(c, v.c[i]);
    return r;
}

Vec normalize_rep(const Field& f, const Vec& v) {
    int p = v.pivot();
    if (p == v.n) throw std::domain_error("vec: cannot normalize the zero vector");
    return vec_scale(f, f.inv(v.c[p]), v);
}

Subspace canonicalize(const Field& f, const std::vector<Vec>& gens) {
    if (gens.empty()) throw std::invalid_argument("subspace: empty generator set");
    int n = gens[0].n;
    for (const Vec& g : gens)
        if (g.n != n) throw std::invalid_argument("subspace: ambient mismatch");

    std::vector<Vec> rows(gens);
    int rank = 0;
    for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r].c[col]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        rows[rank] = vec_scale(f, f.inv(rows[rank].c[col]), rows[rank]);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r].c[col] == 0) continue;
            Vec t = vec_scale(f, f.neg(rows[r].c[col]), rows[rank]);
            rows[r] = vec_add(f, rows[r], t);
        }
        ++rank;
    }
    if (rank > kMaxDim) throw std::invalid_argument("subspace: dimension too large");

    Subspace s;
    s.n = n;
    s.k = rank;
    for (int i = 0; i < rank; ++i) s.rows[i] = rows[i];
    return s;
}

bool contains(const Field& f, const Subspace& u, const Vec& v) {
    if (u.n != v.n) throw std::invalid_argument("subspace: ambient mismatch");
    Vec r = v;
    for (int i = 0; i < u.k; ++i) {
        int p = u.rows[i].pivot();
        if (r.c[p]) r = vec_add(f, r, vec_scale(f, f.neg(r.c[p]), u.rows[i]));
    }
    return r.is_zero();
}

bool is_subspace(const Field& f, const Subspace& u, const Subspace& w) {
    for (int i = 0; i < u.k; ++i)
        if (!contains(f, w, u.rows[i])) return false;
    return true;
}

std::vector<Vec> span_vectors(const Field& f, const Subspace& s) {
    std::vector<Vec> out;
    int q = f.q();
    long long total = 1;
    for (int i = 0; i < s.k; ++i) total *= q;
    out.reserve(total);
    std::array<int, kMaxDim> coef{};
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        Vec v;
        v.n = s.n;
        for (int i = 0; i < s.k; ++i) {
            coef[i] = (int)(t % q);
            t /= q;
            if (coef[i]) v = vec_add(f, v, vec_scale(f, coef[i], s.rows[i]));
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Vec> normalized_vectors(const Field& f, const Subspace& s) {
    std::vector<Vec> out;
    for (const Vec& v : span_vectors(f, s)) {
        int p = v.pivot();
        if (p < v.n && v.c[p] == 1) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> normalized_ambient(const Field& f, int n) {
    Subspace all;
    all.n = n;
    all.k = n;
    for (int i = 0; i < n; ++i) {
        all.rows[i].n = n;
        all.rows[i].c[i] = 1;
    }
    return normalized_vectors(f, all);
}

namespace {

// Recursively fill the free (non-pivot) entries of an RREF profile.
void fill_free(const Field& f, int n, int k, const std::vector<int>& pivots,
               Subspace& s, int row, int col, std::vector<Subspace>& out) {
    if (row == k) {
        out.push_back(s);
        return;
    }
    if (col == n) {
        fill_free(f, n, k, pivots, s, row + 1, 0, out);
        return;
    }
    // entries left of the pivot are zero; pivot entry is 1
    if (col < pivots[row]) {
        fill_free(f, n, k, pivots, s, row, col + 1, out);
        return;
    }
    if (col == pivots[row]) {
        s.rows[row].c[col] = 1;
        fill_free(f, n, k, pivots, s, row, col + 1, out);
        return;
    }
    // col > pivots[row]: free unless col is a later pivot column
    bool is_pivot_col = false;
    for (int r = row + 1; r < k; ++r)
        if (pivots[r] == col) is_pivot_col = true;
    if (is_pivot_col) {
        s.rows[row].c[col] = 0;
        fill_free(f, n, k, pivots, s, row, col + 1, out);
        return;
    }
    for (int v = 0; v < f.q(); ++v) {
        s.rows[row].c[col] = (uint8_t)v;
        fill_free(f, n, k, pivots, s, row, col + 1, out);
    }
    s.rows[row].c[col] = 0;
}

void walk_row(const Field& f, int n, int k, std::vector<int>& pivots,
              std::vector<Subspace>& out) {
    if ((int)pivots.size() == k) {
        Subspace s;
        s.n = n;
        s.k = k;
        for (int i = 0; i < k; ++i) s.rows[i].n = n;
        fill_free(f, n, k, pivots, s, 0, 0, out);
        return;
    }
    int lo = pivots.empty() ? 0 : pivots.back() + 1;
    for (int p = lo; p < n; ++p) {
        pivots.push_back(p);
        walk_row(f, n, k, pivots, out);
        pivots.pop_back();
    }
}

} // namespace

std::vector<Subspace> enumerate_subspaces(const Field& f, int n, int k) {
    if (k < 0 || k > n || n > kMaxAmbient)
        throw std::invalid_argument("subspace: invalid (n, k)");
    std::vector<Subspace> out;
    if (k == 0) {
        Subspace s;
        s.n = n;
        out.push_back(s);
        return out;
    }
    std::vector<int> pivots;
    walk_row(f, n, k, pivots, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    // product of (q^(n-i) - 1) / (q^(k-i) - 1), accumulated exactly
    __int128 num = 1, den = 1;
    auto qpow = [q](int e) {
        __int128 r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(k - i) - 1;
    }
    if (den == 0) return 1; // k == 0
    __int128 r = num / den;
    if (r * den != num) throw std::logic_error("gaussian_binomial: non-integral ratio");
    if (r > (__int128)9223372036854775807LL)
        throw std::overflow_error("gaussian_binomial: result exceeds 64 bits");
    return (long long)r;
}

Subspace complement(const Field& f, const Subspace& s) {
    // null space of the k x n basis matrix
    std::vector<Vec> gens;
    std::vector<int> pivots;
    for (int i = 0; i < s.k; ++i) pivots.push_back(s.rows[i].pivot());
    for (int col = 0; col < s.n; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        Vec v;
        v.n = s.n;
        v.c[col] = 1;
        for (int i = 0; i < s.k; ++i) v.c[pivots[i]] = (uint8_t)f.neg(s.rows[i].c[col]);
        gens.push_back(v);
    }
    if (gens.empty()) {
        Subspace z;
        z.n = s.n;
        return z;
    }
    return canonicalize(f, gens);
}

std::string to_string(const Vec& v) {
    std::string s;
    for (int i = 0; i < v.n; ++i) s += (char)('0' + v.c[i]);
    return s;
}

std::string to_string(const Subspace& s) {
    std::string out;
    for (int i = 0; i < s.k; ++i) {
        if (i) out += ';';
        out += to_string(s.rows[i]);
    }
    return out;
}

} // namespace qfano
