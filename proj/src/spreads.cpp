#include "qfano/spreads.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace qfano {

namespace {

// Up to 192 points (enough for q = 5, where F_q^4 has 156 projective points).
struct PointMask {
    std::array<uint64_t, 3> w{};

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    bool intersects(const PointMask& o) const {
        return (w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]);
    }
    void orWith(const PointMask& o) {
        w[0] |= o.w[0];
        w[1] |= o.w[1];
        w[2] |= o.w[2];
    }
    auto operator<=>(const PointMask&) const = default;
    // lowest index < limit that is not set, or -1 if fully covered
    int first_unset(int limit) const {
        for (int b = 0; b < 3; ++b) {
            uint64_t inv = ~w[b];
            if (inv) {
                int i = (b << 6) + __builtin_ctzll(inv);
                return i < limit ? i : -1;
            }
        }
        return -1;
    }
};

struct LineTable {
    std::vector<Vec> points;                 // normalized vectors, lex order
    std::vector<Subspace> lines;             // all 2-subspaces, lex order
    std::vector<PointMask> masks;            // projective points per line
    std::vector<std::vector<int>> through;   // line indices through each point
};

LineTable build_lines(const Field& f) {
    LineTable t;
    t.points = normalized_ambient(f, 4);
    std::map<Vec, int> pidx;
    for (int i = 0; i < (int)t.points.size(); ++i) pidx[t.points[i]] = i;
    t.lines = enumerate_subspaces(f, 4, 2);
    t.masks.resize(t.lines.size());
    t.through.resize(t.points.size());
    for (int li = 0; li < (int)t.lines.size(); ++li) {
        for (const Vec& v : normalized_vectors(f, t.lines[li])) {
            int p = pidx.at(v);
            t.masks[li].set(p);
            t.through[p].push_back(li);
        }
    }
    return t;
}

// Plain deterministic exact-cover search: extract the least spread of unused
// lines containing the least uncovered point, backtracking across spreads.
struct PlainSearch {
    const LineTable& t;
    int npoints, nspreads, spread_size;
    std::vector<char> used;
    std::vector<std::vector<int>> result;

    explicit PlainSearch(const Field& f, const LineTable& table)
        : t(table),
          npoints((int)table.points.size()),
          nspreads(f.q() * f.q() + f.q() + 1),
          spread_size(f.q() * f.q() + 1),
          used(table.lines.size(), 0) {}

    bool spread_step(PointMask cover, std::vector<int>& chosen,
                     const std::function<bool(const std::vector<int>&)>& done) {
        int p = cover.first_unset(npoints);
        if (p < 0) return done(chosen);
        for (int li : t.through[p]) {
            if (used[li] || t.masks[li].intersects(cover)) continue;
            PointMask next = cover;
            next.orWith(t.masks[li]);
            chosen.push_back(li);
            if (spread_step(next, chosen, done)) return true;
            chosen.pop_back();
        }
        return false;
    }

    bool solve(int depth) {
        if (depth == nspreads) return true;
        std::vector<int> chosen;
        return spread_step({}, chosen, [&](const std::vector<int>& sp) {
            for (int li : sp) used[li] = 1;
            result.push_back(sp);
            if (solve(depth + 1)) return true;
            result.pop_back();
            for (int li : sp) used[li] = 0;
            return false;
        });
    }
};

// --- cyclic-invariant search for q in {4, 5} ---------------------------------
//
// F_q^4 is identified with GF(q^3) x GF(q); the map g(x, y) = (eta*x, y) with
// eta of multiplicative order m permutes the lines in orbits of length m.
// A parallelism invariant under g is determined by (q^2+q+1)/m base spreads
// whose lines lie in pairwise distinct orbits.

struct CubicExt {
    const Field& f;
    std::array<int, 3> modulus; // monic x^3 + c2 x^2 + c1 x + c0, stored c0..c2

    explicit CubicExt(const Field& base) : f(base) {
        for (int c2 = 0; c2 < f.q(); ++c2)
            for (int c1 = 0; c1 < f.q(); ++c1)
                for (int c0 = 0; c0 < f.q(); ++c0) {
                    bool root = false;
                    for (int x = 0; x < f.q() && !root; ++x) {
                        int x2 = f.mul(x, x);
                        int v = f.add(f.mul(x2, x),
                                      f.add(f.mul(c2, x2), f.add(f.mul(c1, x), c0)));
                        root = (v == 0);
                    }
                    if (!root) {
                        modulus = {c0, c1, c2};
                        return;
                    }
                }
        throw std::logic_error("spreads: no root-free cubic found");
    }

    using Elt = std::array<int, 3>;

    Elt mul(const Elt& a, const Elt& b) const {
        std::array<int, 5> prod{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
        for (int d = 4; d >= 3; --d) {
            int co = prod[d];
            if (!co) continue;
            prod[d] = 0;
            for (int k = 0; k < 3; ++k)
                prod[d - 3 + k] = f.add(prod[d - 3 + k], f.mul(co, f.neg(modulus[k])));
        }
        return {prod[0], prod[1], prod[2]};
    }

    int order(const Elt& a) const {
        Elt one{1, 0, 0}, x = a;
        int o = 1;
        while (x != one) {
            x = mul(x, a);
            if (++o > f.q() * f.q() * f.q()) return -1;
        }
        return o;
    }

    // smallest element (by code e0 + q*e1 + q^2*e2) of multiplicative order m
    Elt generator_of_order(int m) const {
        for (int code = 1; code < f.q() * f.q() * f.q(); ++code) {
            Elt e{code % f.q(), (code / f.q()) % f.q(), code / (f.q() * f.q())};
            if (order(e) == m) return e;
        }
        throw std::logic_error("spreads: no element of the requested order");
    }
};

Parallelism invariant_search(const Field& f, const LineTable& t, int m) {
    CubicExt ext(f);
    CubicExt::Elt eta = ext.generator_of_order(m);

    std::map<Vec, int> pidx;
    for (int i = 0; i < (int)t.points.size(); ++i) pidx[t.points[i]] = i;

    // g on projective points
    std::vector<int> gp(t.points.size());
    for (int i = 0; i < (int)t.points.size(); ++i) {
        const Vec& v = t.points[i];
        auto nx = ext.mul({v[0], v[1], v[2]}, eta);
        Vec w(4, {nx[0], nx[1], nx[2], v[3]});
        gp[i] = pidx.at(normalize_rep(f, w));
    }

    // g on lines, via point masks
    std::map<PointMask, int> mask_idx;
    for (int li = 0; li < (int)t.lines.size(); ++li) mask_idx[t.masks[li]] = li;
    auto gline = [&](int li) {
        PointMask nm;
        for (int p = 0; p < (int)t.points.size(); ++p)
            if (t.masks[li].w[p >> 6] & (1ULL << (p & 63))) nm.set(gp[p]);
        return mask_idx.at(nm);
    };

    int L = (int)t.lines.size();
    std::vector<int> orbit_of(L, -1), gl(L);
    int norbits = 0;
    for (int li = 0; li < L; ++li) gl[li] = gline(li);
    for (int li = 0; li < L; ++li) {
        if (orbit_of[li] >= 0) continue;
        int cur = li, len = 0;
        do {
            orbit_of[cur] = norbits;
            cur = gl[cur];
            ++len;
        } while (cur != li);
        if (len != m) throw std::logic_error("spreads: short line orbit, order unusable");
        ++norbits;
    }

    int nbase = (f.q() * f.q() + f.q() + 1) / m;
    int npoints = (int)t.points.size();
    std::vector<char> orbit_used(norbits, 0);
    std::vector<std::vector<int>> base;

    std::function<bool(PointMask, std::vector<int>&, std::vector<char>&)> spread_step =
        [&](PointMask cover, std::vector<int>& chosen, std::vector<char>& touched) {
            int p = cover.first_unset(npoints);
            if (p < 0) {
                for (int li : chosen) orbit_used[orbit_of[li]] = 1;
                base.push_back(chosen);
                if ((int)base.size() == nbase) return true;
                std::vector<int> next;
                std::vector<char> tnext(norbits, 0);
                if (spread_step({}, next, tnext)) return true;
                base.pop_back();
                for (int li : chosen) orbit_used[orbit_of[li]] = 0;
                return false;
            }
            for (int li : t.through[p]) {
                int ob = orbit_of[li];
                if (orbit_used[ob] || touched[ob]) continue;
                if (t.masks[li].intersects(cover)) continue;
                PointMask nc = cover;
                nc.orWith(t.masks[li]);
                chosen.push_back(li);
                touched[ob] = 1;
                if (spread_step(nc, chosen, touched)) return true;
                chosen.pop_back();
                touched[ob] = 0;
            }
            return false;
        };

    std::vector<int> chosen;
    std::vector<char> touched(norbits, 0);
    if (!spread_step({}, chosen, touched))
        throw std::logic_error("spreads: invariant parallelism search failed");

    Parallelism out;
    for (const auto& sp : base) {
        std::vector<int> cur = sp;
        for (int i = 0; i < m; ++i) {
            Spread s;
            std::vector<int> sorted_cur = cur;
            std::sort(sorted_cur.begin(), sorted_cur.end());
            for (int li : sorted_cur) s.push_back(t.lines[li]);
            out.push_back(s);
            for (int& li : cur) li = gl[li];
        }
    }
    return out;
}

} // namespace

bool verify_spread(const Field& f, const Spread& s, std::string* diag) {
    auto fail = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return false;
    };
    for (const Subspace& m : s)
        if (m.n != 4 || m.k != 2) return fail("member is not a 2-subspace of F_q^4");
    std::map<Vec, int> count;
    for (const Vec& v : normalized_ambient(f, 4)) count[v] = 0;
    for (const Subspace& m : s)
        for (const Vec& v : normalized_vectors(f, m)) ++count[v];
    for (const auto& [v, c] : count)
        if (c != 1)
            return fail("vector " + to_string(v) + " covered " + std::to_string(c) + " times");
    return true;
}

bool verify_parallelism(const Field& f, const Parallelism& p, std::string* diag) {
    auto fail = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return false;
    };
    if ((int)p.size() != f.q() * f.q() + f.q() + 1)
        return fail("wrong number of spreads: " + std::to_string(p.size()));
    std::map<Subspace, int> seen;
    for (int i = 0; i < (int)p.size(); ++i) {
        std::string d;
        if (!verify_spread(f, p[i], &d)) return fail("spread " + std::to_string(i) + ": " + d);
        for (const Subspace& m : p[i]) ++seen[m];
    }
    for (const auto& [m, c] : seen)
        if (c != 1) return fail("line " + to_string(m) + " appears in several spreads");
    if ((long long)seen.size() != gaussian_binomial(4, 2, f.q()))
        return fail("union is not all of G_q(4,2)");
    return true;
}

Parallelism find_parallelism(const Field& f) {
    LineTable t = build_lines(f);
    if (f.q() <= 3) {
        PlainSearch search(f, t);
        if (!search.solve(0)) throw std::logic_error("spreads: backtracking search failed");
        Parallelism out;
        for (const auto& sp : search.result) {
            std::vector<int> sorted_sp = sp;
            std::sort(sorted_sp.begin(), sorted_sp.end());
            Spread s;
            for (int li : sorted_sp) s.push_back(t.lines[li]);
            out.push_back(s);
        }
        return out;
    }
    if (f.q() == 4) return invariant_search(f, t, 7);
    if (f.q() == 5) return invariant_search(f, t, 31);
    throw std::invalid_argument("spreads: no parallelism search for q = " +
                                std::to_string(f.q()));
}

PartitionABC partition_abc(const Field& f, const Parallelism& p) {
    std::string diag;
    if (!verify_parallelism(f, p, &diag))
        throw std::invalid_argument("spreads: not a parallelism: " + diag);
    int q = f.q();
    PartitionABC out;
    out.A = p[0];
    for (int i = 1; i <= q; ++i) out.B.push_back(p[i]);
    for (int i = q + 1; i < (int)p.size(); ++i) out.C.push_back(p[i]);
    out.C_xi.resize(q);
    for (int xi = 0; xi < q; ++xi)
        for (int j = 0; j < q; ++j) out.C_xi[xi].push_back(out.C[xi * q + j]);
    return out;
}

} // namespace qfano
