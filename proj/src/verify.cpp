#include "qfano/verify.hpp"

#include <algorithm>
#include <thread>

namespace qfano {

namespace {

constexpr int kOffenderLimit = 10;

Subspace unpack_key(uint64_t key, int n) {
    Subspace s;
    s.n = n;
    s.k = 2;
    for (int i = 2 * n - 1; i >= 0; --i) {
        s.rows[i / n].n = n;
        s.rows[i / n].c[i % n] = (uint8_t)(key & 0xf);
        key >>= 4;
    }
    return s;
}

// the q^2+q+1 2-subspaces of a 3-dimensional block, as packed keys
void block_two_subspaces(const Field& f, const Subspace& b, std::vector<uint64_t>& out) {
    int q = f.q();
    auto combine = [&](int x1, int x2, int x3) {
        Vec v = vec_scale(f, x1, b.rows[0]);
        if (x2) v = vec_add(f, v, vec_scale(f, x2, b.rows[1]));
        if (x3) v = vec_add(f, v, vec_scale(f, x3, b.rows[2]));
        return v;
    };
    // kernels of the normalized functionals (l1, l2, l3) on the basis coords
    for (int l2 = 0; l2 < q; ++l2)
        for (int l3 = 0; l3 < q; ++l3)
            out.push_back(pack_key(canonicalize(
                f, {combine(f.neg(l2), 1, 0), combine(f.neg(l3), 0, 1)})));
    for (int l3 = 0; l3 < q; ++l3)
        out.push_back(
            pack_key(canonicalize(f, {combine(1, 0, 0), combine(0, f.neg(l3), 1)})));
    out.push_back(pack_key(canonicalize(f, {b.rows[0], b.rows[1]})));
}

// sorted keys of all 2-subspaces covered by the design, with multiplicity
std::vector<uint64_t> covered_keys(const Field& f, const Design& d, int workers) {
    std::vector<uint64_t> keys;
    if (d.k == 2) {
        for (const Block& b : d.blocks) keys.push_back(pack_key(b.s));
        std::sort(keys.begin(), keys.end());
        return keys;
    }
    if (d.k != 3) throw std::invalid_argument("coverage: blocks must have dimension 2 or 3");
    workers = std::max(1, workers);
    size_t nb = d.blocks.size();
    std::vector<std::vector<uint64_t>> parts(workers);
    auto run = [&](int w) {
        size_t lo = nb * w / workers, hi = nb * (w + 1) / workers;
        parts[w].reserve((hi - lo) * (f.q() * f.q() + f.q() + 1));
        for (size_t i = lo; i < hi; ++i) block_two_subspaces(f, d.blocks[i].s, parts[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (int w = 1; w < workers; ++w)
        parts[0].insert(parts[0].end(), parts[w].begin(), parts[w].end());
    std::sort(parts[0].begin(), parts[0].end());
    return parts[0];
}

} // namespace

uint64_t pack_key(const Subspace& s) {
    uint64_t key = 0;
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < s.n; ++i) key = (key << 4) | s.rows[r].c[i];
    return key;
}

CoverageReport coverage(const Field& f, const Design& d, int workers) {
    CoverageReport rep;
    rep.n = d.n;
    rep.q = f.q();
    rep.total = gaussian_binomial(d.n, 2, f.q());
    std::vector<uint64_t> keys = covered_keys(f, d, workers);
    long long distinct = 0;
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        ++rep.hist[(long long)(j - i)];
        ++distinct;
        i = j;
    }
    if (distinct < rep.total) rep.hist[0] = rep.total - distinct;
    return rep;
}

std::vector<Subspace> uncovered(const Field& f, const Design& d, int workers) {
    std::vector<uint64_t> keys = covered_keys(f, d, workers);
    std::vector<Subspace> out;
    for (const Subspace& s : enumerate_subspaces(f, d.n, 2))
        if (!std::binary_search(keys.begin(), keys.end(), pack_key(s))) out.push_back(s);
    return out;
}

namespace {

bool is_spread6(const Field& f, const std::vector<Subspace>& members, std::string* reason) {
    long long expect = gaussian_binomial(6, 1, f.q());
    std::map<Vec, int> count;
    long long covered = 0;
    for (const Subspace& m : members) {
        if (m.n != 6 || m.k != 2) {
            if (reason) *reason = "spread member is not a 2-subspace of F_q^6";
            return false;
        }
        for (const Vec& v : normalized_vectors(f, m)) {
            if (++count[v] > 1) {
                if (reason) *reason = "vector " + to_string(v) + " in two spread members";
                return false;
            }
            ++covered;
        }
    }
    if (covered != expect) {
        if (reason) *reason = "spread covers " + std::to_string(covered) + " of " +
                              std::to_string(expect) + " points";
        return false;
    }
    return true;
}

} // namespace

VerifyResult verify_pair(const Field& f, const Design& derived, const Design& residual,
                         int workers) {
    VerifyResult r;
    long long q2 = (long long)f.q() * f.q();
    if (derived.n != 6 || residual.n != 6 || derived.k != 2 || residual.k != 3) {
        r.reason = "expected 2-subspaces and 3-subspaces of F_q^6";
        return r;
    }
    std::vector<Subspace> members;
    for (const Block& b : derived.blocks) members.push_back(b.s);
    if (!is_spread6(f, members, &r.reason)) return r;
    if (!residual.distinct()) {
        r.reason = "residual contains duplicate blocks";
        return r;
    }

    std::vector<uint64_t> keys = covered_keys(f, residual, workers);
    std::vector<uint64_t> derived_keys;
    for (const Block& b : derived.blocks) derived_keys.push_back(pack_key(b.s));
    std::sort(derived_keys.begin(), derived_keys.end());

    r.report.n = 6;
    r.report.q = f.q();
    r.report.total = gaussian_binomial(6, 2, f.q());
    long long distinct = 0;
    bool ok = true;
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        long long mult = (long long)(j - i);
        ++r.report.hist[mult];
        ++distinct;
        bool in_derived =
            std::binary_search(derived_keys.begin(), derived_keys.end(), keys[i]);
        if (mult != q2 || in_derived) {
            ok = false;
            if ((int)r.report.offenders.size() < kOffenderLimit)
                r.report.offenders.push_back(unpack_key(keys[i], 6));
            if (r.reason.empty())
                r.reason = in_derived ? "a derived spread member is covered by the residual"
                                      : "a 2-subspace is covered " + std::to_string(mult) +
                                            " times instead of " + std::to_string(q2);
        }
        i = j;
    }
    if (distinct < r.report.total) r.report.hist[0] = r.report.total - distinct;
    if (ok && r.report.total - distinct != (long long)derived.blocks.size()) {
        ok = false;
        r.reason = "uncovered 2-subspace count does not match the derived spread size";
    }
    r.ok = ok;
    return r;
}

VerifyResult verify_residual(const Field& f, const Design& residual, int workers) {
    VerifyResult r;
    long long q = f.q(), q2 = q * q;
    if (residual.n != 6 || residual.k != 3) {
        r.reason = "expected 3-subspaces of F_q^6";
        return r;
    }
    if (!residual.distinct()) {
        r.reason = "residual contains duplicate blocks";
        return r;
    }
    r.report = coverage(f, residual, workers);
    long long spread_size = q2 * q2 + q2 + 1;
    std::map<long long, long long> expect{{0, spread_size}, {q2, r.report.total - spread_size}};
    if (r.report.hist != expect) {
        r.reason = "coverage histogram is not {0, q^2}";
        return r;
    }
    if (!is_spread6(f, uncovered(f, residual, workers), &r.reason)) return r;
    r.ok = true;
    return r;
}

namespace {

Vec drop_last(const Vec& v) {
    Vec r;
    r.n = v.n - 1;
    for (int i = 0; i < r.n; ++i) r.c[i] = v.c[i];
    return r;
}

} // namespace

Design punct_der(const Field& f, const Design& d) {
    Design out;
    out.q = d.q;
    out.n = d.n - 1;
    out.k = d.k - 1;
    Vec u;
    u.n = d.n;
    u.c[d.n - 1] = 1;
    for (const Block& b : d.blocks) {
        if (!contains(f, b.s, u)) continue;
        // u is a basis row of the RREF; the others have zero last coordinate
        std::vector<Vec> gens;
        for (int i = 0; i < b.s.k; ++i)
            if (b.s.rows[i] != u) gens.push_back(drop_last(b.s.rows[i]));
        out.blocks.push_back({b.tag, canonicalize(f, gens)});
    }
    out.sort_blocks();
    return out;
}

Design punct_res(const Field& f, const Design& d) {
    Design out;
    out.q = d.q;
    out.n = d.n - 1;
    out.k = d.k;
    Vec u;
    u.n = d.n;
    u.c[d.n - 1] = 1;
    for (const Block& b : d.blocks) {
        if (contains(f, b.s, u)) continue;
        std::vector<Vec> gens;
        for (int i = 0; i < b.s.k; ++i) gens.push_back(drop_last(b.s.rows[i]));
        out.blocks.push_back({b.tag, canonicalize(f, gens)});
    }
    out.sort_blocks();
    return out;
}

DivisibilityResult divisibility(int t, int k, int n, long long q) {
    if (!(0 < t && t <= k && k <= n))
        throw std::invalid_argument("divisibility: need 0 < t <= k <= n");
    DivisibilityResult r;
    r.ok = true;
    for (int i = 0; i < t; ++i) {
        long long num = gaussian_binomial(n - i, t - i, q);
        long long den = gaussian_binomial(k - i, t - i, q);
        bool integral = (num % den == 0);
        r.ratios.push_back({num, den, integral});
        r.ok = r.ok && integral;
    }
    return r;
}

Design dual(const Field& f, const Design& d) {
    Design out;
    out.q = d.q;
    out.n = d.n;
    out.k = d.n - d.k;
    for (const Block& b : d.blocks) out.blocks.push_back({b.tag, complement(f, b.s)});
    out.sort_blocks();
    return out;
}

} // namespace qfano
