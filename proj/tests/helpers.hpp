// Shared helpers for the unit and acceptance tests: fixture loading and the
// exhaustive structural checks reused by both.
#ifndef QFANO_TESTS_HELPERS_HPP
#define QFANO_TESTS_HELPERS_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qfano/design_io.hpp"
#include "qfano/verify.hpp"

namespace qfano::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(QFANO_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& name) { return read_file(fixture_path(name)); }

// Parse "row1/row2/..." into a matrix of digits.
inline Mat parse_mat(const std::string& s) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : s) {
        if (ch == '/') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    rows.push_back(cur);
    Mat m((int)rows.size(), (int)rows[0].size());
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = (uint8_t)(rows[r][c] - '0');
    return m;
}

// The subspace spanned by the columns of a matrix.
inline Subspace col_span(const Field& f, const Mat& m) {
    std::vector<Vec> gens;
    for (int c = 0; c < m.cols; ++c) {
        Vec v = m.col(c);
        if (!v.is_zero()) gens.push_back(v);
    }
    return canonicalize(f, gens);
}

struct FixtureLine {
    std::string group;
    Mat mat;
    bool flagged = false; // leading '!' marks suspected transcription typos
};

// Lines of the form "[!]GROUP row1/row2/..." or bare "row1/row2/...".
inline std::vector<FixtureLine> load_fixture(const std::string& name) {
    std::istringstream in(slurp(name));
    std::vector<FixtureLine> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        FixtureLine fl;
        if (line[0] == '!') {
            fl.flagged = true;
            line = line.substr(1);
        }
        auto sp = line.find(' ');
        if (sp != std::string::npos && line.find('/') > sp) {
            fl.group = line.substr(0, sp);
            fl.mat = parse_mat(line.substr(sp + 1));
        } else {
            fl.mat = parse_mat(line);
        }
        out.push_back(fl);
    }
    return out;
}

inline Parallelism table1_parallelism(const Field& f) {
    return parse_parallelism(f, slurp("parallelism_q2.txt"));
}

// ---- structural checks shared with the acceptance suite -------------------

// Count lifts of subspaces under coordinate projections (extension counting):
// how many k2-subspaces of F_q^(n + extra) project onto a given subspace,
// optionally required to avoid / contain the new unit vectors.
inline Vec project_to(const Vec& v, int n) {
    Vec p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.c[i] = v.c[i];
    return p;
}

inline Subspace project_subspace(const Field& f, const Subspace& s, int n) {
    std::vector<Vec> gens;
    for (int i = 0; i < s.k; ++i) gens.push_back(project_to(s.rows[i], n));
    bool all_zero = true;
    for (const Vec& g : gens) all_zero = all_zero && g.is_zero();
    if (all_zero) {
        Subspace z;
        z.n = n;
        return z;
    }
    return canonicalize(f, gens);
}

// Lemma-style extension counts checked by brute force over G_q(n2, k2).
// Returns the number of subspaces Y with project(Y) == x and, depending on
// want_unit, containing (+1) or avoiding (-1) the last unit vector.
inline long long count_lifts(const Field& f, const Subspace& x, int n2, int k2, int want_unit) {
    long long count = 0;
    Vec u;
    u.n = n2;
    u.c[n2 - 1] = 1;
    for (const Subspace& y : enumerate_subspaces(f, n2, k2)) {
        bool has_u = contains(f, y, u);
        if (want_unit > 0 && !has_u) continue;
        if (want_unit < 0 && has_u) continue;
        if (project_subspace(f, y, x.n) == x) ++count;
    }
    return count;
}

// Multiplicity of one 2-subspace among the listed blocks, via packed keys.
struct KeyIndex {
    std::vector<uint64_t> keys;

    explicit KeyIndex(const Field& f, const Design& d, BlockTag tag) {
        for (const Block& b : d.blocks) {
            if (b.tag != tag) continue;
            for (const Subspace& w : two_subspaces_of(f, b.s)) keys.push_back(pack_key(w));
        }
        std::sort(keys.begin(), keys.end());
    }

    long long count(const Subspace& w) const {
        auto [lo, hi] = std::equal_range(keys.begin(), keys.end(), pack_key(w));
        return hi - lo;
    }

    static std::vector<Subspace> two_subspaces_of(const Field& f, const Subspace& b) {
        if (b.k == 2) return {b};
        std::vector<Subspace> out;
        std::set<Subspace> seen;
        for (const Subspace& w : enumerate_subspaces(f, 3, 2)) {
            std::vector<Vec> gens;
            for (int i = 0; i < 2; ++i) {
                Vec v = vec_scale(f, w.rows[i].c[0], b.rows[0]);
                v = vec_add(f, v, vec_scale(f, w.rows[i].c[1], b.rows[1]));
                v = vec_add(f, v, vec_scale(f, w.rows[i].c[2], b.rows[2]));
                gens.push_back(v);
            }
            Subspace s = canonicalize(f, gens);
            if (seen.insert(s).second) out.push_back(s);
        }
        return out;
    }
};

// Classify every 2-subspace of F_q^6 by its 4-row projection and check the
// per-source multiplicities of the construction against it.  `sample`
// restricts to a pseudo-random subset for the larger fields (0 = all).
struct MultiplicityCheck {
    bool ok = true;
    std::string reason;
};

inline MultiplicityCheck check_source_multiplicities(const Field& f,
                                                     const ConstructionResult& r,
                                                     long long sample = 0) {
    MultiplicityCheck res;
    long long q = f.q(), q2 = q * q;

    std::set<Subspace> a_lines, b_lines, c_lines;
    for (const Subspace& s : r.partition.A) a_lines.insert(s);
    for (const Spread& sp : r.partition.B)
        for (const Subspace& s : sp) b_lines.insert(s);
    for (const Spread& sp : r.partition.C)
        for (const Subspace& s : sp) c_lines.insert(s);

    std::set<uint64_t> derived_keys;
    for (const Block& b : r.derived.blocks) derived_keys.insert(pack_key(b.s));

    KeyIndex idxB(f, r.residual, BlockTag::B);
    KeyIndex idxC(f, r.residual, BlockTag::C);
    KeyIndex idxD(f, r.residual, BlockTag::D);

    Subspace s0 = block_s0(f);
    Vec e6(6, {0, 0, 0, 0, 0, 1});

    std::vector<Subspace> all = enumerate_subspaces(f, 6, 2);
    std::vector<Subspace> todo;
    if (sample > 0 && sample < (long long)all.size()) {
        std::mt19937_64 rng(20260823);
        std::vector<size_t> idx(all.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        for (long long i = 0; i < sample; ++i) todo.push_back(all[idx[i]]);
    } else {
        todo = all;
    }

    auto fail = [&](const Subspace& w, const std::string& why) {
        res.ok = false;
        if (res.reason.empty()) res.reason = why + " at " + to_string(w);
    };

    for (const Subspace& w : todo) {
        Subspace p = project_subspace(f, w, 4);
        if (p.k == 2) {
            if (b_lines.count(p)) {
                if (idxB.count(w) != 1) fail(w, "projection in B not covered once by the B blocks");
                if (idxD.count(w) != q2 - 1) fail(w, "projection in B not covered q^2-1 times by the D blocks");
            } else if (c_lines.count(p)) {
                if (idxC.count(w) != 1) fail(w, "projection in C not covered once by the C blocks");
                if (idxD.count(w) != q2 - 1) fail(w, "projection in C not covered q^2-1 times by the D blocks");
            } else if (a_lines.count(p)) {
                if (derived_keys.count(pack_key(w))) {
                    if (idxD.count(w) != 0) fail(w, "derived block covered by the D blocks");
                } else {
                    if (idxD.count(w) != q2) fail(w, "lift of an A line not covered q^2 times by the D blocks");
                }
            } else {
                fail(w, "projection is a line of no spread");
            }
        } else if (w == s0) {
            // the one block with zero projection
        } else if (contains(f, w, e6)) {
            if (idxB.count(w) != q2) fail(w, "subspace through e6 not covered q^2 times by the B blocks");
        } else {
            if (idxC.count(w) != q2) fail(w, "degenerate subspace not covered q^2 times by the C blocks");
        }
    }
    return res;
}

} // namespace qfano::testing

#endif
