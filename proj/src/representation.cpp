#include "qfano/representation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qfano {

namespace {

Vec project4(const Vec& v) {
    Vec p;
    p.n = 4;
    for (int i = 0; i < 4; ++i) p.c[i] = v.c[i];
    return p;
}

} // namespace

Mat rep2(const Field& f, const Subspace& s) {
    if (s.k != 2 || (s.n != 4 && s.n != 6))
        throw std::invalid_argument("rep2: need a 2-subspace of F_q^4 or F_q^6");
    std::vector<Vec> vs = normalized_vectors(f, s);
    std::vector<std::pair<Vec, Vec>> by_proj; // (projection, full vector)
    for (const Vec& v : vs) {
        Vec p = project4(v);
        if (p.is_zero())
            throw UnrepresentableError("rep2: vector " + to_string(v) +
                                       " vanishes on the first four coordinates");
        by_proj.emplace_back(p, v);
    }
    std::sort(by_proj.begin(), by_proj.end());
    const Vec& v1 = by_proj[0].second;
    const Vec& v2 = by_proj[1].second;
    Mat m(s.n, f.q() + 1);
    m.set_col(0, v1);
    m.set_col(1, v2);
    for (int i = 2; i < m.cols; ++i)
        m.set_col(i, vec_add(f, vec_scale(f, f.pow(f.alpha(), i - 2), v1), v2));
    return m;
}

Subspace a_member(const Field& f, const Subspace& y, const Spread& A) {
    const Subspace* found = nullptr;
    for (const Subspace& x : A) {
        if (!is_subspace(f, x, y)) continue;
        if (found) throw std::logic_error("a_member: several spread members inside one 3-subspace");
        found = &x;
    }
    if (!found) throw std::logic_error("a_member: no spread member inside the 3-subspace");
    return *found;
}

std::vector<Expansion> expansions_of(const Field& f, const Subspace& x) {
    if (x.n != 4 || x.k != 2)
        throw std::invalid_argument("expansions_of: need a 2-subspace of F_q^4");
    std::set<Subspace> seen;
    std::vector<Expansion> out;
    for (const Vec& v : normalized_ambient(f, 4)) {
        if (contains(f, x, v)) continue;
        Subspace y = canonicalize(f, {x.rows[0], x.rows[1], v});
        if (!seen.insert(y).second) continue;
        Expansion e;
        e.y = y;
        for (const Vec& w : normalized_vectors(f, y))
            if (!contains(f, x, w)) {
                e.u = w; // normalized vectors come in lex order
                break;
            }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(),
              [](const Expansion& a, const Expansion& b) { return a.u < b.u; });
    return out;
}

Mat rep3(const Field& f, const Subspace& y, const Spread& A) {
    if (y.k != 3 || (y.n != 4 && y.n != 6))
        throw std::invalid_argument("rep3: need a 3-subspace of F_q^4 or F_q^6");
    if (y.n == 4) {
        Subspace x = a_member(f, y, A);
        Mat m = rep2(f, x);
        for (const Vec& w : normalized_vectors(f, y))
            if (!contains(f, x, w)) return expand(f, m, w);
        throw std::logic_error("rep3: subspace has no vector outside its spread member");
    }

    // 6-row case: work through the 4-row projection
    Subspace proj = canonicalize(f, {project4(y.rows[0]), project4(y.rows[1]), project4(y.rows[2])});
    if (proj.k != 3)
        throw std::invalid_argument("rep3: the 4-row projection is not a 3-subspace");
    Subspace x4 = a_member(f, proj, A);

    std::map<Vec, Vec> lift; // projection -> full vector of y
    std::vector<Vec> x6gens;
    for (const Vec& w : normalized_vectors(f, y)) {
        Vec p = project4(w);
        if (p.is_zero())
            throw UnrepresentableError("rep3: vector " + to_string(w) +
                                       " vanishes on the first four coordinates");
        lift[normalize_rep(f, p)] = w;
        if (contains(f, x4, p)) x6gens.push_back(w);
    }
    Mat m = rep2(f, canonicalize(f, x6gens));
    for (const Vec& p4 : normalized_vectors(f, proj))
        if (!contains(f, x4, p4)) return expand(f, m, lift.at(p4));
    throw std::logic_error("rep3: projection has no vector outside its spread member");
}

std::vector<std::vector<int>> column_support(const Field& f) {
    int q = f.q();
    // model representation of F_q^3 itself, with basis columns e1, e2, e3
    std::vector<Vec> cols;
    Vec e1(3, {1, 0, 0}), e2(3, {0, 1, 0}), e3(3, {0, 0, 1});
    cols.push_back(e1);
    cols.push_back(e2);
    for (int i = 2; i <= q; ++i)
        cols.push_back(vec_add(f, vec_scale(f, f.pow(f.alpha(), i - 2), e1), e2));
    cols.push_back(e3);
    int lead = (int)cols.size();
    for (int j = 0; j <= q - 2; ++j) {
        Vec au = vec_scale(f, f.pow(f.alpha(), j), e3);
        for (int k = 0; k < lead - 1; ++k) cols.push_back(vec_add(f, au, cols[k]));
    }

    std::vector<std::vector<int>> out;
    for (const Subspace& w : enumerate_subspaces(f, 3, 2)) {
        std::vector<int> idx;
        for (int i = 0; i < (int)cols.size(); ++i)
            if (contains(f, w, cols[i])) idx.push_back(i);
        if ((int)idx.size() != q + 1)
            throw std::logic_error("column_support: unexpected support size");
        out.push_back(idx);
    }
    return out;
}

} // namespace qfano
