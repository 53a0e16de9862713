#include "qfano/construction.hpp"

#include <algorithm>

namespace qfano {

namespace {

Vec lift6(const Vec& v4, int c5, int c6) {
    Vec v;
    v.n = 6;
    for (int i = 0; i < 4; ++i) v.c[i] = v4.c[i];
    v.c[4] = (uint8_t)c5;
    v.c[5] = (uint8_t)c6;
    return v;
}

} // namespace

void Design::sort_blocks() { std::sort(blocks.begin(), blocks.end()); }

bool Design::distinct() const {
    return std::adjacent_find(blocks.begin(), blocks.end()) == blocks.end();
}

Subspace block_s0(const Field& f) {
    Vec e5(6, {0, 0, 0, 0, 1, 0}), e6(6, {0, 0, 0, 0, 0, 1});
    return canonicalize(f, {e5, e6});
}

std::vector<Subspace> type_a(const Field& f, const Spread& A, const ExtensionCode& code) {
    std::vector<Subspace> out;
    for (const Subspace& x : A) {
        Mat m = rep2(f, x);
        Vec v1 = m.col(0), v2 = m.col(1);
        for (const Mat& z : code.members) {
            Vec b1 = lift6(v1, z.at(0, 0), z.at(1, 0));
            Vec b2 = lift6(v2, z.at(0, 1), z.at(1, 1));
            out.push_back(canonicalize(f, {b1, b2}));
        }
    }
    return out;
}

std::vector<Subspace> type_b(const Field& f, const std::vector<Spread>& B) {
    std::vector<Subspace> out;
    Vec e6(6, {0, 0, 0, 0, 0, 1});
    for (const Spread& spread : B)
        for (const Subspace& x : spread) {
            Mat m = rep2(f, x);
            Vec v1 = m.col(0), v2 = m.col(1);
            // one block per linear functional on x, given by its values on
            // the representation basis
            for (int a = 0; a < f.q(); ++a)
                for (int b = 0; b < f.q(); ++b)
                    out.push_back(canonicalize(f, {lift6(v1, a, 0), lift6(v2, b, 0), e6}));
        }
    return out;
}

std::vector<Subspace> type_c(const Field& f, const PartitionABC& part) {
    std::vector<Subspace> out;
    for (int xi = 0; xi < f.q(); ++xi) {
        Vec third(6, {0, 0, 0, 0, 1, xi});
        for (const Spread& spread : part.C_xi[xi])
            for (const Subspace& x : spread) {
                Mat m = rep2(f, x);
                Vec v1 = m.col(0), v2 = m.col(1);
                for (int c1 = 0; c1 < f.q(); ++c1)
                    for (int c2 = 0; c2 < f.q(); ++c2)
                        out.push_back(
                            canonicalize(f, {lift6(v1, 0, c1), lift6(v2, 0, c2), third}));
            }
    }
    return out;
}

std::vector<Subspace> type_d(const Field& f, const Spread& A, const CosetPartition& cosets,
                             const std::vector<int>& perm) {
    std::vector<int> pi = perm;
    if (pi.empty())
        for (int j = 0; j <= f.q(); ++j) pi.push_back(j);
    if ((int)pi.size() != f.q() + 1)
        throw std::invalid_argument("type_d: permutation must have q+1 entries");
    {
        std::vector<int> check = pi;
        std::sort(check.begin(), check.end());
        for (int j = 0; j <= f.q(); ++j)
            if (check[j] != j) throw std::invalid_argument("type_d: not a permutation of 0..q");
    }

    std::vector<Subspace> out;
    for (const Subspace& x : A) {
        Mat m = rep2(f, x);
        Vec v1 = m.col(0), v2 = m.col(1);
        std::vector<Expansion> ys = expansions_of(f, x);
        for (int j = 0; j <= f.q(); ++j) {
            const Vec& u = ys[j].u;
            for (const Mat& z : cosets.parts[pi[j]])
                for (int a = 0; a < f.q(); ++a)
                    for (int b = 0; b < f.q(); ++b)
                        out.push_back(canonicalize(f, {lift6(v1, z.at(0, 0), z.at(1, 0)),
                                                       lift6(v2, z.at(0, 1), z.at(1, 1)),
                                                       lift6(u, a, b)}));
        }
    }
    return out;
}

ConstructionResult construct(const Field& f, const ConstructionOptions& opts) {
    ConstructionResult r;
    Parallelism p = opts.parallelism ? *opts.parallelism : find_parallelism(f);
    r.partition = partition_abc(f, p);
    r.code = extension_code(f);
    r.cosets = coset_partition(f, r.code);

    r.derived.q = r.residual.q = f.q();
    r.derived.n = r.residual.n = 6;
    r.derived.k = 2;
    r.residual.k = 3;

    r.derived.blocks.push_back({BlockTag::S0, block_s0(f)});
    for (const Subspace& s : type_a(f, r.partition.A, r.code))
        r.derived.blocks.push_back({BlockTag::A, s});
    for (const Subspace& s : type_b(f, r.partition.B))
        r.residual.blocks.push_back({BlockTag::B, s});
    for (const Subspace& s : type_c(f, r.partition))
        r.residual.blocks.push_back({BlockTag::C, s});
    for (const Subspace& s : type_d(f, r.partition.A, r.cosets, opts.perm))
        r.residual.blocks.push_back({BlockTag::D, s});

    r.derived.sort_blocks();
    r.residual.sort_blocks();
    if (!r.derived.distinct() || !r.residual.distinct())
        throw std::logic_error("construct: duplicate blocks produced");
    return r;
}

} // namespace qfano
