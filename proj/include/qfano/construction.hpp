// Assembly of the derived spread and the residual design in F_q^6 from a
// parallelism of F_q^4 and the extension code.
#ifndef QFANO_CONSTRUCTION_HPP
#define QFANO_CONSTRUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfano/extension.hpp"
#include "qfano/representation.hpp"
#include "qfano/spreads.hpp"

namespace qfano {

enum class BlockTag : char { S0 = '0', A = 'A', B = 'B', C = 'C', D = 'D' };

struct Block {
    BlockTag tag;
    Subspace s;

    auto operator<=>(const Block& o) const { return s <=> o.s; }
    bool operator==(const Block& o) const { return s == o.s; }
};

/// A uniform-dimension collection of tagged subspaces of F_q^n, kept sorted
/// by canonical form.  Constructed designs contain no duplicates; designs
/// produced by puncturing may (the identity |S| = |der| + |res| counts with
/// multiplicity).
struct Design {
    int q = 0;
    int n = 0;
    int k = 0;
    std::vector<Block> blocks;

    void sort_blocks();
    bool distinct() const;
};

struct ConstructionOptions {
    // parallelism to use; when absent, find_parallelism(q) is run
    std::optional<Parallelism> parallelism;
    // matching of the expansions Y_1..Y_{q+1} of each spread member of A to
    // the coset parts: Y_j is paired with part perm[j] (0-based); identity
    // when empty
    std::vector<int> perm;
};

Subspace block_s0(const Field& f);
std::vector<Subspace> type_a(const Field& f, const Spread& A, const ExtensionCode& code);
std::vector<Subspace> type_b(const Field& f, const std::vector<Spread>& B);
std::vector<Subspace> type_c(const Field& f, const PartitionABC& part);
std::vector<Subspace> type_d(const Field& f, const Spread& A, const CosetPartition& cosets,
                             const std::vector<int>& perm);

struct ConstructionResult {
    Design derived;  // 2-subspaces: S_0 and type A
    Design residual; // 3-subspaces: types B, C, D
    PartitionABC partition;
    ExtensionCode code;
    CosetPartition cosets;
};

ConstructionResult construct(const Field& f, const ConstructionOptions& opts = {});

} // namespace qfano

#endif
