// Spreads and parallelisms of 2-subspaces of F_q^4, and the A/B/C partition
// that drives the construction.
#ifndef QFANO_SPREADS_HPP
#define QFANO_SPREADS_HPP

#include <string>
#include <vector>

#include "qfano/linalg.hpp"

namespace qfano {

using Spread = std::vector<Subspace>;
using Parallelism = std::vector<Spread>;

/// A parallelism split into the sets driving the four extension types:
/// one spread A, q spreads B, q^2 spreads C.  C is further divided into
/// runs C_xi of q spreads each, indexed by field code xi.
struct PartitionABC {
    Spread A;
    std::vector<Spread> B;
    std::vector<Spread> C;
    std::vector<std::vector<Spread>> C_xi;
};

/// True iff the members are 2-subspaces of F_q^4 covering every nonzero
/// vector exactly once.  On failure an explanation is stored in *diag.
bool verify_spread(const Field& f, const Spread& s, std::string* diag = nullptr);

/// True iff the spreads are pairwise disjoint and their union is all of
/// G_q(4,2).
bool verify_parallelism(const Field& f, const Parallelism& p, std::string* diag = nullptr);

/// Deterministic parallelism of F_q^4.  For q <= 3 a plain backtracking
/// exact-cover search over lexicographically ordered lines; for q in {4,5}
/// the search is restricted to parallelisms invariant under a cyclic group
/// acting on GF(q^3) x GF(q), which keeps it tractable.
Parallelism find_parallelism(const Field& f);

/// Positional split of a parallelism: spread 0 becomes A, spreads 1..q
/// become B, the rest C; C_xi takes consecutive runs of q spreads of C in
/// field-code order of xi.
PartitionABC partition_abc(const Field& f, const Parallelism& p);

} // namespace qfano

#endif
