// Exhaustive verification: coverage histograms over all 2-subspaces,
// derived/residual contracts, puncturing, divisibility conditions, duality.
#ifndef QFANO_VERIFY_HPP
#define QFANO_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfano/construction.hpp"

namespace qfano {

struct CoverageReport {
    int n = 0;
    int q = 0;
    long long total = 0;                    // |G_q(n,2)|
    std::map<long long, long long> hist;    // multiplicity -> number of 2-subspaces
    std::vector<Subspace> offenders;        // bounded sample of subspaces at
                                            // an unexpected multiplicity
};

/// Pack the RREF basis of a 2-subspace into a 64-bit sort key.
uint64_t pack_key(const Subspace& s);

/// For every 2-subspace of F_q^n, the number of blocks containing it.
/// Blocks may have k = 2 or 3.  The work is sharded across `workers`
/// threads; the result is independent of the shard count.
CoverageReport coverage(const Field& f, const Design& d, int workers = 1);

/// The 2-subspaces of F_q^n contained in no block, in lex order.
std::vector<Subspace> uncovered(const Field& f, const Design& d, int workers = 1);

struct VerifyResult {
    bool ok = false;
    std::string reason;
    CoverageReport report;
};

/// Checks the derived/residual contract: derived is a spread of F_q^6, the
/// residual blocks are pairwise distinct 3-subspaces covering every derived
/// member 0 times and every other 2-subspace exactly q^2 times.
VerifyResult verify_pair(const Field& f, const Design& derived, const Design& residual,
                         int workers = 1);

/// Checks that a set of 3-subspaces is a residual design on its own: the
/// coverage histogram is {0, q^2} and the uncovered 2-subspaces form a
/// spread of F_q^6.
VerifyResult verify_residual(const Field& f, const Design& residual, int workers = 1);

/// Puncture at the last coordinate: blocks containing the last unit vector
/// contribute their hyperplane section to der, the others drop the
/// coordinate and land in res.  Outputs may contain repeated blocks, so
/// |S| = |der| + |res| holds for arbitrary designs.
Design punct_der(const Field& f, const Design& d);
Design punct_res(const Field& f, const Design& d);

struct DivisibilityResult {
    bool ok = false;
    // one entry per 0 <= i <= t-1: numerator, denominator, integral flag
    struct Ratio {
        long long num, den;
        bool integral;
    };
    std::vector<Ratio> ratios;
};

/// The necessary divisibility conditions for a q-Steiner system S_q(t,k,n).
DivisibilityResult divisibility(int t, int k, int n, long long q);

/// Replace every block by its orthogonal complement.
Design dual(const Field& f, const Design& d);

} // namespace qfano

#endif
