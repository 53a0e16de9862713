// Canonical matrix representations of 2- and 3-subspaces: column orderings
// driven by the extension recurrence, the unique spread member inside a
// 3-subspace, ordered expansions, and the column-support family.
#ifndef QFANO_REPRESENTATION_HPP
#define QFANO_REPRESENTATION_HPP

#include <stdexcept>
#include <vector>

#include "qfano/extension.hpp"
#include "qfano/spreads.hpp"

namespace qfano {

/// Raised when a subspace of F_q^6 has a nonzero vector whose first four
/// coordinates all vanish, so the projection-based representation does not
/// apply.
struct UnrepresentableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// r x (q+1) representation of a 2-subspace of F_q^4 or F_q^6: the columns
/// are its normalized vectors, ordered so the 4-row projections satisfy
/// v_i = alpha^(i-3) v_1 + v_2 with (v_1, v_2) the two lexicographically
/// smallest projections.
Mat rep2(const Field& f, const Subspace& s);

/// The unique member of the spread A contained in the 3-subspace y of F_q^4.
Subspace a_member(const Field& f, const Subspace& y, const Spread& A);

struct Expansion {
    Subspace y; // a 3-subspace containing x
    Vec u;      // lexicographically least normalized vector of y \ x
};

/// The q+1 3-subspaces of F_q^4 containing x, ordered by their expansion
/// vectors u.
std::vector<Expansion> expansions_of(const Field& f, const Subspace& x);

/// r x (q^2+q+1) representation of a 3-subspace: rep2 of the spread member
/// inside it, expanded by the least remaining normalized vector.  For
/// 6-row input the 4-row projection must itself be a 3-subspace.
Mat rep3(const Field& f, const Subspace& y, const Spread& A);

/// The q^2+q+1 column index sets (0-based, each of size q+1) along which the
/// columns of any rep3 matrix form exactly the 2-subspaces of the
/// represented 3-subspace.
std::vector<std::vector<int>> column_support(const Field& f);

} // namespace qfano

#endif
