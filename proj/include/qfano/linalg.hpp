// Vectors and subspaces over F_q^n: canonical RREF forms, membership,
// enumeration and counting.
#ifndef QFANO_LINALG_HPP
#define QFANO_LINALG_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qfano/gf.hpp"

namespace qfano {

constexpr int kMaxAmbient = 7;
constexpr int kMaxDim = 6;

/// Vector in F_q^n, n <= kMaxAmbient.  Coordinate 0 is the leftmost and the
/// most significant one for lexicographic comparison.  Unused trailing slots
/// are kept zero so that default comparison is lexicographic on coordinates.
struct Vec {
    int n = 0;
    std::array<uint8_t, kMaxAmbient> c{};

    Vec() = default;
    Vec(int ambient, std::initializer_list<int> coords);

    uint8_t operator[](int i) const { return c[i]; }
    uint8_t& operator[](int i) { return c[i]; }
    bool is_zero() const;
    /// Index of the first nonzero coordinate, or n if zero.
    int pivot() const;

    auto operator<=>(const Vec&) const = default;
};

/// Subspace of F_q^n in reduced row echelon form.  Equality of subspaces is
/// equality of the RREF bases, so default comparison is the identity key.
struct Subspace {
    int n = 0;
    int k = 0;
    std::array<Vec, kMaxDim> rows{};

    const Vec& row(int i) const { return rows[i]; }

    auto operator<=>(const Subspace&) const = default;
};

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, int c, const Vec& v);

/// Scale a nonzero vector so its first nonzero coordinate is 1.
Vec normalize_rep(const Field& f, const Vec& v);

inline bool lex_less(const Vec& a, const Vec& b) { return a < b; }

/// RREF span of a generator set.  The ambient dimension is taken from the
/// generators, which must agree.
Subspace canonicalize(const Field& f, const std::vector<Vec>& gens);

bool contains(const Field& f, const Subspace& u, const Vec& v);
bool is_subspace(const Field& f, const Subspace& u, const Subspace& w);

/// All q^k vectors of the subspace.
std::vector<Vec> span_vectors(const Field& f, const Subspace& s);

/// The (q^k-1)/(q-1) normalized vectors of the subspace, in lex order.
std::vector<Vec> normalized_vectors(const Field& f, const Subspace& s);

/// All normalized nonzero vectors of F_q^n, in lex order.
std::vector<Vec> normalized_ambient(const Field& f, int n);

/// Every k-subspace of F_q^n exactly once, ordered lexicographically by the
/// flattened RREF basis.
std::vector<Subspace> enumerate_subspaces(const Field& f, int n, int k);

/// Number of k-subspaces of F_q^n, in exact integer arithmetic.
long long gaussian_binomial(int n, int k, long long q);

/// Orthogonal complement under the standard dot product.
Subspace complement(const Field& f, const Subspace& s);

std::string to_string(const Vec& v);
std::string to_string(const Subspace& s);

} // namespace qfano

#endif
