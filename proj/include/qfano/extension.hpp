// Extension code machinery: the 2 x (q+1) matrices whose columns obey the
// recurrence v_i = alpha^(i-3) v_1 + v_2, the distinguished 2-dimensional
// code inside them, its coset partition, and the expansion operator E(M, u).
#ifndef QFANO_EXTENSION_HPP
#define QFANO_EXTENSION_HPP

#include <vector>

#include "qfano/linalg.hpp"

namespace qfano {

/// Dense row-major matrix over F_q with small dimensions.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(r * c, 0) {}

    uint8_t at(int r, int c) const { return a[r * cols + c]; }
    uint8_t& at(int r, int c) { return a[r * cols + c]; }
    Vec col(int c) const;
    void set_col(int c, const Vec& v);

    auto operator<=>(const Mat&) const = default;
};

Mat mat_add(const Field& f, const Mat& x, const Mat& y);
Mat mat_scale(const Field& f, int c, const Mat& x);

/// 2 x (q+1) matrix determined by its first two columns through the column
/// recurrence.
Mat ext_matrix(const Field& f, const Vec& col1, const Vec& col2);

/// All q^4 extension matrices, ordered lexicographically by (col1, col2)
/// with the top row entry of each column most significant.
std::vector<Mat> extension_space(const Field& f);

struct ExtensionCode {
    Mat m1, m2;               // generators
    std::vector<Mat> members; // the q^2 span elements, sorted
};

/// The distinguished extension code: m1 has columns starting (1,0),(0,1);
/// m2 starts (0,1),(1,beta) with beta the first field code making every
/// column of m2 independent of the matching column of m1.
ExtensionCode extension_code(const Field& f);

struct CosetPartition {
    // parts[j] lists the q^2 (q-1) matrices of part C_(j+1), sorted
    std::vector<std::vector<Mat>> parts;
};

/// Split the q^2-1 nonzero cosets of the code into q+1 parts of q-1 cosets.
/// Coset representatives are a*D1 + b*D2 over (a, b) != (0, 0) in lex order,
/// where D1 and D2 are the extension matrices with both leading columns
/// (1,0) and (0,1) respectively; this reproduces the published q=2 tables.
CosetPartition coset_partition(const Field& f, const ExtensionCode& code);

/// The operator E(M, u): columns [M | u | a^0 u + M | ... | a^(q-2) u + M].
Mat expand(const Field& f, const Mat& m, const Vec& u);

std::string to_string(const Mat& m);

} // namespace qfano

#endif
