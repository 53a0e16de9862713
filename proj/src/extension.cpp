#include "qfano/extension.hpp"

#include <algorithm>
#include <set>

namespace qfano {

Vec Mat::col(int c) const {
    Vec v;
    v.n = rows;
    for (int r = 0; r < rows; ++r) v.c[r] = at(r, c);
    return v;
}

void Mat::set_col(int c, const Vec& v) {
    for (int r = 0; r < rows; ++r) at(r, c) = v.c[r];
}

Mat mat_add(const Field& f, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("mat: shape mismatch");
    Mat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = (uint8_t)f.add(x.a[i], y.a[i]);
    return r;
}

Mat mat_scale(const Field& f, int c, const Mat& x) {
    Mat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = (uint8_t)f.mul(c, x.a[i]);
    return r;
}

Mat ext_matrix(const Field& f, const Vec& col1, const Vec& col2) {
    if (col1.n != 2 || col2.n != 2) throw std::invalid_argument("ext: columns must have length 2");
    Mat m(2, f.q() + 1);
    m.set_col(0, col1);
    m.set_col(1, col2);
    for (int i = 2; i < m.cols; ++i)
        m.set_col(i, vec_add(f, vec_scale(f, f.pow(f.alpha(), i - 2), col1), col2));
    return m;
}

std::vector<Mat> extension_space(const Field& f) {
    std::vector<Mat> out;
    int q = f.q();
    out.reserve((size_t)q * q * q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                    out.push_back(ext_matrix(f, Vec(2, {a, b}), Vec(2, {c, d})));
    return out;
}

ExtensionCode extension_code(const Field& f) {
    ExtensionCode code;
    code.m1 = ext_matrix(f, Vec(2, {1, 0}), Vec(2, {0, 1}));
    int beta = -1;
    for (int b = 0; b < f.q() && beta < 0; ++b) {
        Mat cand = ext_matrix(f, Vec(2, {0, 1}), Vec(2, {1, b}));
        bool ok = true;
        for (int i = 2; i < cand.cols && ok; ++i) {
            // columns are dependent iff the 2x2 determinant vanishes
            int det = f.sub(f.mul(code.m1.at(0, i), cand.at(1, i)),
                            f.mul(code.m1.at(1, i), cand.at(0, i)));
            ok = (det != 0);
        }
        if (ok) beta = b;
    }
    if (beta < 0) throw std::logic_error("ext: no valid second generator found");
    code.m2 = ext_matrix(f, Vec(2, {0, 1}), Vec(2, {1, beta}));
    for (int a = 0; a < f.q(); ++a)
        for (int b = 0; b < f.q(); ++b)
            code.members.push_back(
                mat_add(f, mat_scale(f, a, code.m1), mat_scale(f, b, code.m2)));
    std::sort(code.members.begin(), code.members.end());
    return code;
}

CosetPartition coset_partition(const Field& f, const ExtensionCode& code) {
    Mat d1 = ext_matrix(f, Vec(2, {1, 0}), Vec(2, {1, 0}));
    Mat d2 = ext_matrix(f, Vec(2, {0, 1}), Vec(2, {0, 1}));
    int q = f.q();
    std::vector<std::vector<Mat>> cosets;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            Mat rep = mat_add(f, mat_scale(f, a, d1), mat_scale(f, b, d2));
            std::vector<Mat> coset;
            for (const Mat& m : code.members) coset.push_back(mat_add(f, rep, m));
            std::sort(coset.begin(), coset.end());
            cosets.push_back(coset);
        }

    CosetPartition out;
    out.parts.resize(q + 1);
    for (int j = 0; j <= q; ++j) {
        for (int r = 0; r < q - 1; ++r) {
            const auto& coset = cosets[j * (q - 1) + r];
            out.parts[j].insert(out.parts[j].end(), coset.begin(), coset.end());
        }
        std::sort(out.parts[j].begin(), out.parts[j].end());
    }

    // sanity: the parts and the code tile the whole extension space
    std::set<Mat> all(code.members.begin(), code.members.end());
    for (const auto& part : out.parts)
        for (const Mat& m : part)
            if (!all.insert(m).second)
                throw std::logic_error("ext: coset representatives are not independent");
    return out;
}

Mat expand(const Field& f, const Mat& m, const Vec& u) {
    if (u.n != m.rows) throw std::invalid_argument("ext: expansion vector length mismatch");
    int q = f.q();
    Mat out(m.rows, q * q + q + 1);
    for (int c = 0; c < m.cols; ++c) out.set_col(c, m.col(c));
    out.set_col(m.cols, u);
    for (int i = 0; i <= q - 2; ++i) {
        Vec au = vec_scale(f, f.pow(f.alpha(), i), u);
        for (int c = 0; c < m.cols; ++c)
            out.set_col(m.cols + 1 + i * m.cols + c, vec_add(f, au, m.col(c)));
    }
    return out;
}

std::string to_string(const Mat& m) {
    std::string s;
    for (int r = 0; r < m.rows; ++r) {
        if (r) s += '/';
        for (int c = 0; c < m.cols; ++c) s += (char)('0' + m.at(r, c));
    }
    return s;
}

} // namespace qfano
