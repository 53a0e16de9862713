// Arithmetic in GF(q) for q = p^m, table-driven for small q.
#ifndef QFANO_GF_HPP
#define QFANO_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qfano {

/// A finite field GF(p^m) with a fixed presentation.
///
/// Elements are integer codes in [0, q).  For m > 1 the code packs the
/// polynomial coefficients base p (code = sum c_j * p^j).  The modulus
/// polynomial comes from a built-in table so that every run of the tool
/// uses the same presentation, and alpha is the smallest code that
/// generates the multiplicative group.
class Field {
public:
    Field(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    int alpha() const { return alpha_; }
    /// Modulus coefficients c0..cm, low degree first (monic; [0,1] for m = 1).
    const std::vector<int>& poly() const { return poly_; }

    int add(int a, int b) const { return add_[check(a) * q_ + check(b)]; }
    int sub(int a, int b) const { return add_[check(a) * q_ + neg_[check(b)]]; }
    int mul(int a, int b) const { return mul_[check(a) * q_ + check(b)]; }
    int neg(int a) const { return neg_[check(a)]; }

    int inv(int a) const {
        if (check(a) == 0) throw std::domain_error("gf: inverse of zero");
        return inv_[a];
    }

    int pow(int a, long long e) const;

    /// Multiplicative order of a nonzero element.
    int order(int a) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_;
    }

private:
    int check(int a) const {
        if (a < 0 || a >= q_) throw std::invalid_argument("gf: element code out of range");
        return a;
    }

    int p_, m_, q_, alpha_;
    std::vector<int> poly_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Field for a prime power q in the supported table {2,3,4,5,7,8,9}.
Field field_from_q(int q);

bool is_prime(int p);

} // namespace qfano

#endif
