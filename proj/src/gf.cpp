#include "qfano/gf.hpp"

#include <array>

namespace qfano {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Fixed modulus polynomials (Conway polynomials), coefficients c0..cm.
struct PolyEntry {
    int p, m;
    std::array<int, 4> coeffs;
};

constexpr PolyEntry kPolyTable[] = {
    {2, 2, {1, 1, 1, 0}},  // x^2 + x + 1
    {2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
    {3, 2, {2, 2, 1, 0}},  // x^2 + 2x + 2
};

std::vector<int> modulus_for(int p, int m) {
    if (m == 1) return {0, 1};
    for (const auto& e : kPolyTable)
        if (e.p == p && e.m == m)
            return std::vector<int>(e.coeffs.begin(), e.coeffs.begin() + m + 1);
    throw std::invalid_argument("gf: unsupported field GF(" + std::to_string(p) + "^" +
                                std::to_string(m) + ")");
}

std::vector<int> decode(int code, int p, int m) {
    std::vector<int> c(m);
    for (int j = 0; j < m; ++j) {
        c[j] = code % p;
        code /= p;
    }
    return c;
}

int encode(const std::vector<int>& c, int p, int m) {
    int code = 0;
    for (int j = m - 1; j >= 0; --j) code = code * p + c[j];
    return code;
}

} // namespace

Field::Field(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("gf: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("gf: m must be positive");
    poly_ = modulus_for(p, m);
    q_ = 1;
    for (int j = 0; j < m; ++j) q_ *= p;

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a, p, m);
        std::vector<int> cn(m);
        for (int j = 0; j < m; ++j) cn[j] = (p - ca[j]) % p;
        neg_[a] = encode(cn, p, m);
        for (int b = 0; b < q_; ++b) {
            auto cb = decode(b, p, m);
            std::vector<int> cs(m);
            for (int j = 0; j < m; ++j) cs[j] = (ca[j] + cb[j]) % p;
            add_[a * q_ + b] = encode(cs, p, m);

            // polynomial product, reduced modulo the monic modulus
            std::vector<int> prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (int d = 2 * m - 2; d >= m; --d) {
                int co = prod[d];
                if (co == 0) continue;
                prod[d] = 0;
                for (int j = 0; j < m; ++j)
                    prod[d - m + j] = ((prod[d - m + j] - co * poly_[j]) % p + p * p) % p;
            }
            prod.resize(m);
            mul_[a * q_ + b] = encode(prod, p, m);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;

    alpha_ = 0;
    for (int a = 1; a < q_; ++a) {
        if (order(a) == q_ - 1) {
            alpha_ = a;
            break;
        }
    }
    if (alpha_ == 0) throw std::logic_error("gf: no primitive element found");
}

int Field::pow(int a, long long e) const {
    check(a);
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int Field::order(int a) const {
    if (check(a) == 0) throw std::domain_error("gf: order of zero");
    int o = 1, x = a;
    while (x != 1) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

Field field_from_q(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int m = 0, t = q;
        while (t % p == 0) {
            t /= p;
            ++m;
        }
        if (t == 1 && m >= 1) return Field(p, m);
    }
    throw std::invalid_argument("gf: q = " + std::to_string(q) + " is not a prime power");
}

} // namespace qfano
