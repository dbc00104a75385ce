#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// backed by GMP. No floating point is used anywhere in the library; every
// statistic and formula value is an exact integer or reduced fraction.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace nps {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

// Reduced rational p/q with q > 0.
inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const ExactRational& q) {
    return q.get_den() == 1;
}

// Converts a rational known to be an integer; throws otherwise.
inline ExactInt to_integer(const ExactRational& q) {
    if (!is_integral(q))
        throw std::domain_error("to_integer: value " + q.get_str() + " is not integral");
    return q.get_num();
}

inline ExactInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// C(n,k); zero when k < 0 or k > n.
inline ExactInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// H_n = 1 + 1/2 + ... + 1/n, exactly; H_0 = 0.
inline ExactRational harmonic(long n) {
    if (n < 0) throw std::invalid_argument("harmonic: negative argument");
    ExactRational h = 0;
    for (long k = 1; k <= n; ++k) h += make_rational(1, k);
    return h;
}

// Exact determinant by Gaussian elimination with rational pivots.
// det of the 0x0 matrix is 1.
inline ExactRational det_rational(std::vector<std::vector<ExactRational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_rational: matrix not square");
    ExactRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            ExactRational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

// "p/q" reduced, plain "p" when the value is an integer.
inline std::string to_string(const ExactRational& q) { return q.get_str(); }
inline std::string to_string(const ExactInt& z) { return z.get_str(); }

}  // namespace nps
