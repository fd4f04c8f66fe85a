#pragma once

// Exact arithmetic in Z[w], w = exp(2*pi*i/r).
//
// Elements are stored in the power basis 1, w, ..., w^(phi(r)-1), i.e. reduced
// modulo the r-th cyclotomic polynomial. In that basis an element is zero iff
// all coefficients vanish, so equality and the zero test are plain vector
// comparisons. Coefficients are 64-bit and every operation is overflow
// checked; overflow throws std::overflow_error.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace reflecta {

/// Integer polynomial, coefficients from the constant term upward.
using IntPoly = std::vector<std::int64_t>;

/// Phi_r, obtained by exact division of x^r - 1 by Phi_d for all proper divisors d.
/// Results are cached; safe to call concurrently.
const IntPoly& cyclotomic_poly(int r);

/// Euler's totient, equal to deg Phi_r.
int euler_phi(int r);

class CycloInt {
public:
    /// Zero of Z[w_1] = Z.
    CycloInt() : CycloInt(1) {}
    /// Zero of Z[w_r].
    explicit CycloInt(int order);

    static CycloInt integer(int order, std::int64_t value);
    /// w^(k mod r).
    static CycloInt root_of_unity(int order, long long k);
    /// Reduces sum_k c_k w^k for an arbitrary-length coefficient vector.
    static CycloInt from_powers(int order, std::span<const std::int64_t> coeffs);

    int order() const noexcept { return order_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// True iff the value lies in Z; `value` receives it.
    bool is_integer(std::int64_t* value = nullptr) const noexcept;

    CycloInt operator-() const;
    CycloInt& operator+=(const CycloInt& other);
    CycloInt& operator-=(const CycloInt& other);
    CycloInt& operator*=(const CycloInt& other);
    friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
    friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
    friend CycloInt operator*(CycloInt a, const CycloInt& b) { return a *= b; }

    /// Multiplication by w^k; cheaper than a general product.
    CycloInt times_root(long long k) const;

    /// Complex conjugation, w -> w^-1.
    CycloInt conjugate() const;

    /// Exact division by a nonzero integer. Returns false (leaving *out
    /// untouched) if some coefficient is not divisible.
    bool divide_exact(std::int64_t divisor, CycloInt* out) const;

    /// The same value viewed in Z[w_{order * factor}] (w_r = w_{rs}^s).
    CycloInt embed(int factor) const;

    std::complex<double> to_complex() const;

    /// A Z-combination of powers of w, e.g. "2 - w + 3w^2"; "0" for zero.
    std::string pretty() const;

    friend bool operator==(const CycloInt&, const CycloInt&) = default;

private:
    void require_same_order(const CycloInt& other) const;

    int order_ = 1;
    std::vector<std::int64_t> coeffs_;
};

inline CycloInt root_of_unity(int r, long long k) { return CycloInt::root_of_unity(r, k); }
inline bool is_zero(const CycloInt& a) { return a.is_zero(); }
inline CycloInt conjugate(const CycloInt& a) { return a.conjugate(); }
inline std::complex<double> to_complex(const CycloInt& a) { return a.to_complex(); }

}  // namespace reflecta
