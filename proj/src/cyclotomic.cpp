#include "reflecta/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "reflecta/errors.hpp"

namespace reflecta {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("cyclotomic coefficient overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("cyclotomic coefficient overflow");
    return out;
}

// Divides `num` by the monic `den` in place; throws if the remainder is nonzero.
IntPoly exact_divide(IntPoly num, const IntPoly& den) {
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    IntPoly quot(static_cast<std::size_t>(nn - dn + 1), 0);
    for (int d = nn; d >= dn; --d) {
        const std::int64_t c = num[d];
        quot[d - dn] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dn; ++i) num[d - dn + i] = checked_add(num[d - dn + i], -checked_mul(c, den[i]));
    }
    for (int i = 0; i < dn; ++i)
        if (num[i] != 0) throw InternalError("cyclotomic division left a remainder");
    return quot;
}

IntPoly compute_cyclotomic(int r) {
    IntPoly poly(static_cast<std::size_t>(r) + 1, 0);
    poly[0] = -1;
    poly[r] = 1;
    for (int d = 1; d < r; ++d)
        if (r % d == 0) poly = exact_divide(std::move(poly), cyclotomic_poly(d));
    return poly;
}

// Reduces a coefficient vector of any length modulo Phi_r.
std::vector<std::int64_t> reduce(int r, std::vector<std::int64_t> a) {
    const IntPoly& phi = cyclotomic_poly(r);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= deg; --d) {
        const std::int64_t c = a[d];
        if (c == 0) continue;
        for (int i = 0; i <= deg; ++i) a[d - deg + i] = checked_add(a[d - deg + i], -checked_mul(c, phi[i]));
    }
    a.resize(static_cast<std::size_t>(deg), 0);
    return a;
}

}  // namespace

const IntPoly& cyclotomic_poly(int r) {
    if (r < 1) throw InvalidInput("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(r); it != cache.end()) return it->second;
    }
    // Computed outside the lock: the recursion re-enters for the divisors.
    IntPoly poly = compute_cyclotomic(r);
    std::lock_guard lock(mu);
    return cache.emplace(r, std::move(poly)).first->second;
}

int euler_phi(int r) { return static_cast<int>(cyclotomic_poly(r).size()) - 1; }

CycloInt::CycloInt(int order) : order_(order) {
    if (order < 1) throw InvalidInput("cyclotomic order must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
}

CycloInt CycloInt::integer(int order, std::int64_t value) {
    CycloInt out(order);
    out.coeffs_[0] = value;
    return out;
}

CycloInt CycloInt::root_of_unity(int order, long long k) {
    if (order < 1) throw InvalidInput("cyclotomic order must be positive");
    std::vector<std::int64_t> powers(static_cast<std::size_t>(order), 0);
    powers[static_cast<std::size_t>(((k % order) + order) % order)] = 1;
    return from_powers(order, powers);
}

CycloInt CycloInt::from_powers(int order, std::span<const std::int64_t> coeffs) {
    if (order < 1) throw InvalidInput("cyclotomic order must be positive");
    std::vector<std::int64_t> folded(static_cast<std::size_t>(order), 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        auto& slot = folded[k % static_cast<std::size_t>(order)];
        slot = checked_add(slot, coeffs[k]);
    }
    CycloInt out(order);
    out.coeffs_ = reduce(order, std::move(folded));
    return out;
}

bool CycloInt::is_zero() const noexcept {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::is_integer(std::int64_t* value) const noexcept {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    if (value) *value = coeffs_[0];
    return true;
}

void CycloInt::require_same_order(const CycloInt& other) const {
    if (order_ != other.order_)
        throw InvalidInput("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                           std::to_string(other.order_) + " (embed explicitly)");
}

CycloInt CycloInt::operator-() const {
    CycloInt out = *this;
    for (auto& c : out.coeffs_) c = checked_mul(c, -1);
    return out;
}

CycloInt& CycloInt::operator+=(const CycloInt& other) {
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& other) {
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], checked_mul(other.coeffs_[k], -1));
    return *this;
}

CycloInt& CycloInt::operator*=(const CycloInt& other) {
    require_same_order(other);
    const std::size_t len = coeffs_.size();
    std::vector<std::int64_t> prod(2 * len - 1, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < len; ++j)
            prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
    coeffs_ = reduce(order_, std::move(prod));
    return *this;
}

CycloInt CycloInt::times_root(long long k) const {
    const auto shift = static_cast<std::size_t>(((k % order_) + order_) % order_);
    std::vector<std::int64_t> shifted(shift + coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) shifted[i + shift] = coeffs_[i];
    return from_powers(order_, shifted);
}

CycloInt CycloInt::conjugate() const {
    std::vector<std::int64_t> powers(static_cast<std::size_t>(order_), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        powers[(static_cast<std::size_t>(order_) - k) % static_cast<std::size_t>(order_)] = coeffs_[k];
    return from_powers(order_, powers);
}

bool CycloInt::divide_exact(std::int64_t divisor, CycloInt* out) const {
    if (divisor == 0) throw InvalidInput("division by zero");
    for (auto c : coeffs_)
        if (c % divisor != 0) return false;
    CycloInt q = *this;
    for (auto& c : q.coeffs_) c /= divisor;
    *out = std::move(q);
    return true;
}

CycloInt CycloInt::embed(int factor) const {
    if (factor < 1) throw InvalidInput("embedding factor must be positive");
    const int big = order_ * factor;
    std::vector<std::int64_t> powers(static_cast<std::size_t>(big), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[k * static_cast<std::size_t>(factor)] = coeffs_[k];
    return from_powers(big, powers);
}

std::complex<double> CycloInt::to_complex() const {
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
        sum += static_cast<double>(coeffs_[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::string CycloInt::pretty() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << 'w';
            if (k > 1) os << '^' << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace reflecta
