#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>

#include "ddeq/errors.hpp"

namespace ddeq {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. boost keeps it canonical: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

/// True iff r is in Z + 1/2.
inline bool rat_is_half_integer(const Rat& r) { return denominator(r) == 2; }

/// Exact integer square root; nullopt when n is not a perfect square.
std::optional<Int> int_sqrt_exact(const Int& n);

/// Exact rational square root (nonnegative root); nullopt when irrational.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

int rat_cmp(const Rat& a, const Rat& b);

/// Gaussian rational a + b*i, componentwise canonical.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r), im(0) {}

    static GaussRat zero() { return GaussRat(); }
    static GaussRat one() { return GaussRat(1); }
    static GaussRat imag_unit() { return GaussRat(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    /// |z|^2 = re^2 + im^2, exact.
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const {
        return GaussRat(re + o.re, im + o.im);
    }
    GaussRat operator-(const GaussRat& o) const {
        return GaussRat(re - o.re, im - o.im);
    }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat inverse() const {
        if (is_zero()) throw NotInvertible("division by zero Gaussian rational");
        Rat n = norm();
        return GaussRat(re / n, -im / n);
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

GaussRat gauss_pow(const GaussRat& base, unsigned long k);

/// Exact square root in Q(i); nullopt when z is not a perfect square there.
/// The returned root is sign-normalized (re > 0, or re == 0 and im >= 0).
std::optional<GaussRat> gauss_sqrt_exact(const GaussRat& z);

/// Deterministic total order used for canonical term ordering.
int gauss_cmp(const GaussRat& a, const GaussRat& b);

} // namespace ddeq
