#include "ddeq/rational.hpp"

namespace ddeq {

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return Int(0);
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto sn = int_sqrt_exact(numerator(r));
    if (!sn) return std::nullopt;
    auto sd = int_sqrt_exact(denominator(r));
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

int rat_cmp(const Rat& a, const Rat& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

GaussRat gauss_pow(const GaussRat& base, unsigned long k) {
    GaussRat result = GaussRat::one();
    GaussRat b = base;
    while (k > 0) {
        if (k & 1) result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

std::optional<GaussRat> gauss_sqrt_exact(const GaussRat& z) {
    auto normalize = [](GaussRat r) {
        if (r.re < 0 || (r.re == 0 && r.im < 0)) r = -r;
        return r;
    };
    if (z.im == 0) {
        if (z.re >= 0) {
            auto s = rat_sqrt_exact(z.re);
            if (!s) return std::nullopt;
            return normalize(GaussRat(*s));
        }
        auto s = rat_sqrt_exact(-z.re);
        if (!s) return std::nullopt;
        return normalize(GaussRat(0, *s));
    }
    // (a+bi)^2 = z requires |a+bi|^2 = sqrt(|z|^2) rational, then
    // a^2 = (re + m)/2 with m = sqrt(re^2 + im^2).
    auto m = rat_sqrt_exact(z.norm());
    if (!m) return std::nullopt;
    auto a = rat_sqrt_exact((z.re + *m) / 2);
    if (!a || *a == 0) return std::nullopt; // a == 0 impossible when im != 0
    GaussRat root(*a, z.im / (2 * *a));
    if (root * root != z) return std::nullopt;
    return normalize(root);
}

int gauss_cmp(const GaussRat& a, const GaussRat& b) {
    if (int c = rat_cmp(a.re, b.re)) return c;
    return rat_cmp(a.im, b.im);
}

} // namespace ddeq
