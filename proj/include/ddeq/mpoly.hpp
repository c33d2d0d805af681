#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ddeq/rational.hpp"

namespace ddeq {

/// Index of the distinguished variable pi in every monomial.
inline constexpr unsigned kPiVar = 0;
/// Session parameters occupy indices kFirstParamVar, kFirstParamVar+1, ...
inline constexpr unsigned kFirstParamVar = 1;

/// Exponent vector, canonical: no trailing zeros. exps[v] is the power of
/// variable v (v = 0 is pi, v >= 1 are declared parameters).
struct Monomial {
    std::vector<uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> e) : exps(std::move(e)) { trim(); }

    static Monomial unit() { return Monomial(); }
    static Monomial var(unsigned v, uint32_t power = 1);

    void trim();
    bool is_unit() const { return exps.empty(); }
    uint64_t total_degree() const;
    uint32_t degree_in(unsigned v) const {
        return v < exps.size() ? exps[v] : 0;
    }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const; // this | o
    Monomial divide(const Monomial& o) const; // this / o, caller checks
    Monomial pow(uint32_t k) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded-lexicographic order (higher total degree first, ties broken by the
/// exponent of pi, then by each parameter in declaration order). This is the
/// fixed order behind canonical term layout and denominator normalization.
int mono_cmp_grlex(const Monomial& a, const Monomial& b);

struct MonoGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp_grlex(a, b) > 0;
    }
};

/// Sparse multivariate polynomial over GaussRat in pi and the session
/// parameters. Terms are kept in descending graded-lex order, so begin()
/// is the leading term; zero coefficients are never stored.
class MPoly {
public:
    using TermMap = std::map<Monomial, GaussRat, MonoGrlexGreater>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }
    static MPoly constant(const GaussRat& c);
    static MPoly constant(const Rat& c) { return constant(GaussRat(c)); }
    static MPoly from_int(long v) { return constant(GaussRat(Rat(v))); }
    static MPoly var(unsigned v);
    static MPoly term(const Monomial& m, const GaussRat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value when the polynomial has degree 0 (zero -> 0).
    std::optional<GaussRat> constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const GaussRat& leading_coefficient() const;

    uint32_t degree_in(unsigned v) const;
    uint64_t total_degree() const; // 0 for the zero polynomial
    /// Highest variable index used, or -1 when constant.
    int max_var() const;

    void add_term(const Monomial& m, const GaussRat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const GaussRat& c) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly pow(uint32_t k) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// this / divisor when the division is exact, else nullopt.
    std::optional<MPoly> divide_exact(const MPoly& divisor) const;

    /// Scale so the leading coefficient is 1 (zero stays zero).
    MPoly monic() const;

    /// Substitute variable v by the given polynomial.
    MPoly substitute(unsigned v, const MPoly& value) const;

private:
    TermMap terms_;
};

/// Deterministic total order (leading terms first); 0 iff structurally equal.
int mpoly_cmp(const MPoly& a, const MPoly& b);

/// Monic gcd over Q(i)[pi, params] via primitive pseudo-remainder sequences.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// Exact square root when the polynomial is a perfect square, else nullopt.
std::optional<MPoly> mpoly_sqrt(const MPoly& p);

} // namespace ddeq
