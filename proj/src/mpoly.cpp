#include "ddeq/mpoly.hpp"

#include <algorithm>
#include <cassert>

namespace ddeq {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(unsigned v, uint32_t power) {
    Monomial m;
    if (power > 0) {
        m.exps.assign(v + 1, 0);
        m.exps[v] = power;
    }
    return m;
}

void Monomial::trim() {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

uint64_t Monomial::total_degree() const {
    uint64_t d = 0;
    for (uint32_t e : exps) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
    for (std::size_t v = 0; v < r.exps.size(); ++v)
        r.exps[v] = degree_in(v) + o.degree_in(v);
    r.trim();
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t v = 0; v < exps.size(); ++v)
        if (exps[v] > o.degree_in(v)) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    assert(o.divides(*this));
    Monomial r;
    r.exps.resize(exps.size(), 0);
    for (std::size_t v = 0; v < exps.size(); ++v)
        r.exps[v] = exps[v] - o.degree_in(v);
    r.trim();
    return r;
}

Monomial Monomial::pow(uint32_t k) const {
    Monomial r;
    if (k == 0) return r;
    r.exps = exps;
    for (auto& e : r.exps) e *= k;
    return r;
}

int mono_cmp_grlex(const Monomial& a, const Monomial& b) {
    uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t n = std::max(a.exps.size(), b.exps.size());
    for (std::size_t v = 0; v < n; ++v) {
        uint32_t ea = a.degree_in(v), eb = b.degree_in(v);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(const GaussRat& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(), c);
    return p;
}

MPoly MPoly::var(unsigned v) {
    MPoly p;
    p.terms_.emplace(Monomial::var(v), GaussRat::one());
    return p;
}

MPoly MPoly::term(const Monomial& m, const GaussRat& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<GaussRat> MPoly::constant_value() const {
    if (terms_.empty()) return GaussRat::zero();
    if (terms_.size() == 1 && terms_.begin()->first.is_unit())
        return terms_.begin()->second;
    return std::nullopt;
}

const Monomial& MPoly::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

const GaussRat& MPoly::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
}

uint32_t MPoly::degree_in(unsigned v) const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

uint64_t MPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

int MPoly::max_var() const {
    int mv = -1;
    for (const auto& [m, c] : terms_)
        for (std::size_t v = 0; v < m.exps.size(); ++v)
            if (m.exps[v] > 0) mv = std::max(mv, int(v));
    return mv;
}

void MPoly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const GaussRat& c) const {
    MPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MPoly MPoly::pow(uint32_t k) const {
    MPoly r = MPoly::constant(GaussRat::one());
    MPoly b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        if (k >>= 1) b *= b;
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    MPoly quot;
    MPoly rem = *this;
    const Monomial& dm = divisor.leading_monomial();
    const GaussRat& dc = divisor.leading_coefficient();
    GaussRat dc_inv = dc.inverse();
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!dm.divides(rm)) return std::nullopt;
        Monomial qm = rm.divide(dm);
        GaussRat qc = rem.leading_coefficient() * dc_inv;
        MPoly t = MPoly::term(qm, qc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
}

MPoly MPoly::substitute(unsigned v, const MPoly& value) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.degree_in(v);
        Monomial rest = m;
        if (v < rest.exps.size()) {
            rest.exps[v] = 0;
            rest.trim();
        }
        MPoly part = MPoly::term(rest, c);
        if (e > 0) part *= value.pow(e);
        r += part;
    }
    return r;
}

int mpoly_cmp(const MPoly& a, const MPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (int c = mono_cmp_grlex(ia->first, ib->first)) return c;
        if (int c = gauss_cmp(ia->second, ib->second)) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences

namespace {

// View p as univariate in variable v with MPoly coefficients (v-free).
std::vector<MPoly> collect_univariate(const MPoly& p, unsigned v) {
    std::vector<MPoly> coeffs(std::size_t(p.degree_in(v)) + 1);
    for (const auto& [m, c] : p.terms()) {
        uint32_t e = m.degree_in(v);
        Monomial rest = m;
        if (v < rest.exps.size()) {
            rest.exps[v] = 0;
            rest.trim();
        }
        coeffs[e].add_term(rest, c);
    }
    return coeffs;
}

void trim_univariate(std::vector<MPoly>& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

MPoly build_univariate(const std::vector<MPoly>& coeffs, unsigned v) {
    MPoly r;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        MPoly part = coeffs[e] * MPoly::var(v).pow(uint32_t(e));
        r += part;
    }
    return r;
}

// gcd of the univariate coefficient list (the content w.r.t. v).
MPoly content_of(const std::vector<MPoly>& coeffs) {
    MPoly g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : mpoly_gcd(g, c);
        if (g.is_constant()) return MPoly::constant(GaussRat::one());
    }
    return g;
}

// Fraction-free pseudo-remainder of univariate coefficient lists.
std::vector<MPoly> pseudo_rem(std::vector<MPoly> a,
                              const std::vector<MPoly>& b) {
    const MPoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        MPoly la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= la * b[i];
        trim_univariate(a);
    }
    return a;
}

} // namespace

namespace {

// Componentwise-min monomial dividing every term.
Monomial common_monomial(const MPoly& p) {
    Monomial m = p.leading_monomial();
    for (const auto& [mono, c] : p.terms()) {
        for (std::size_t v = 0; v < m.exps.size(); ++v)
            m.exps[v] = std::min(m.exps[v], mono.degree_in(unsigned(v)));
        m.trim();
        if (m.is_unit()) break;
    }
    return m;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(GaussRat::one());

    // Single-term operands reduce to a monomial gcd; this covers the very
    // common monomial denominators without touching the PRS machinery.
    if (a.term_count() == 1 || b.term_count() == 1) {
        Monomial ma = common_monomial(a);
        Monomial mb = common_monomial(b);
        std::vector<uint32_t> exps(
            std::max(ma.exps.size(), mb.exps.size()), 0);
        for (std::size_t v = 0; v < exps.size(); ++v)
            exps[v] = std::min(ma.degree_in(unsigned(v)),
                               mb.degree_in(unsigned(v)));
        return MPoly::term(Monomial(std::move(exps)), GaussRat::one());
    }

    unsigned v = unsigned(std::max(a.max_var(), b.max_var()));
    auto ua = collect_univariate(a, v);
    auto ub = collect_univariate(b, v);

    MPoly ca = content_of(ua);
    MPoly cb = content_of(ub);
    MPoly content_gcd = mpoly_gcd(ca, cb);

    auto divide_out = [](std::vector<MPoly>& u, const MPoly& d) {
        if (d.is_constant()) return;
        for (auto& c : u) {
            if (c.is_zero()) continue;
            auto q = c.divide_exact(d);
            assert(q);
            c = *q;
        }
    };
    divide_out(ua, ca);
    divide_out(ub, cb);

    if (ua.size() < ub.size()) std::swap(ua, ub);
    while (true) {
        if (ub.size() <= 1) {
            // A nonzero constant (w.r.t. v) remainder: the primitive parts
            // are coprime in v.
            if (!ub.empty()) return content_gcd.monic();
            break;
        }
        auto r = pseudo_rem(ua, ub);
        if (r.empty()) break;
        MPoly cr = content_of(r);
        divide_out(r, cr);
        ua = std::move(ub);
        ub = std::move(r);
    }
    MPoly pp = build_univariate(ub, v);
    return (content_gcd * pp).monic();
}

// ---------------------------------------------------------------------------
// perfect-square root

std::optional<MPoly> mpoly_sqrt(const MPoly& p) {
    if (p.is_zero()) return MPoly::zero();

    const Monomial& lm = p.leading_monomial();
    for (uint32_t e : lm.exps)
        if (e % 2 != 0) return std::nullopt;
    auto lc_root = gauss_sqrt_exact(p.leading_coefficient());
    if (!lc_root) return std::nullopt;

    Monomial half = lm;
    for (auto& e : half.exps) e /= 2;
    MPoly root = MPoly::term(half, *lc_root);

    GaussRat two_lc = *lc_root + *lc_root;
    Monomial prev = lm;
    MPoly rem = p - root * root;
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        // Candidate monomials must strictly decrease; otherwise p is not a
        // square and the loop would not terminate.
        if (mono_cmp_grlex(rm, prev) >= 0) return std::nullopt;
        prev = rm;
        if (!half.divides(rm)) return std::nullopt;
        MPoly t = MPoly::term(rm.divide(half),
                              rem.leading_coefficient() / two_lc);
        root += t;
        rem = p - root * root;
    }
    return root;
}

} // namespace ddeq
