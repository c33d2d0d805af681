#include "ddeq/linop.hpp"

#include <algorithm>

namespace ddeq {

namespace {
int term_key_cmp(const ExpArg& s1, unsigned d1, const ExpArg& s2, unsigned d2) {
    if (int c = mpoly_cmp(s1, s2)) return c;
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    return 0;
}
} // namespace

LinOp LinOp::single(const ExpArg& shift, unsigned dorder, const ExpPoly& coeff) {
    LinOp l;
    l.add_term(shift, dorder, coeff);
    return l;
}

LinOp LinOp::inhomogeneous(const ExpPoly& v) {
    LinOp l;
    l.inhom_ = v;
    return l;
}

void LinOp::add_term(const ExpArg& shift, unsigned dorder, const ExpPoly& coeff) {
    if (coeff.structurally_zero()) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), std::make_pair(shift, dorder),
        [](const Term& t, const std::pair<ExpArg, unsigned>& key) {
            return term_key_cmp(t.shift, t.dorder, key.first, key.second) < 0;
        });
    if (it != terms_.end() &&
        term_key_cmp(it->shift, it->dorder, shift, dorder) == 0) {
        it->coeff += coeff;
        if (it->coeff.structurally_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{shift, dorder, coeff});
    }
}

ExpPoly LinOp::apply(const ExpPoly& f) const {
    ExpPoly r = inhom_;
    for (const auto& t : terms_) {
        ExpPoly part = f.derivative(t.dorder);
        if (!t.shift.is_zero()) part = part.shifted(t.shift);
        r += t.coeff * part;
    }
    return r;
}

LinOp LinOp::derivative() const {
    LinOp r;
    for (const auto& t : terms_) {
        r.add_term(t.shift, t.dorder, t.coeff.derivative());
        r.add_term(t.shift, t.dorder + 1, t.coeff);
    }
    r.inhom_ = inhom_.derivative();
    return r;
}

bool LinOp::is_zero_operator() const {
    return terms_.empty() && inhom_.structurally_zero();
}

LinOp LinOp::operator+(const LinOp& o) const {
    LinOp r = *this;
    for (const auto& t : o.terms_) r.add_term(t.shift, t.dorder, t.coeff);
    r.inhom_ += o.inhom_;
    return r;
}

LinOp LinOp::scaled(const ExpPoly& alpha) const {
    LinOp r;
    for (const auto& t : terms_) r.add_term(t.shift, t.dorder, alpha * t.coeff);
    r.inhom_ = alpha * inhom_;
    return r;
}

bool LinOp::operator==(const LinOp& o) const {
    if (inhom_ != o.inhom_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (term_key_cmp(terms_[k].shift, terms_[k].dorder, o.terms_[k].shift,
                         o.terms_[k].dorder) != 0 ||
            terms_[k].coeff != o.terms_[k].coeff)
            return false;
    }
    return true;
}

LinOp op_linear_combine(const ExpPoly& alpha, const LinOp& l1,
                        const ExpPoly& beta, const LinOp& l2) {
    return l1.scaled(alpha) + l2.scaled(beta);
}

} // namespace ddeq
