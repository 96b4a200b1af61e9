#include "jumploci/polynomial.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(Ring{std::move(vars)});
}

RingPtr make_ring(std::size_t nvars, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
    return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw ValidationError(std::string(where) + ": operands live in different rings");
}

namespace {

struct DescendingDegrevlex {
    // Degrevlex "greater" as strict weak order, used to keep terms descending.
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (std::size_t i = a.e.size(); i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
};

} // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::map<Monomial, Scalar, DescendingDegrevlex> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != ring_->nvars())
            throw ValidationError("polynomial: exponent vector length does not match ring");
        if (t.coeff.is_zero()) continue;
        auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
        if (!fresh) {
            it->second += t.coeff;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back(Term{Monomial(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw ValidationError("polynomial: variable index out of range");
    Monomial m(ring->nvars());
    m.e[index] = 1;
    return from_monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, Scalar c) {
    Polynomial p(ring);
    if (m.nvars() != ring->nvars())
        throw ValidationError("polynomial: exponent vector length does not match ring");
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial add");
    DescendingDegrevlex gt;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (gt(terms_[i].mono, o.terms_[j].mono)) {
            out.push_back(terms_[i++]);
        } else if (gt(o.terms_[j].mono, terms_[i].mono)) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back(Term{terms_[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial mul");
    std::map<Monomial, Scalar, DescendingDegrevlex> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != ring_->nvars())
        throw ValidationError("evaluate: point length does not match ring");
    Scalar total(0);
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t k = 0; k < t.mono.e[i]; ++k) v *= point[i];
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
        throw ValidationError("substitute: image count does not match ring");
    Polynomial total(target);
    for (const auto& t : terms_) {
        Polynomial v = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::uint32_t k = 0; k < t.mono.e[i]; ++k) v = v * images[i];
        }
        total = total + v;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
        }
        if (mono.empty()) {
            out += t.coeff.str();
        } else if (t.coeff.is_one()) {
            out += mono;
        } else {
            out += t.coeff.str() + "*" + mono;
        }
    }
    return out;
}

} // namespace jumploci
