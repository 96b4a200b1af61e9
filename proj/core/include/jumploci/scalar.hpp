#pragma once

#include <gmpxx.h>

#include <string>

namespace jumploci {

/// Exact field scalar: a Gaussian rational re + im*i with arbitrary-precision
/// components. The default field mode is plain rationals (im == 0); the
/// quadratic extension is enabled by accepting imaginary parts on input.
/// Components are always kept canonical (lowest terms, positive denominator).
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    Scalar(long num, long den);

    /// Parses "p", "-p", or "p/q" with decimal-digit components. Throws ParseError
    /// on empty input, zero denominator, or stray characters.
    static Scalar parse(const std::string& text);

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    /// Canonical text form: "p" or "p/q" for rationals; "re+im*i" style otherwise.
    std::string str() const;

    /// Total order used only for deterministic tie-breaking (not a field order).
    static int compare(const Scalar& a, const Scalar& b);

private:
    mpq_class re_, im_;
};

} // namespace jumploci
