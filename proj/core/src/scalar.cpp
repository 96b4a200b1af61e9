#include "jumploci/scalar.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw ParseError("scalar: zero denominator");
    re_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (im_ == 0 && o.im_ == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw ValidationError("scalar: division by zero");
    if (im_ == 0 && o.im_ == 0) {
        re_ /= o.re_;
        return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar Scalar::inverse() const {
    Scalar one(1);
    return one /= *this;
}

namespace {

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("rational: empty string");
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') pos = 1;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
            seen_slash = true;
        } else {
            throw ParseError("rational: malformed \"" + text + "\"");
        }
    }
    if (!seen_digit) throw ParseError("rational: malformed \"" + text + "\"");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("rational: malformed \"" + text + "\"");
    if (q.get_den() == 0) throw ParseError("rational: zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

} // namespace

Scalar Scalar::parse(const std::string& text) { return Scalar(parse_rational(text)); }

std::string Scalar::str() const {
    if (im_ == 0) return re_.get_str();
    std::string s = re_.get_str();
    s += (im_ >= 0) ? "+" : "";
    s += im_.get_str();
    s += "*i";
    return s;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c;
    return cmp(a.im_, b.im_);
}

} // namespace jumploci
