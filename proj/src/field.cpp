#include "tccert/field.hpp"

namespace tccert {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
    if (characteristic_ != 0 && !is_prime_u64(characteristic_))
        throw FieldError("characteristic must be 0 or a prime, got " +
                         std::to_string(characteristic_));
    if (characteristic_ >= (1ull << 31))
        throw FieldError("prime characteristic must be < 2^31");
}

namespace {

std::uint64_t mod_reduce(const BigInt& v, std::uint64_t p) {
    BigInt r = v % BigInt(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p)
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw FieldError("element not invertible mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar::Scalar(const FieldSpec& f, long long v) : Scalar(f, BigInt(v)) {}

Scalar::Scalar(const FieldSpec& f, const BigInt& v) : p_(f.characteristic()), res_(0) {
    if (p_ == 0)
        rat_ = BigRational(v);
    else
        res_ = mod_reduce(v, p_);
}

Scalar::Scalar(const FieldSpec& f, const BigRational& v) : p_(f.characteristic()), res_(0) {
    if (p_ == 0) {
        rat_ = v;
    } else {
        std::uint64_t den = mod_reduce(denominator(v), p_);
        if (den == 0) throw FieldError("rational has denominator divisible by p");
        res_ = mod_reduce(numerator(v), p_) * mod_inverse(den, p_) % p_;
    }
}

bool Scalar::is_zero() const { return p_ == 0 ? rat_.is_zero() : res_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw FieldError("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = rat_ + o.rat_;
    else
        r.res_ = (res_ + o.res_) % p_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = rat_ - o.rat_;
    else
        r.res_ = (res_ + p_ - o.res_) % p_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = rat_ * o.rat_;
    else
        r.res_ = res_ * o.res_ % p_;  // p < 2^31, no overflow
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = -rat_;
    else
        r.res_ = res_ == 0 ? 0 : p_ - res_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = 1 / rat_;
    else
        r.res_ = mod_inverse(res_, p_);
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (p_ == 0) {
        if (denominator(rat_) == 1) return numerator(rat_).str();
        return numerator(rat_).str() + "/" + denominator(rat_).str();
    }
    return std::to_string(res_);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Scalar(f, BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw FieldError("zero denominator in scalar literal: " + s);
    return Scalar(f, BigRational(num, den));
}

const BigRational& Scalar::rational_value() const {
    if (p_ != 0) throw FieldError("not a rational scalar");
    return rat_;
}

std::uint64_t Scalar::residue_value() const {
    if (p_ == 0) throw FieldError("not a prime-field scalar");
    return res_;
}

}  // namespace tccert
