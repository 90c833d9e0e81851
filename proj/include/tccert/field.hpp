#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tccert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A prime field F_p (characteristic p) or the rationals (characteristic 0).
class FieldSpec {
public:
    FieldSpec() : characteristic_(0) {}
    explicit FieldSpec(std::uint64_t characteristic);

    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(std::uint64_t p) { return FieldSpec(p); }

    std::uint64_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }

    bool operator==(const FieldSpec& o) const { return characteristic_ == o.characteristic_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

private:
    std::uint64_t characteristic_;
};

/// Exact field element: arbitrary-precision rational in characteristic 0,
/// reduced residue in [0, p) otherwise. No floating point anywhere.
class Scalar {
public:
    Scalar() : p_(0), res_(0) {}
    Scalar(const FieldSpec& f, long long v);
    Scalar(const FieldSpec& f, const BigInt& v);
    Scalar(const FieldSpec& f, const BigRational& v);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

    FieldSpec field() const { return FieldSpec(p_); }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "3/2", "-2" over Q; "4" over F_p.
    std::string str() const;
    /// Inverse of str(); accepts integers and a/b fractions.
    static Scalar parse(const FieldSpec& f, const std::string& s);

    const BigRational& rational_value() const;
    std::uint64_t residue_value() const;

private:
    void check_same_field(const Scalar& o) const;

    std::uint64_t p_;    // 0 = rationals
    BigRational rat_;    // used when p_ == 0
    std::uint64_t res_;  // used when p_ > 0, always in [0, p_)
};

bool is_prime_u64(std::uint64_t n);

}  // namespace tccert
