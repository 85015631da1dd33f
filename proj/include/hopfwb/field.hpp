#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfwb {

using Scalar = mpq_class;

/// Raised for any arithmetic that has no meaning in the ambient field
/// (division by zero, fractions whose denominator vanishes mod p, ...).
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The exact ground field: either Q or F_p. Elements of F_p are stored as
/// canonical integers in [0, p) inside an mpq_class so both kinds share one
/// scalar type.
class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(unsigned long p);

    Kind kind() const { return kind_; }
    unsigned long characteristic() const { return p_; }
    bool is_prime() const { return kind_ == Kind::Prime; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    /// Brings an arbitrary rational into the field (reduction mod p).
    Scalar from_rational(const Scalar& q) const;
    Scalar from_int(long v) const { return from_rational(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    void add_mul_to(Scalar& acc, const Scalar& a, const Scalar& b) const;

    /// Parses "n", "-n" or "n/d".
    Scalar parse(std::string_view text) const;
    std::string to_string(const Scalar& a) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    Field(Kind kind, unsigned long p) : kind_(kind), p_(p) {}
    void reduce(Scalar& a) const;

    Kind kind_;
    unsigned long p_;
};

} // namespace hopfwb
