#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgalg {

using Rational = boost::multiprecision::cpp_rational;

// Thrown when an operation would need data outside an object's trusted
// degree window.  Never caught internally: callers either widen the window
// or surface the message.
struct InsufficientTruncation : std::runtime_error {
    explicit InsufficientTruncation(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed user input (files, CLI arguments, structure tables).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldTag { Q, Fp };

// Ground field descriptor.  Fp requires p prime, p <= 2^31.
struct Field {
    FieldTag tag = FieldTag::Q;
    std::uint32_t p = 0;

    static Field rationals() { return Field{FieldTag::Q, 0}; }
    static Field prime_field(std::uint32_t p);

    bool operator==(const Field&) const = default;
    std::string to_string() const;
    // Parses "Q", "q", "Fp:<p>", "fp:<p>".
    static Field parse(const std::string& s);
};

bool is_prime(std::uint32_t n);

// Exact field element: a rational over Q, or a residue mod p over Fp.
// Rationals are kept canonical (lowest terms, positive denominator) by
// cpp_rational itself.
class Scalar {
public:
    Scalar() = default;  // zero over Q
    explicit Scalar(const Field& f) : field_(f) {}
    Scalar(const Field& f, long n);
    Scalar(const Field& f, const Rational& q);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    // Parses "n", "-n", or "n/d" (decimal strings, exact).
    static Scalar parse(const Field& f, const std::string& s);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "num" or "num/den" over Q; residue digits over Fp.
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_ = Field::rationals();
    Rational q_ = 0;        // used when tag == Q
    std::uint64_t r_ = 0;   // used when tag == Fp, reduced mod p
};

}  // namespace dgalg
