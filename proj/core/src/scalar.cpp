#include "dgalg/scalar.hpp"

namespace dgalg {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime_field(std::uint32_t p) {
    if (p > 0x80000000u || !is_prime(p))
        throw InputError("field characteristic must be a prime <= 2^31, got " +
                         std::to_string(p));
    return Field{FieldTag::Fp, p};
}

std::string Field::to_string() const {
    return tag == FieldTag::Q ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
        unsigned long v;
        try {
            size_t pos;
            v = std::stoul(s.substr(3), &pos);
            if (pos != s.size() - 3) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw InputError("bad field spec: " + s);
        }
        if (v > 0xFFFFFFFFul) throw InputError("bad field spec: " + s);
        return prime_field(static_cast<std::uint32_t>(v));
    }
    throw InputError("bad field spec: " + s + " (expected Q or Fp:<p>)");
}

namespace {
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % p;
        b = (__uint128_t)b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t residue_of(const Rational& q, std::uint32_t p) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(q) % p;
    if (num < 0) num += p;
    cpp_int den = denominator(q) % p;
    if (den == 0)
        throw InputError("denominator divisible by field characteristic " +
                         std::to_string(p));
    std::uint64_t n = num.convert_to<std::uint64_t>();
    std::uint64_t d = den.convert_to<std::uint64_t>();
    return (__uint128_t)n * mod_pow(d, p - 2, p) % p;
}
}  // namespace

Scalar::Scalar(const Field& f, long n) : field_(f) {
    if (f.tag == FieldTag::Q) {
        q_ = n;
    } else {
        long m = n % static_cast<long>(f.p);
        if (m < 0) m += f.p;
        r_ = static_cast<std::uint64_t>(m);
    }
}

Scalar::Scalar(const Field& f, const Rational& q) : field_(f) {
    if (f.tag == FieldTag::Q)
        q_ = q;
    else
        r_ = residue_of(q, f.p);
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
    auto slash = s.find('/');
    try {
        Rational q;
        if (slash == std::string::npos) {
            q = Rational(boost::multiprecision::cpp_int(s));
        } else {
            boost::multiprecision::cpp_int num(s.substr(0, slash));
            boost::multiprecision::cpp_int den(s.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator in scalar " + s);
            q = Rational(num, den);
        }
        return Scalar(f, q);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad scalar literal: " + s);
    }
}

bool Scalar::is_zero() const {
    return field_.tag == FieldTag::Q ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.tag == FieldTag::Q ? q_ == 1 : r_ == 1 % field_.p;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw InputError("mixed-field scalar arithmetic (" +
                         field_.to_string() + " vs " + o.field_.to_string() + ")");
}

Scalar Scalar::operator-() const {
    Scalar out(field_);
    if (field_.tag == FieldTag::Q)
        out.q_ = -q_;
    else
        out.r_ = r_ == 0 ? 0 : field_.p - r_;
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar out(field_);
    if (field_.tag == FieldTag::Q)
        out.q_ = q_ + o.q_;
    else
        out.r_ = (r_ + o.r_) % field_.p;
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar out(field_);
    if (field_.tag == FieldTag::Q)
        out.q_ = q_ * o.q_;
    else
        out.r_ = (__uint128_t)r_ * o.r_ % field_.p;
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    Scalar out(field_);
    if (field_.tag == FieldTag::Q)
        out.q_ = 1 / q_;
    else
        out.r_ = mod_pow(r_, field_.p - 2, field_.p);
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.tag == FieldTag::Q ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (field_.tag == FieldTag::Fp) return std::to_string(r_);
    std::string num = numerator(q_).str();
    if (denominator(q_) == 1) return num;
    return num + "/" + denominator(q_).str();
}

}  // namespace dgalg
