#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lgb {

/// Arbitrary precision rational number. Always canonical (gmp normalizes).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(long num, long den) : q_(num, den)
    {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) {}

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }
    Rational inverse() const { return Rational(1) /= *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

    std::string to_string() const { return q_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

/// Element of GF(p). The modulus travels with the value; a default
/// constructed element is the zero of "any" prime field and adopts the
/// modulus of the other operand.
class ModP {
public:
    ModP() = default;
    ModP(std::int64_t v, std::uint32_t p) : p_(p)
    {
        if (p < 2) throw std::domain_error("ModP: modulus must be a prime >= 2");
        auto r = v % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    ModP operator-() const { return v_ == 0 ? *this : ModP(p_ - v_, p_, raw_tag{}); }
    ModP& operator+=(const ModP& o)
    {
        adopt(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        return *this;
    }
    ModP& operator-=(const ModP& o) { return *this += -o; }
    ModP& operator*=(const ModP& o)
    {
        adopt(o);
        v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
        return *this;
    }
    ModP inverse() const
    {
        if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return ModP(x0, p_);
    }
    ModP& operator/=(const ModP& o) { adopt(o); return *this *= o.inverse(); }

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

    std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.to_string(); }

private:
    struct raw_tag {};
    ModP(std::uint32_t v, std::uint32_t p, raw_tag) : v_(v), p_(p) {}
    void adopt(const ModP& o)
    {
        if (p_ == 0) p_ = o.p_;
        else if (o.p_ != 0 && o.p_ != p_) throw std::domain_error("ModP: mixed moduli");
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

/// Maps an (integer or rational) constant into the field of `like`.
inline Rational embed(const Rational& q, const Rational&) { return q; }
inline ModP embed(const Rational& q, const ModP& like)
{
    const auto p = like.modulus();
    mpz_class num = q.raw().get_num() % p;
    mpz_class den = q.raw().get_den() % p;
    if (den == 0) throw std::domain_error("embed: denominator vanishes mod p");
    return ModP(num.get_si(), p) / ModP(den.get_si(), p);
}

inline Rational field_one(const Rational&) { return Rational(1); }
inline ModP field_one(const ModP& like) { return ModP(1, like.modulus()); }

bool is_prime(std::uint64_t p);

/// Coefficient field chosen for a session: the rationals or GF(p).
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    /// Parses "q" or "gf:P".
    static FieldSpec parse(const std::string& text);
    std::string to_string() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn with the unit of the selected field.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.kind == FieldSpec::Kind::Prime) return fn(ModP(1, spec.p));
    return fn(Rational(1));
}

} // namespace lgb
