#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace lgb {

/// Variable identifier: the matrix position (row, col) packed into 16 bits.
/// Row 0 is reserved for auxiliary variables (e.g. the Rabinowitsch variable).
using Var = std::uint16_t;

constexpr Var make_var(int row, int col) { return static_cast<Var>((row << 8) | col); }
constexpr int var_row(Var v) { return v >> 8; }
constexpr int var_col(Var v) { return v & 0xff; }
std::string var_name(Var v);

/// Monomial as a sparse exponent vector sorted by variable id. Zero
/// exponents are never stored, so equal monomials compare equal.
class Monomial {
public:
    using Entry = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t e = 1);
    Monomial(std::initializer_list<Entry> entries);
    static Monomial from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return e_; }
    std::uint32_t degree() const { return deg_; }
    bool is_one() const { return e_.empty(); }
    std::uint32_t exponent(Var v) const;
    bool contains(Var v) const { return exponent(v) != 0; }
    bool is_squarefree() const;
    std::vector<Var> support() const;

    bool divides(const Monomial& other) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; the caller guarantees b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    /// a : b, i.e. a / gcd(a, b).
    friend Monomial colon(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    /// Canonical (order independent) comparison, used for containers only.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

    std::string to_string() const;

private:
    std::vector<Entry> e_;
    std::uint32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

} // namespace lgb
