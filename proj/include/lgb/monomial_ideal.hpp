#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgb/monomial.hpp"

namespace lgb {

/// Monomial ideal given by its minimal generators, inside the polynomial
/// ring on `ambient` (sorted variable ids).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Minimalizes `gens`. An empty ambient list means "support of gens";
    /// otherwise every generator must live in the ambient ring.
    explicit MonomialIdeal(std::vector<Monomial> gens, std::vector<Var> ambient = {});

    const std::vector<Monomial>& generators() const { return gens_; }
    const std::vector<Var>& ambient() const { return ambient_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

    bool contains(const Monomial& m) const;
    /// Ideal containment (same ambient not required).
    bool contains(const MonomialIdeal& other) const;
    bool is_squarefree() const;
    std::vector<Var> support() const;
    MonomialIdeal with_ambient(std::vector<Var> ambient) const;

    std::string to_string() const;
    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Monomial> gens_;
    std::vector<Var> ambient_;
};

/// Divisibility-minimal subset, sorted canonically.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<Var> ambient = {});

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const Monomial& f, const MonomialIdeal& b);

/// (A : f) == A.
bool colon_stable(const MonomialIdeal& a, const Monomial& f);

struct BdlError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BdlResult {
    MonomialIdeal c;
    std::uint32_t degree = 0;
    /// f = 1: C is just B.
    bool degenerate = false;
};

/// C = A + f*B, checking A : f = A and A inside B.
BdlResult bdl(const MonomialIdeal& a, const MonomialIdeal& b, const Monomial& f);

/// H_{R/A}(d) for d = 0..dmax by the pivot recursion
/// H(A) = H(A : x)(d-1) + H(A + x)(d), x the most frequent variable.
std::vector<std::uint64_t> hilbert_function(const MonomialIdeal& a, int dmax);
std::uint64_t hilbert_function_at(const MonomialIdeal& a, int d);
/// Same value by enumerating all degree-d monomials of the ambient ring.
std::uint64_t hilbert_function_brute(const MonomialIdeal& a, int d);

} // namespace lgb
