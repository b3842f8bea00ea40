#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lgb/ladders.hpp"
#include "lgb/polynomial.hpp"
#include "lgb/term_order.hpp"

namespace lgb {

/// Which region and which selection produced a generator. Pfaffians list
/// their index set in `rows` and leave `cols` empty.
struct GeneratorProvenance {
    std::size_t region = 0;
    std::vector<int> rows;
    std::vector<int> cols;

    std::string to_string() const;
    friend bool operator==(const GeneratorProvenance&, const GeneratorProvenance&) = default;
};

struct GeneratorSet {
    std::vector<Polynomial<Rational>> polys;
    std::vector<GeneratorProvenance> provenance;

    std::size_t size() const { return polys.size(); }
    bool empty() const { return polys.empty(); }
};

/// G_t(L): maximal minors, 2t_k-pfaffians of the blocks, or t_k-minors inside
/// the regions, deduplicated across regions. Enumerated by (region, rows, cols).
GeneratorSet natural_generators(const LadderInstance& inst);

/// Distinct leading monomials of the natural generators, largest first.
std::vector<Monomial> initial_generators(const LadderInstance& inst, const TermOrder& order);

/// Term order of the given kind on the instance's matrix.
TermOrder family_order(const LadderInstance& inst, OrderKind kind);
inline TermOrder family_order(const LadderInstance& inst) { return family_order(inst, default_order(inst.family)); }

/// False when no Groebner basis claim is made for this family under `kind`.
bool order_matches_family(Family f, OrderKind kind);

} // namespace lgb
