#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgb/monomial.hpp"
#include "lgb/shape.hpp"
#include "lgb/term_order.hpp"

namespace lgb {

enum class Family { MaxMinors, Pfaffian, Symmetric, OneSided };

std::string to_string(Family f);
/// Accepts "maxminors", "pfaffian", "symmetric", "onesided". Two-sided
/// ladders are recognized and rejected with OutOfScope.
Family parse_family(const std::string& s);

struct OutOfScope : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Cell = std::pair<int, int>;
using CellSet = std::set<Cell>;

/// One ladder instance of one of the four families.
///
///  MaxMinors  m x n generic matrix, t = (m); m > n is allowed and gives the
///             zero ideal (it arises as the matrix Z of the m = n split).
///  Pfaffian   n x n skew matrix, upper corners (a_k, b_k), blocks [a_k, b_k]^2.
///  Symmetric  n x n symmetric matrix, distinguished points (v_k, w_k),
///             regions {i <= j, i <= v_k, j <= w_k}.
///  OneSided   m x n generic matrix, distinguished points (a_k, b_k),
///             regions {i <= a_k, j >= b_k}.
struct LadderInstance {
    Family family = Family::MaxMinors;
    int m = 0;
    int n = 0;
    std::vector<Cell> points;
    std::vector<int> t;

    static LadderInstance maxminors(int m, int n);
    static LadderInstance pfaffian(int n, std::vector<Cell> corners, std::vector<int> t);
    static LadderInstance symmetric(int n, std::vector<Cell> points, std::vector<int> t);
    static LadderInstance onesided(int m, int n, std::vector<Cell> points, std::vector<int> t);

    /// Matrix the instance lives in (not validated: m > n passes for MaxMinors).
    MatrixShape shape() const;
    /// Canonical encoding, e.g. "onesided 3x3 [(2,1),(3,2)] t=(2,2)".
    std::string key() const;
    std::string to_string() const { return key(); }

    friend bool operator==(const LadderInstance&, const LadderInstance&) = default;
};

struct Diagnostic {
    /// Short name of the violated condition, e.g. "coincident upper corners".
    std::string condition;
    std::string detail;

    std::string message() const { return detail.empty() ? condition : condition + ": " + detail; }
};

struct InvalidLadder : std::invalid_argument {
    Diagnostic diagnostic;
    explicit InvalidLadder(Diagnostic d) : std::invalid_argument(d.message()), diagnostic(std::move(d)) {}
};

/// First violated condition, or nullopt if the instance is a valid member of its family.
std::optional<Diagnostic> validate(const LadderInstance& inst);
/// Throws InvalidLadder if validate() fails.
void require_valid(const LadderInstance& inst);

/// Cell set. Pfaffian ladders are returned as symmetric sets (both (i,j)
/// and (j,i), diagonal included); symmetric ladders as L+ (i <= j).
CellSet cells(const LadderInstance& inst);
/// Variables of K[L]: pfaffian i < j, symmetric i <= j, generic all cells.
std::vector<Var> ladder_variables(const LadderInstance& inst);
std::size_t variable_count(const LadderInstance& inst);

/// Drops regions without generators of their size and regions whose
/// generators are implied by another region. Never changes the ideal.
LadderInstance normalize(const LadderInstance& inst, std::vector<std::string>* notes = nullptr);

/// The shifted ladder whose size is the height. Pfaffian: symmetric set of
/// the blocks [a+t-1, b-t+1]^2; symmetric: union of regions (v-t+1, w-t+1);
/// one-sided: union of regions (a-t+1, b+t-1).
CellSet tilde(const LadderInstance& inst);
/// Height predicted by the cell count of tilde().
int height_formula(const LadderInstance& inst);

/// True when the generators of the instance are variables (or absent).
bool is_terminal(const LadderInstance& inst);

struct SplitResult {
    LadderInstance reduced; ///< L' with t'
    LadderInstance middle;  ///< M with u
    Cell shedding;          ///< the cell removed from L to get M
    std::size_t region = 0; ///< index k of the split region (0 for MaxMinors)
    std::vector<std::string> notes;
    /// L' and M exactly as the split formulas give them, before normalization.
    LadderInstance reduced_raw;
    LadderInstance middle_raw;

    Var shedding_var() const { return make_var(shedding.first, shedding.second); }
};

/// One corner-removal step of the recursion, or nullopt when terminal.
/// Both outputs are normalized and validated (InvalidLadder otherwise).
std::optional<SplitResult> recursion_split(const LadderInstance& inst);

/// Order kind under which the family's natural generators have the
/// expected leading terms.
OrderKind default_order(Family f);

} // namespace lgb
