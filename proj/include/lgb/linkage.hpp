#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgb/complexes.hpp"
#include "lgb/field.hpp"
#include "lgb/ladders.hpp"
#include "lgb/monomial_ideal.hpp"
#include "lgb/polynomial.hpp"
#include "lgb/term_order.hpp"

namespace lgb {

/// One corner-removal step: C = A + f*B with A = in(M), B = in(L'), C = in(L),
/// all inside K[L].
struct LinkageStep {
    LadderInstance instance; ///< L
    LadderInstance reduced;  ///< L'
    LadderInstance middle;   ///< M
    Var f = 0;
    int ell = 1;
    MonomialIdeal a, b, c;
    std::vector<std::string> notes;

    // structural checks, filled by build_chain
    bool decomposition_ok = false; ///< C == minimalize(A + f*B)
    bool f_outside_a = false;
    bool colon_stable = false;
    bool a_in_b = false;
    int height_instance = 0;
    int height_middle = 0;

    bool structure_ok() const
    {
        return decomposition_ok && f_outside_a && colon_stable && a_in_b && height_instance == height_middle + 1;
    }
    friend bool operator==(const LinkageStep&, const LinkageStep&) = default;
};

struct LinkageCertificate {
    LadderInstance root;
    OrderKind order = OrderKind::Diagonal;
    /// Distinct non-terminal instances in depth-first order, root first.
    std::vector<LinkageStep> steps;
    /// Distinct terminal instances reached.
    std::vector<LadderInstance> terminals;

    /// Every L' and M is the L of some step or a terminal.
    bool connected() const;
    /// Terminal instances are generated by variables (or are zero).
    bool terminals_linear() const;
    const LinkageStep* find_step(const std::string& key) const;
    friend bool operator==(const LinkageCertificate&, const LinkageCertificate&) = default;
};

/// Runs the recursion, sharing repeated sub-instances.
LinkageCertificate build_chain(const LadderInstance& inst, const TermOrder& order);

/// Monomial ideal of the leading terms of the natural generators, in K[L].
MonomialIdeal initial_ideal(const LadderInstance& inst, const TermOrder& order, const std::vector<Var>& ambient);

struct VerifyOptions {
    FieldSpec field = FieldSpec::rationals();
    /// Negative: 2 * (max generator degree) + 2.
    int dmax = -1;
    std::size_t max_spairs = 0;
    std::size_t max_faces = 0;
};

/// Buchberger results per instance, computed once per session.
class GroebnerOracle {
public:
    struct Entry {
        /// Leading monomials of the reduced basis.
        std::vector<Monomial> leading;
        std::size_t basis_size = 0;
        /// buchberger_reduced(G) equals the monic natural generators.
        bool fixed_point = false;
        /// is_reduced_groebner(monic natural generators).
        bool natural_reduced = false;
        std::size_t pairs_reduced = 0;
    };

    GroebnerOracle(TermOrder order, VerifyOptions opts);
    const Entry& get(const LadderInstance& inst);
    const TermOrder& order() const { return order_; }
    const VerifyOptions& options() const { return opts_; }

private:
    TermOrder order_;
    VerifyOptions opts_;
    std::map<std::string, Entry> cache_;
};

struct InidReport {
    std::string instance;
    bool terminal = false;
    bool precondition_ok = true;
    std::string precondition_error;
    int dmax = 0;
    bool monomial_identity = true;
    int monomial_fail_degree = -1;
    bool oracle_identity = true;
    int oracle_fail_degree = -1;
    bool c_in_initial = true;
    std::vector<std::uint64_t> h_a, h_b, h_c;

    bool ok() const { return terminal || (precondition_ok && monomial_identity && oracle_identity && c_in_initial); }
    friend bool operator==(const InidReport&, const InidReport&) = default;
};

/// Hilbert identity H_C(d) = H_B(d-1) + H_A(d) - H_A(d-1) on the monomial
/// data and on the oracle initial ideals of I(L), I(L'), I(M), plus
/// C inside in(I(L)), for 0 <= d <= dmax.
InidReport verify_inid_step(const LinkageStep& step, GroebnerOracle& oracle, int dmax);
/// Same for a step given only its monomial data (no oracle side).
InidReport verify_inid_monomial(const LinkageStep& step, int dmax);
InidReport terminal_report(const LadderInstance& inst);

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);
Status parse_status(const std::string& s);

struct CheckResult {
    std::string id;
    std::string name;
    Status status = Status::Skipped;
    std::string detail;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct FamilyReport {
    LadderInstance instance;
    OrderKind order = OrderKind::Diagonal;
    FieldSpec field;
    int dmax = 0;
    std::size_t generator_count = 0;
    int height = 0;
    int codimension = 0;
    std::vector<CheckResult> checks;
    LinkageCertificate chain;
    std::vector<InidReport> steps;
    std::shared_ptr<const VDCertificate> vd;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;

    bool passed() const;
    bool budget_exhausted() const;
    const CheckResult* check(const std::string& id) const;
};

/// Full claim set for one instance: (a) reduced Groebner basis, (b) oracle
/// fixed point, (c) squarefree initial ideal, (d) codimension = height
/// formula, (e) vertex decomposability, (f) Hilbert identity per step, and
/// (g) the structural chain invariants, (h) in(I) generated by the leading
/// terms of the natural generators (Groebner but possibly not reduced).
FamilyReport verify_family(const LadderInstance& inst, const TermOrder& order, const VerifyOptions& opts = {});

int default_dmax(const LadderInstance& inst);

// ---- localization (one-sided ladders) ----

struct LocalizationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerator over a power of the pivot variable.
struct Fraction {
    Polynomial<Rational> num;
    std::uint32_t power = 0;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct LocalizationMap {
    enum class Direction { Phi, Psi };
    Direction direction = Direction::Phi;
    Cell pivot;
    /// Cells x_ij with i != u, j != v in the affected regions.
    std::vector<Var> affected;

    /// x_ij -> x_ij +/- x_iv x_uj / x_uv on affected variables.
    Fraction image(Var x) const;
    /// Image of a polynomial with the least power of x_uv.
    Fraction apply(const Polynomial<Rational>& p) const;
    Fraction apply(const Fraction& f) const;
};

struct LocalizationData {
    LocalizationMap phi, psi;
    /// Regions j..k (0-based, inclusive) containing the pivot.
    std::size_t first = 0, last = 0;
    std::vector<Cell> hat_points;
    std::vector<int> r;
    /// Generators of I_r(L^) written in the variables of L.
    std::vector<Polynomial<Rational>> hat_generators;
};

LocalizationData localization_maps(const LadderInstance& inst, Cell pivot);

struct LocalizationReport {
    bool inverse_ok = false;
    std::vector<std::pair<std::string, bool>> forward;
    std::vector<std::pair<std::string, bool>> backward;
    bool ok() const;
};

/// psi(phi(x)) = x on every ladder variable, phi(g) in I_r(L^) and
/// psi(h) in I_t(L) after saturating by x_uv (checked with an auxiliary
/// variable y and the relation y*x_uv - 1).
LocalizationReport verify_localization(const LadderInstance& inst, Cell pivot, const VerifyOptions& opts = {});

} // namespace lgb
