#include "lgb/linkage.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lgb/groebner.hpp"
#include "lgb/ideal_families.hpp"
#include "lgb/matrix_vars.hpp"

namespace lgb {

// ---- chain ----

MonomialIdeal initial_ideal(const LadderInstance& inst, const TermOrder& order, const std::vector<Var>& ambient)
{
    return MonomialIdeal(initial_generators(inst, order), ambient);
}

namespace {

int safe_height(const LadderInstance& inst)
{
    if (inst.family != Family::MaxMinors && inst.points.empty()) return 0;
    return height_formula(inst);
}

LinkageStep make_step(const LadderInstance& inst, const SplitResult& split, const TermOrder& order)
{
    LinkageStep s;
    s.instance = inst.family == Family::MaxMinors ? inst : normalize(inst);
    s.reduced = split.reduced;
    s.middle = split.middle;
    s.f = split.shedding_var();
    s.notes = split.notes;
    const auto ambient = ladder_variables(s.instance);
    s.a = initial_ideal(s.middle, order, ambient);
    s.b = initial_ideal(s.reduced, order, ambient);
    s.c = initial_ideal(s.instance, order, ambient);

    const Monomial f(s.f);
    const auto supp = s.a.support();
    s.f_outside_a = !std::binary_search(supp.begin(), supp.end(), s.f);
    s.colon_stable = colon_stable(s.a, f);
    s.a_in_b = s.b.contains(s.a);
    s.decomposition_ok = sum(s.a, multiply(f, s.b)) == s.c;
    s.height_instance = safe_height(s.instance);
    s.height_middle = safe_height(s.middle);
    return s;
}

} // namespace

LinkageCertificate build_chain(const LadderInstance& inst, const TermOrder& order)
{
    require_valid(inst);
    LinkageCertificate cert;
    cert.root = inst;
    cert.order = order.kind();
    std::set<std::string> seen;
    std::function<void(const LadderInstance&)> visit = [&](const LadderInstance& l) {
        if (!seen.insert(l.key()).second) return;
        auto split = recursion_split(l);
        if (!split) {
            cert.terminals.push_back(l.points.empty() || l.family == Family::MaxMinors ? l : normalize(l));
            return;
        }
        cert.steps.push_back(make_step(l, *split, order));
        const LadderInstance reduced = split->reduced, middle = split->middle;
        visit(reduced);
        visit(middle);
    };
    visit(inst);
    return cert;
}

const LinkageStep* LinkageCertificate::find_step(const std::string& key) const
{
    for (const auto& s : steps)
        if (s.instance.key() == key) return &s;
    return nullptr;
}

bool LinkageCertificate::connected() const
{
    auto canon = [](const LadderInstance& l) {
        return l.points.empty() || l.family == Family::MaxMinors ? l.key() : normalize(l).key();
    };
    std::set<std::string> known;
    for (const auto& s : steps) known.insert(canon(s.instance));
    for (const auto& t : terminals) known.insert(canon(t));
    if (!known.count(canon(root))) return false;
    for (const auto& s : steps)
        if (!known.count(canon(s.reduced)) || !known.count(canon(s.middle))) return false;
    return true;
}

bool LinkageCertificate::terminals_linear() const
{
    for (const auto& t : terminals) {
        if (t.family != Family::MaxMinors && t.points.empty()) continue;
        for (const auto& g : natural_generators(t).polys)
            if (g.size() != 1 || g.degree() != 1) return false;
    }
    return true;
}

// ---- oracle ----

namespace {

template <typename Scalar>
GroebnerOracle::Entry compute_entry(const std::vector<Polynomial<Rational>>& natural, const TermOrder& order,
                                    const Scalar& one, const VerifyOptions& opts)
{
    GroebnerOracle::Entry e;
    auto gens = embed(natural, one);
    BuchbergerOptions bo;
    bo.max_spairs = opts.max_spairs;
    BuchbergerStats stats;
    auto basis = buchberger_reduced(gens, order, bo, &stats);
    e.pairs_reduced = stats.pairs_reduced;
    e.basis_size = basis.size();
    e.leading = leading_monomials(basis, order);
    auto monic = monic_sorted(gens, order);
    e.fixed_point = monic_sorted(basis, order) == monic;
    e.natural_reduced = is_reduced_groebner(monic, order);
    return e;
}

} // namespace

GroebnerOracle::GroebnerOracle(TermOrder order, VerifyOptions opts) : order_(std::move(order)), opts_(opts) {}

const GroebnerOracle::Entry& GroebnerOracle::get(const LadderInstance& inst)
{
    const std::string key = inst.key();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto natural = natural_generators(inst).polys;
    Entry e = with_field(opts_.field, [&](const auto& one) { return compute_entry(natural, order_, one, opts_); });
    return cache_.emplace(key, std::move(e)).first->second;
}

// ---- Hilbert identity ----

namespace {

// H_C(d) == H_B(d-1) + H_A(d) - H_A(d-1); first failing degree or -1.
int first_failure(const std::vector<std::uint64_t>& ha, const std::vector<std::uint64_t>& hb,
                  const std::vector<std::uint64_t>& hc)
{
    for (std::size_t d = 0; d < hc.size(); ++d) {
        const std::int64_t prev_b = d > 0 ? static_cast<std::int64_t>(hb[d - 1]) : 0;
        const std::int64_t prev_a = d > 0 ? static_cast<std::int64_t>(ha[d - 1]) : 0;
        if (static_cast<std::int64_t>(hc[d]) != prev_b + static_cast<std::int64_t>(ha[d]) - prev_a)
            return static_cast<int>(d);
    }
    return -1;
}

} // namespace

InidReport terminal_report(const LadderInstance& inst)
{
    InidReport r;
    r.instance = inst.key();
    r.terminal = true;
    return r;
}

InidReport verify_inid_monomial(const LinkageStep& step, int dmax)
{
    InidReport r;
    r.instance = step.instance.key();
    r.dmax = dmax;
    const Monomial f(step.f);
    if (!colon_stable(step.a, f)) {
        r.precondition_ok = false;
        r.precondition_error = "colon not stable: A : f != A for f = " + var_name(step.f);
        return r;
    }
    if (!step.a.is_squarefree() || !step.b.is_squarefree() || !step.c.is_squarefree()) {
        r.precondition_ok = false;
        r.precondition_error = "monomial ideals of the step are not squarefree";
        return r;
    }
    r.h_a = hilbert_function(step.a, dmax);
    r.h_b = hilbert_function(step.b, dmax);
    r.h_c = hilbert_function(step.c, dmax);
    r.monomial_fail_degree = first_failure(r.h_a, r.h_b, r.h_c);
    r.monomial_identity = r.monomial_fail_degree < 0;
    return r;
}

InidReport verify_inid_step(const LinkageStep& step, GroebnerOracle& oracle, int dmax)
{
    InidReport r = verify_inid_monomial(step, dmax);
    if (!r.precondition_ok) return r;
    const auto& ambient = step.c.ambient();
    auto oracle_ideal = [&](const LadderInstance& l) {
        return MonomialIdeal(oracle.get(l).leading, ambient);
    };
    const MonomialIdeal in_j = oracle_ideal(step.instance);
    const MonomialIdeal in_i = oracle_ideal(step.reduced);
    const MonomialIdeal in_n = oracle_ideal(step.middle);
    r.oracle_fail_degree =
        first_failure(hilbert_function(in_n, dmax), hilbert_function(in_i, dmax), hilbert_function(in_j, dmax));
    r.oracle_identity = r.oracle_fail_degree < 0;
    r.c_in_initial = in_j.contains(step.c);
    return r;
}

// ---- family report ----

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

Status parse_status(const std::string& s)
{
    if (s == "PASS") return Status::Pass;
    if (s == "FAIL") return Status::Fail;
    if (s == "SKIPPED") return Status::Skipped;
    throw std::invalid_argument("unknown status '" + s + "'");
}

bool FamilyReport::passed() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Pass; });
}

bool FamilyReport::budget_exhausted() const
{
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Skipped; });
}

const CheckResult* FamilyReport::check(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

int default_dmax(const LadderInstance& inst)
{
    std::uint32_t deg = 0;
    for (const auto& g : natural_generators(inst).polys) deg = std::max(deg, g.degree());
    return 2 * static_cast<int>(deg) + 2;
}

FamilyReport verify_family(const LadderInstance& inst, const TermOrder& order, const VerifyOptions& opts)
{
    require_valid(inst);
    FamilyReport rep;
    rep.instance = inst;
    rep.order = order.kind();
    rep.field = opts.field;
    rep.dmax = opts.dmax >= 0 ? opts.dmax : default_dmax(inst);
    rep.assumptions.push_back("generically Gorenstein (G0) side conditions of the biliaisons are not checked");
    rep.assumptions.push_back("the isomorphism J/N = [I/N](-1) is checked only through its Hilbert function");
    if (!order_matches_family(inst.family, order.kind()))
        rep.warnings.push_back("no claim is made for " + to_string(inst.family) + " under the " +
                               to_string(order.kind()) + " order");

    const auto gens = natural_generators(inst);
    rep.generator_count = gens.size();
    const auto ambient = ladder_variables(inst);
    const MonomialIdeal in_ideal = initial_ideal(inst, order, ambient);
    GroebnerOracle oracle(order, opts);
    ComplexBudget budget{opts.max_faces, 0};

    auto run = [&](const std::string& id, const std::string& name, const std::function<CheckResult()>& fn) {
        CheckResult c;
        try {
            c = fn();
        } catch (const BudgetExceeded& e) {
            c.status = Status::Skipped;
            c.detail = e.what();
        }
        c.id = id;
        c.name = name;
        rep.checks.push_back(c);
    };
    auto verdict = [](bool ok, std::string detail) { return CheckResult{"", "", ok ? Status::Pass : Status::Fail, std::move(detail)}; };

    run("a", "natural generators form a reduced Groebner basis", [&] {
        const auto& e = oracle.get(inst);
        return verdict(e.natural_reduced, std::to_string(gens.size()) + " generators");
    });
    run("b", "Buchberger oracle returns the natural generators", [&] {
        const auto& e = oracle.get(inst);
        return verdict(e.fixed_point, "reduced basis has " + std::to_string(e.basis_size) + " elements, " +
                                          std::to_string(e.pairs_reduced) + " S-pairs reduced");
    });
    run("c", "initial ideal is squarefree", [&] {
        return verdict(in_ideal.is_squarefree(), std::to_string(in_ideal.size()) + " minimal generators");
    });

    rep.height = height_formula(inst);
    std::optional<SimplicialComplex> delta;
    run("d", "codimension equals the height formula", [&] {
        delta = from_squarefree(in_ideal, &budget);
        rep.codimension = delta->codimension();
        return verdict(rep.codimension == rep.height, "codim " + std::to_string(rep.codimension) + ", formula " +
                                                          std::to_string(rep.height));
    });

    rep.chain = build_chain(inst, order);
    std::vector<Var> preferred;
    for (const auto& s : rep.chain.steps)
        if (std::find(preferred.begin(), preferred.end(), s.f) == preferred.end()) preferred.push_back(s.f);

    run("e", "vertex decomposable", [&] {
        if (!delta) delta = from_squarefree(in_ideal, &budget);
        auto vd = is_vertex_decomposable(*delta, preferred, &budget);
        rep.vd = vd.certificate;
        if (!vd.decomposable)
            return verdict(false, "no shedding order found" + (vd.trace.empty() ? "" : " at " + vd.trace.front()));
        std::string why;
        if (!replay_certificate(*delta, *vd.certificate, &why)) return verdict(false, "certificate replay: " + why);
        for (const auto& s : rep.chain.steps) {
            auto dc = from_squarefree(s.c, &budget);
            if (!check_shedding(dc, s.f))
                return verdict(false, var_name(s.f) + " is not a shedding vertex for " + s.instance.key());
        }
        return verdict(true, "certificate replayed; constructive vertex sheds at all " +
                                 std::to_string(rep.chain.steps.size()) + " steps");
    });

    run("f", "Hilbert identity at every step", [&] {
        std::string detail;
        bool ok = true;
        for (const auto& s : rep.chain.steps) {
            auto r = verify_inid_step(s, oracle, rep.dmax);
            if (!r.ok() && ok) {
                ok = false;
                detail = s.instance.key() + ": " +
                         (!r.precondition_ok ? r.precondition_error
                          : !r.monomial_identity ? "monomial identity fails at d = " + std::to_string(r.monomial_fail_degree)
                          : !r.oracle_identity   ? "oracle identity fails at d = " + std::to_string(r.oracle_fail_degree)
                                                 : "C not inside in(J)");
            }
            rep.steps.push_back(std::move(r));
        }
        for (const auto& t : rep.chain.terminals) rep.steps.push_back(terminal_report(t));
        if (ok) detail = std::to_string(rep.chain.steps.size()) + " steps, d <= " + std::to_string(rep.dmax);
        return verdict(ok, detail);
    });

    run("g", "chain structure", [&] {
        if (!rep.chain.connected()) return verdict(false, "chain is not connected");
        if (!rep.chain.terminals_linear()) return verdict(false, "a terminal instance is not generated by variables");
        for (const auto& s : rep.chain.steps) {
            if (s.structure_ok()) continue;
            std::string why = !s.decomposition_ok ? "in(L) != in(M) + f in(L')"
                              : !s.f_outside_a    ? "f occurs in in(M)"
                              : !s.colon_stable   ? "A : f != A"
                              : !s.a_in_b         ? "A not inside B"
                                                  : "height does not drop by one";
            return verdict(false, s.instance.key() + ": " + why);
        }
        return verdict(true, std::to_string(rep.chain.steps.size()) + " steps, " +
                                 std::to_string(rep.chain.terminals.size()) + " terminal instances");
    });
    run("h", "natural generators form a Groebner basis", [&] {
        const auto& e = oracle.get(inst);
        const bool same = MonomialIdeal(e.leading, ambient) == in_ideal;
        return verdict(same, same ? "in(I) is generated by the leading terms"
                                  : "the oracle basis has leading terms outside ideal(in(G))");
    });
    return rep;
}

// ---- localization ----

namespace {

Var pivot_var(const Cell& c) { return make_var(c.first, c.second); }

Polynomial<Rational> var_poly(Var v) { return Polynomial<Rational>::variable(v, Rational(1)); }

Polynomial<Rational> pivot_power(Var p, std::uint32_t e)
{
    return e == 0 ? Polynomial<Rational>(Monomial{}, Rational(1)) : Polynomial<Rational>(Monomial(p, e), Rational(1));
}

Fraction reduce(Fraction f, Var p)
{
    while (f.power > 0 && !f.num.is_zero()) {
        bool divisible = std::all_of(f.num.terms().begin(), f.num.terms().end(),
                                     [&](const auto& t) { return t.first.contains(p); });
        if (!divisible) break;
        std::vector<Polynomial<Rational>::Term> ts;
        for (const auto& [m, c] : f.num.terms()) ts.emplace_back(m / Monomial(p), c);
        f.num = Polynomial<Rational>::from_terms(std::move(ts));
        --f.power;
    }
    if (f.num.is_zero()) f.power = 0;
    return f;
}

} // namespace

Fraction LocalizationMap::image(Var x) const
{
    if (!std::binary_search(affected.begin(), affected.end(), x)) return {var_poly(x), 0};
    const auto [u, v] = pivot;
    const Var p = pivot_var(pivot);
    const Polynomial<Rational> correction = var_poly(make_var(var_row(x), v)) * var_poly(make_var(u, var_col(x)));
    const Polynomial<Rational> main = var_poly(x) * var_poly(p);
    return {direction == Direction::Phi ? main + correction : main - correction, 1};
}

Fraction LocalizationMap::apply(const Polynomial<Rational>& poly) const
{
    const Var p = pivot_var(pivot);
    std::vector<Fraction> parts;
    std::uint32_t top = 0;
    for (const auto& [m, c] : poly.terms()) {
        Fraction t{Polynomial<Rational>(Monomial{}, c), 0};
        for (const auto& [x, e] : m.entries()) {
            const Fraction img = image(x);
            for (std::uint32_t k = 0; k < e; ++k) {
                t.num *= img.num;
                t.power += img.power;
            }
        }
        top = std::max(top, t.power);
        parts.push_back(std::move(t));
    }
    Fraction out{{}, top};
    for (const auto& t : parts) out.num += t.num * pivot_power(p, top - t.power);
    return reduce(std::move(out), p);
}

Fraction LocalizationMap::apply(const Fraction& f) const
{
    // the pivot variable is fixed by both maps
    Fraction inner = apply(f.num);
    inner.power += f.power;
    return reduce(std::move(inner), pivot_var(pivot));
}

LocalizationData localization_maps(const LadderInstance& inst, Cell pivot)
{
    require_valid(inst);
    if (inst.family != Family::OneSided) throw LocalizationError("localization maps need a one-sided ladder");
    const auto [u, v] = pivot;
    std::vector<std::size_t> containing;
    for (std::size_t k = 0; k < inst.points.size(); ++k)
        if (u <= inst.points[k].first && v >= inst.points[k].second) containing.push_back(k);
    if (containing.empty())
        throw LocalizationError("cell (" + std::to_string(u) + "," + std::to_string(v) + ") is not in the ladder");
    LocalizationData d;
    d.first = containing.front();
    d.last = containing.back();
    for (std::size_t k = d.first; k <= d.last; ++k) {
        if (std::find(containing.begin(), containing.end(), k) == containing.end())
            throw LocalizationError("regions containing the cell are not consecutive");
        if (inst.t[k] < 2)
            throw LocalizationError("t_" + std::to_string(k + 1) + " = " + std::to_string(inst.t[k]) +
                                    " < 2 for a region containing the cell");
    }

    std::vector<Var> affected;
    for (std::size_t k = d.first; k <= d.last; ++k) {
        auto [a, b] = inst.points[k];
        for (int i = 1; i <= a; ++i)
            for (int j = b; j <= inst.n; ++j)
                if (i != u && j != v) affected.push_back(make_var(i, j));
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    d.phi = {LocalizationMap::Direction::Phi, pivot, affected};
    d.psi = {LocalizationMap::Direction::Psi, pivot, affected};

    const MatrixShape shape = inst.shape();
    std::set<std::string> seen;
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        auto [a, b] = inst.points[k];
        const bool hit = k >= d.first && k <= d.last;
        d.hat_points.push_back(hit ? Cell{a - 1, b + 1} : Cell{a, b});
        d.r.push_back(hit ? inst.t[k] - 1 : inst.t[k]);
        std::vector<int> rows, cols;
        for (int i = 1; i <= a; ++i)
            if (!hit || i != u) rows.push_back(i);
        for (int j = b; j <= inst.n; ++j)
            if (!hit || j != v) cols.push_back(j);
        const int size = d.r.back();
        std::function<void(std::size_t, std::vector<int>&, const std::vector<int>&, const std::function<void(const std::vector<int>&)>&)>
            choose = [&](std::size_t from, std::vector<int>& cur, const std::vector<int>& pool,
                         const std::function<void(const std::vector<int>&)>& fn) {
                if (static_cast<int>(cur.size()) == size) {
                    fn(cur);
                    return;
                }
                for (std::size_t x = from; x < pool.size(); ++x) {
                    cur.push_back(pool[x]);
                    choose(x + 1, cur, pool, fn);
                    cur.pop_back();
                }
            };
        std::vector<int> rs, cs;
        choose(0, rs, rows, [&](const std::vector<int>& rsel) {
            choose(0, cs, cols, [&](const std::vector<int>& csel) {
                auto g = minor(shape, rsel, csel);
                if (!g.is_zero() && seen.insert(g.to_string()).second) d.hat_generators.push_back(std::move(g));
            });
        });
    }
    return d;
}

bool LocalizationReport::ok() const
{
    auto all = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.second; }); };
    return inverse_ok && all(forward) && all(backward);
}

namespace {

template <typename Scalar>
std::vector<bool> saturated_membership(const std::vector<Polynomial<Rational>>& ideal,
                                       const std::vector<Polynomial<Rational>>& candidates, Var pivot,
                                       const TermOrder& order, const Scalar& one, const VerifyOptions& opts)
{
    const Var y = make_var(0, 1);
    const TermOrder ext = order.with_auxiliary(y);
    auto gens = embed(ideal, one);
    gens.push_back(Polynomial<Scalar>(Monomial{{y, 1}, {pivot, 1}}, one) - Polynomial<Scalar>(Monomial{}, one));
    BuchbergerOptions bo;
    bo.max_spairs = opts.max_spairs;
    const auto basis = buchberger_reduced(gens, ext, bo);
    std::vector<bool> out;
    for (const auto& c : candidates) out.push_back(normal_form(embed(c, one), basis, ext).is_zero());
    return out;
}

} // namespace

LocalizationReport verify_localization(const LadderInstance& inst, Cell pivot, const VerifyOptions& opts)
{
    const LocalizationData d = localization_maps(inst, pivot);
    const TermOrder order = family_order(inst);
    const Var p = pivot_var(pivot);
    LocalizationReport rep;

    rep.inverse_ok = true;
    for (Var x : ladder_variables(inst)) {
        const Fraction back = d.psi.apply(d.phi.apply(var_poly(x)));
        if (!(back.power == 0 && back.num == var_poly(x))) rep.inverse_ok = false;
    }

    const auto gens = natural_generators(inst).polys;
    std::vector<Polynomial<Rational>> fwd, bwd;
    for (const auto& g : gens) fwd.push_back(d.phi.apply(g).num);
    for (const auto& h : d.hat_generators) bwd.push_back(d.psi.apply(h).num);

    auto fwd_ok = with_field(opts.field, [&](const auto& one) {
        return saturated_membership(d.hat_generators, fwd, p, order, one, opts);
    });
    auto bwd_ok = with_field(opts.field, [&](const auto& one) {
        return saturated_membership(gens, bwd, p, order, one, opts);
    });
    for (std::size_t k = 0; k < gens.size(); ++k) rep.forward.emplace_back(gens[k].to_string(order), fwd_ok[k]);
    for (std::size_t k = 0; k < d.hat_generators.size(); ++k)
        rep.backward.emplace_back(d.hat_generators[k].to_string(order), bwd_ok[k]);
    return rep;
}

} // namespace lgb
