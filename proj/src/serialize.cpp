#include "lgb/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lgb/ideal_families.hpp"
#include "lgb/polynomial.hpp"

namespace lgb {

namespace {

template <typename T>
T field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

json cells_json(const std::vector<Cell>& cs)
{
    json a = json::array();
    for (const auto& [x, y] : cs) a.push_back({x, y});
    return a;
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms)
{
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.to_string());
    return out;
}

} // namespace

json to_json(const LadderInstance& inst)
{
    json j;
    j["family"] = to_string(inst.family);
    j["n"] = inst.n;
    switch (inst.family) {
    case Family::MaxMinors:
        j["m"] = inst.m;
        break;
    case Family::Pfaffian:
        j["corners"] = cells_json(inst.points);
        j["t"] = inst.t;
        break;
    case Family::Symmetric:
        j["points"] = cells_json(inst.points);
        j["t"] = inst.t;
        break;
    case Family::OneSided:
        j["m"] = inst.m;
        j["points"] = cells_json(inst.points);
        j["t"] = inst.t;
        break;
    }
    return j;
}

LadderInstance instance_from_json(const json& j)
{
    if (!j.is_object()) throw SchemaError("instance must be a JSON object");
    const Family fam = parse_family(field<std::string>(j, "family"));
    const int n = field<int>(j, "n");
    if (fam == Family::MaxMinors) {
        LadderInstance inst = LadderInstance::maxminors(field<int>(j, "m"), n);
        if (j.contains("t") && field<std::vector<int>>(j, "t") != inst.t)
            throw SchemaError("maxminors: t must be [m]");
        return inst;
    }
    const char* key = fam == Family::Pfaffian ? "corners" : "points";
    if (!j.contains(key) && j.contains(fam == Family::Pfaffian ? "points" : "corners"))
        key = fam == Family::Pfaffian ? "points" : "corners";
    std::vector<Cell> pts;
    for (const auto& p : field<std::vector<std::vector<int>>>(j, key)) {
        if (p.size() != 2) throw SchemaError(std::string("'") + key + "' entries must be pairs");
        pts.emplace_back(p[0], p[1]);
    }
    const auto t = field<std::vector<int>>(j, "t");
    switch (fam) {
    case Family::Pfaffian: return LadderInstance::pfaffian(n, pts, t);
    case Family::Symmetric: return LadderInstance::symmetric(n, pts, t);
    default: return LadderInstance::onesided(field<int>(j, "m"), n, pts, t);
    }
}

Var parse_var(const std::string& s)
{
    const Monomial m = parse_monomial(s);
    if (m.degree() != 1) throw SchemaError("'" + s + "' is not a variable");
    return m.entries().front().first;
}

json to_json(const MonomialIdeal& a)
{
    json amb = json::array();
    for (Var v : a.ambient()) amb.push_back(var_name(v));
    return {{"ambient", amb}, {"generators", monomial_strings(a.generators())}};
}

MonomialIdeal ideal_from_json(const json& j)
{
    std::vector<Var> amb;
    for (const auto& s : field<std::vector<std::string>>(j, "ambient")) amb.push_back(parse_var(s));
    std::vector<Monomial> gens;
    for (const auto& s : field<std::vector<std::string>>(j, "generators")) gens.push_back(parse_monomial(s));
    try {
        return MonomialIdeal(std::move(gens), std::move(amb));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const VDCertificate& c)
{
    switch (c.kind) {
    case VDCertificate::Kind::Empty: return "empty";
    case VDCertificate::Kind::Simplex: return "simplex";
    case VDCertificate::Kind::Node: break;
    }
    return {{"vertex", var_name(c.vertex)}, {"link", to_json(*c.link)}, {"deletion", to_json(*c.deletion)}};
}

VDCertificate vd_from_json(const json& j)
{
    VDCertificate c;
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "empty") c.kind = VDCertificate::Kind::Empty;
        else if (s == "simplex") c.kind = VDCertificate::Kind::Simplex;
        else throw SchemaError("unknown certificate leaf '" + s + "'");
        return c;
    }
    c.kind = VDCertificate::Kind::Node;
    c.vertex = parse_var(field<std::string>(j, "vertex"));
    if (!j.contains("link") || !j.contains("deletion")) throw SchemaError("certificate node needs link and deletion");
    c.link = std::make_shared<VDCertificate>(vd_from_json(j.at("link")));
    c.deletion = std::make_shared<VDCertificate>(vd_from_json(j.at("deletion")));
    return c;
}

json to_json(const LinkageStep& s)
{
    return {
        {"instance", to_json(s.instance)},
        {"reduced", to_json(s.reduced)},
        {"middle", to_json(s.middle)},
        {"f", var_name(s.f)},
        {"ell", s.ell},
        {"A", to_json(s.a)},
        {"B", to_json(s.b)},
        {"C", to_json(s.c)},
        {"notes", s.notes},
        {"checks",
         {{"decomposition", s.decomposition_ok},
          {"f_outside_A", s.f_outside_a},
          {"colon_stable", s.colon_stable},
          {"A_in_B", s.a_in_b},
          {"height_L", s.height_instance},
          {"height_M", s.height_middle}}},
    };
}

LinkageStep step_from_json(const json& j)
{
    LinkageStep s;
    s.instance = instance_from_json(field<json>(j, "instance"));
    s.reduced = instance_from_json(field<json>(j, "reduced"));
    s.middle = instance_from_json(field<json>(j, "middle"));
    s.f = parse_var(field<std::string>(j, "f"));
    s.ell = field<int>(j, "ell");
    s.a = ideal_from_json(field<json>(j, "A"));
    s.b = ideal_from_json(field<json>(j, "B"));
    s.c = ideal_from_json(field<json>(j, "C"));
    if (j.contains("notes")) s.notes = field<std::vector<std::string>>(j, "notes");
    const json c = field<json>(j, "checks");
    s.decomposition_ok = field<bool>(c, "decomposition");
    s.f_outside_a = field<bool>(c, "f_outside_A");
    s.colon_stable = field<bool>(c, "colon_stable");
    s.a_in_b = field<bool>(c, "A_in_B");
    s.height_instance = field<int>(c, "height_L");
    s.height_middle = field<int>(c, "height_M");
    return s;
}

json to_json(const CertificateDocument& d)
{
    json steps = json::array(), terms = json::array();
    for (const auto& s : d.chain.steps) steps.push_back(to_json(s));
    for (const auto& t : d.chain.terminals) terms.push_back(to_json(t));
    return {
        {"schema", kCertificateSchema},
        {"root", to_json(d.chain.root)},
        {"order", to_string(d.chain.order)},
        {"dmax", d.dmax},
        {"root_ideal", to_json(d.root_ideal)},
        {"steps", steps},
        {"terminals", terms},
        {"vd", d.vd ? to_json(*d.vd) : json(nullptr)},
    };
}

CertificateDocument certificate_from_json(const json& j)
{
    if (field<std::string>(j, "schema") != kCertificateSchema)
        throw SchemaError("unsupported certificate schema '" + field<std::string>(j, "schema") + "'");
    CertificateDocument d;
    d.chain.root = instance_from_json(field<json>(j, "root"));
    d.chain.order = parse_order_kind(field<std::string>(j, "order"));
    d.dmax = field<int>(j, "dmax");
    d.root_ideal = ideal_from_json(field<json>(j, "root_ideal"));
    for (const auto& s : field<json>(j, "steps")) d.chain.steps.push_back(step_from_json(s));
    for (const auto& t : field<json>(j, "terminals")) d.chain.terminals.push_back(instance_from_json(t));
    if (!j.at("vd").is_null()) d.vd = std::make_shared<VDCertificate>(vd_from_json(j.at("vd")));
    return d;
}

CertificateDocument make_certificate_document(const FamilyReport& rep)
{
    CertificateDocument d;
    d.chain = rep.chain;
    d.vd = rep.vd;
    d.dmax = rep.dmax;
    const auto ambient = ladder_variables(rep.instance);
    d.root_ideal = rep.chain.steps.empty() ? MonomialIdeal({}, ambient) : rep.chain.steps.front().c;
    if (rep.chain.steps.empty()) {
        const TermOrder order = family_order(rep.instance, rep.order);
        d.root_ideal = initial_ideal(rep.instance, order, ambient);
    }
    return d;
}

json to_json(const InidReport& r)
{
    return {
        {"instance", r.instance},
        {"terminal", r.terminal},
        {"precondition_ok", r.precondition_ok},
        {"precondition_error", r.precondition_error},
        {"dmax", r.dmax},
        {"monomial_identity", r.monomial_identity},
        {"monomial_fail_degree", r.monomial_fail_degree},
        {"oracle_identity", r.oracle_identity},
        {"oracle_fail_degree", r.oracle_fail_degree},
        {"C_in_initial", r.c_in_initial},
        {"H_A", r.h_a},
        {"H_B", r.h_b},
        {"H_C", r.h_c},
    };
}

InidReport inid_from_json(const json& j)
{
    InidReport r;
    r.instance = field<std::string>(j, "instance");
    r.terminal = field<bool>(j, "terminal");
    r.precondition_ok = field<bool>(j, "precondition_ok");
    r.precondition_error = field<std::string>(j, "precondition_error");
    r.dmax = field<int>(j, "dmax");
    r.monomial_identity = field<bool>(j, "monomial_identity");
    r.monomial_fail_degree = field<int>(j, "monomial_fail_degree");
    r.oracle_identity = field<bool>(j, "oracle_identity");
    r.oracle_fail_degree = field<int>(j, "oracle_fail_degree");
    r.c_in_initial = field<bool>(j, "C_in_initial");
    r.h_a = field<std::vector<std::uint64_t>>(j, "H_A");
    r.h_b = field<std::vector<std::uint64_t>>(j, "H_B");
    r.h_c = field<std::vector<std::uint64_t>>(j, "H_C");
    return r;
}

json to_json(const CheckResult& c)
{
    return {{"id", c.id}, {"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

CheckResult check_from_json(const json& j)
{
    return {field<std::string>(j, "id"), field<std::string>(j, "name"), parse_status(field<std::string>(j, "status")),
            field<std::string>(j, "detail")};
}

json to_json(const FamilyReport& r)
{
    json checks = json::array(), steps = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    return {
        {"schema", kReportSchema},
        {"instance", to_json(r.instance)},
        {"order", to_string(r.order)},
        {"field", r.field.to_string()},
        {"dmax", r.dmax},
        {"generator_count", r.generator_count},
        {"height", r.height},
        {"codimension", r.codimension},
        {"checks", checks},
        {"step_reports", steps},
        {"certificate", to_json(make_certificate_document(r))},
        {"assumptions", r.assumptions},
        {"warnings", r.warnings},
        {"verdict", r.passed() ? "PASS" : r.budget_exhausted() ? "BUDGET" : "FAIL"},
    };
}

FamilyReport report_from_json(const json& j)
{
    if (field<std::string>(j, "schema") != kReportSchema)
        throw SchemaError("unsupported report schema '" + field<std::string>(j, "schema") + "'");
    FamilyReport r;
    r.instance = instance_from_json(field<json>(j, "instance"));
    r.order = parse_order_kind(field<std::string>(j, "order"));
    r.field = FieldSpec::parse(field<std::string>(j, "field"));
    r.dmax = field<int>(j, "dmax");
    r.generator_count = field<std::size_t>(j, "generator_count");
    r.height = field<int>(j, "height");
    r.codimension = field<int>(j, "codimension");
    for (const auto& c : field<json>(j, "checks")) r.checks.push_back(check_from_json(c));
    for (const auto& s : field<json>(j, "step_reports")) r.steps.push_back(inid_from_json(s));
    auto cert = certificate_from_json(field<json>(j, "certificate"));
    r.chain = std::move(cert.chain);
    r.vd = cert.vd;
    r.assumptions = field<std::vector<std::string>>(j, "assumptions");
    r.warnings = field<std::vector<std::string>>(j, "warnings");
    return r;
}

ReplayResult replay(const json& doc)
{
    const json& cj = doc.is_object() && doc.contains("schema") && doc.at("schema") == kReportSchema
                         ? doc.at("certificate")
                         : doc;
    const CertificateDocument d = certificate_from_json(cj);
    ReplayResult res;
    auto fail = [&](const std::string& where, const std::string& what) { res.failures.push_back(where + ": " + what); };

    std::map<std::string, const LinkageStep*> by_key;
    std::set<std::string> terminal_keys;
    for (const auto& s : d.chain.steps) by_key.emplace(s.instance.key(), &s);
    for (const auto& t : d.chain.terminals) terminal_keys.insert(t.key());

    for (const auto& s : d.chain.steps) {
        const std::string where = s.instance.key();
        ++res.steps_checked;
        const Monomial f(s.f);
        if (s.ell != 1 || f.degree() != 1) fail(where, "link degree must be 1");
        if (!colon_stable(s.a, f)) fail(where, "A : f != A");
        if (!s.b.contains(s.a)) fail(where, "A is not inside B");
        const auto supp = s.a.support();
        if (std::binary_search(supp.begin(), supp.end(), s.f)) fail(where, "f occurs in A");
        if (!(sum(s.a, multiply(f, s.b)) == s.c)) fail(where, "C != A + f*B");
        if (s.a.is_squarefree() && s.b.is_squarefree() && s.c.is_squarefree()) {
            auto step_report = verify_inid_monomial(s, d.dmax);
            if (!step_report.ok())
                fail(where, "Hilbert identity fails at d = " + std::to_string(step_report.monomial_fail_degree));
        } else {
            fail(where, "ideals are not squarefree");
        }
        // the ideals must agree with the steps they link to
        for (const auto& [child, ideal, label] : {std::tuple{&s.middle, &s.a, "A"}, std::tuple{&s.reduced, &s.b, "B"}}) {
            const std::string key = child->key();
            if (auto it = by_key.find(key); it != by_key.end()) {
                if (!(it->second->c == *ideal)) fail(where, std::string(label) + " differs from the ideal of " + key);
            } else if (terminal_keys.count(key)) {
                for (const auto& g : ideal->generators())
                    if (g.degree() != 1) fail(where, std::string(label) + " of terminal " + key + " is not linear");
            } else {
                fail(where, key + " is neither a step nor terminal");
            }
        }
    }
    if (!d.chain.steps.empty() && !(d.chain.steps.front().c == d.root_ideal))
        fail("root", "root ideal differs from the first step");
    if (d.vd) {
        try {
            const auto delta = from_squarefree(d.root_ideal);
            std::string why;
            if (!replay_certificate(delta, *d.vd, &why)) fail("vd", why);
        } catch (const std::invalid_argument& e) {
            fail("vd", e.what());
        }
    } else {
        fail("vd", "no vertex decomposition certificate");
    }
    return res;
}

} // namespace lgb
