// Command line front end: lgb <subcommand> <file> [options]
//
// exit codes: 0 all checks pass, 1 a claim check failed, 2 input error,
// 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lgb/groebner.hpp"
#include "lgb/ideal_families.hpp"
#include "lgb/linkage.hpp"
#include "lgb/serialize.hpp"

namespace {

using namespace lgb;

enum Exit { kPass = 0, kClaimFailed = 1, kInputError = 2, kBudget = 3 };

struct RunConfig {
    std::string command;
    std::string path;
    std::string order;
    int dmax = -1;
    std::string field = "q";
    std::size_t budget_spairs = 0;
    std::size_t budget_faces = 0;
    std::string out;
    bool json_output = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

class Session {
public:
    explicit Session(const RunConfig& cfg) : cfg_(cfg)
    {
        opts_.field = FieldSpec::parse(cfg.field);
        opts_.dmax = cfg.dmax;
        opts_.max_spairs = cfg.budget_spairs;
        opts_.max_faces = cfg.budget_faces;
    }

    int run()
    {
        const std::string& c = cfg_.command;
        if (c == "replay") return replay_cmd();
        load();
        if (c == "validate") return validate_cmd();
        require_valid(inst_);
        if (c == "generators") return generators_cmd();
        if (c == "groebner-check") return groebner_cmd();
        if (c == "initial") return initial_cmd();
        if (c == "height") return height_cmd();
        if (c == "vd") return vd_cmd();
        if (c == "chain") return chain_cmd();
        if (c == "verify") return verify_cmd();
        throw InputError("unknown subcommand '" + c + "'");
    }

private:
    void load()
    {
        inst_ = instance_from_json(read_json(cfg_.path));
        const OrderKind kind = cfg_.order.empty() ? default_order(inst_.family) : parse_order_kind(cfg_.order);
        order_.emplace(family_order(inst_, kind));
        if (!order_matches_family(inst_.family, kind))
            std::cerr << "warning: no claim is made for " << to_string(inst_.family) << " under the "
                      << to_string(kind) << " order\n";
    }

    const TermOrder& order() const { return *order_; }

    int emit(json doc, const std::string& text, int code)
    {
        if (!cfg_.out.empty()) {
            std::ofstream out(cfg_.out);
            if (!out) throw InputError("cannot write '" + cfg_.out + "'");
            out << doc.dump(2) << '\n';
        }
        if (cfg_.json_output) std::cout << doc.dump(2) << '\n';
        else std::cout << text;
        return code;
    }

    static const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

    json base_doc() const
    {
        return {{"schema", kReportSchema}, {"command", cfg_.command}, {"instance", to_json(inst_)},
                {"order", to_string(order().kind())}, {"field", opts_.field.to_string()}};
    }

    int validate_cmd()
    {
        json doc = base_doc();
        std::ostringstream os;
        std::vector<std::string> notes;
        if (auto d = validate(inst_)) {
            doc["valid"] = false;
            doc["diagnostic"] = {{"condition", d->condition}, {"detail", d->detail}};
            std::cerr << "invalid ladder: " << d->message() << '\n';
            os << "INVALID " << inst_.key() << ": " << d->message() << '\n';
            return emit(doc, os.str(), kInputError);
        }
        const LadderInstance norm = normalize(inst_, &notes);
        doc["valid"] = true;
        doc["normalized"] = to_json(norm);
        doc["normalization_notes"] = notes;
        os << "VALID " << inst_.key() << '\n';
        for (const auto& n : notes) os << "  note: " << n << '\n';
        return emit(doc, os.str(), kPass);
    }

    int generators_cmd()
    {
        const auto gens = natural_generators(inst_);
        json doc = base_doc();
        json list = json::array();
        std::ostringstream os;
        os << gens.size() << " generators of " << inst_.key() << '\n';
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const std::string p = gens.polys[k].to_string(order());
            list.push_back({{"polynomial", p}, {"provenance", gens.provenance[k].to_string()}});
            os << "  [" << gens.provenance[k].to_string() << "] " << p << '\n';
        }
        doc["generators"] = list;
        return emit(doc, os.str(), kPass);
    }

    int groebner_cmd()
    {
        GroebnerOracle oracle(order(), opts_);
        const auto& e = oracle.get(inst_);
        json doc = base_doc();
        doc["reduced_groebner"] = e.natural_reduced;
        doc["oracle_fixed_point"] = e.fixed_point;
        doc["basis_size"] = e.basis_size;
        doc["spairs_reduced"] = e.pairs_reduced;
        std::ostringstream os;
        os << mark(e.natural_reduced) << " (a) natural generators form a reduced Groebner basis\n"
           << mark(e.fixed_point) << " (b) Buchberger oracle returns the natural generators (" << e.basis_size
           << " elements)\n";
        return emit(doc, os.str(), e.natural_reduced && e.fixed_point ? kPass : kClaimFailed);
    }

    int initial_cmd()
    {
        const MonomialIdeal in = initial_ideal(inst_, order(), ladder_variables(inst_));
        json doc = base_doc();
        doc["initial_ideal"] = to_json(in);
        doc["squarefree"] = in.is_squarefree();
        std::ostringstream os;
        os << "in(I) = " << in.to_string() << '\n' << mark(in.is_squarefree()) << " squarefree\n";
        return emit(doc, os.str(), in.is_squarefree() ? kPass : kClaimFailed);
    }

    int height_cmd()
    {
        const MonomialIdeal in = initial_ideal(inst_, order(), ladder_variables(inst_));
        ComplexBudget budget{opts_.max_faces, 0};
        const int formula = height_formula(inst_);
        const int codim = from_squarefree(in, &budget).codimension();
        json doc = base_doc();
        doc["height_formula"] = formula;
        doc["codimension"] = codim;
        std::ostringstream os;
        os << mark(formula == codim) << " height formula " << formula << ", codimension " << codim << '\n';
        return emit(doc, os.str(), formula == codim ? kPass : kClaimFailed);
    }

    int vd_cmd()
    {
        const MonomialIdeal in = initial_ideal(inst_, order(), ladder_variables(inst_));
        ComplexBudget budget{opts_.max_faces, 0};
        const auto chain = build_chain(inst_, order());
        std::vector<Var> preferred;
        for (const auto& s : chain.steps) preferred.push_back(s.f);
        const auto delta = from_squarefree(in, &budget);
        const auto res = is_vertex_decomposable(delta, preferred, &budget);
        json doc = base_doc();
        doc["vertex_decomposable"] = res.decomposable;
        doc["certificate"] = res.certificate ? to_json(*res.certificate) : json(nullptr);
        doc["trace"] = res.trace;
        std::ostringstream os;
        os << mark(res.decomposable) << " vertex decomposable (" << delta.facets().size() << " facets, dim "
           << delta.dim() << ")\n";
        if (res.certificate) os << to_json(*res.certificate).dump() << '\n';
        return emit(doc, os.str(), res.decomposable ? kPass : kClaimFailed);
    }

    int chain_cmd()
    {
        ComplexBudget budget{opts_.max_faces, 0};
        CertificateDocument d;
        d.chain = build_chain(inst_, order());
        d.dmax = opts_.dmax >= 0 ? opts_.dmax : default_dmax(inst_);
        d.root_ideal = initial_ideal(inst_, order(), ladder_variables(inst_));
        std::vector<Var> preferred;
        for (const auto& s : d.chain.steps) preferred.push_back(s.f);
        d.vd = is_vertex_decomposable(from_squarefree(d.root_ideal, &budget), preferred, &budget).certificate;

        bool ok = d.chain.connected() && d.chain.terminals_linear() && d.vd != nullptr;
        std::ostringstream os;
        os << "chain for " << inst_.key() << ": " << d.chain.steps.size() << " steps, " << d.chain.terminals.size()
           << " terminal instances\n";
        for (const auto& s : d.chain.steps) {
            ok = ok && s.structure_ok();
            os << "  " << mark(s.structure_ok()) << ' ' << s.instance.key() << "  f = " << var_name(s.f)
               << "  L' = " << s.reduced.key() << "  M = " << s.middle.key() << '\n';
        }
        return emit(to_json(d), os.str(), ok ? kPass : kClaimFailed);
    }

    int verify_cmd()
    {
        const FamilyReport rep = verify_family(inst_, order(), opts_);
        std::ostringstream os;
        os << "verify " << inst_.key() << " (" << to_string(order().kind()) << ", " << opts_.field.to_string()
           << ", d <= " << rep.dmax << ")\n";
        for (const auto& c : rep.checks)
            os << to_string(c.status) << " (" << c.id << ") " << c.name << ": " << c.detail << '\n';
        for (const auto& a : rep.assumptions) os << "assumed: " << a << '\n';
        const int code = rep.passed() ? kPass : rep.budget_exhausted() ? kBudget : kClaimFailed;
        return emit(to_json(rep), os.str(), code);
    }

    int replay_cmd()
    {
        const json doc = read_json(cfg_.path);
        const ReplayResult r = replay(doc);
        json out = {{"schema", kReportSchema}, {"command", "replay"}, {"steps_checked", r.steps_checked},
                    {"failures", r.failures}, {"ok", r.ok()}};
        std::ostringstream os;
        os << mark(r.ok()) << " replay of " << cfg_.path << " (" << r.steps_checked << " steps)\n";
        for (const auto& f : r.failures) os << "  " << f << '\n';
        return emit(out, os.str(), r.ok() ? kPass : kClaimFailed);
    }

    RunConfig cfg_;
    VerifyOptions opts_;
    LadderInstance inst_;
    std::optional<TermOrder> order_;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ladder determinantal and pfaffian ideals: generators, Groebner bases, linkage chains"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check the ladder conditions"},
        {"generators", "list the natural generators"},
        {"groebner-check", "reduced Groebner basis and oracle fixed point"},
        {"initial", "minimal initial ideal and squarefree flag"},
        {"height", "height formula against the codimension"},
        {"vd", "vertex decomposability with certificate"},
        {"chain", "linkage certificate"},
        {"verify", "full report"},
        {"replay", "re-check a certificate or report file"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", cfg.path, name == "replay" ? "certificate or report JSON" : "instance JSON")
            ->required();
        sub->add_option("--order", cfg.order, "diag|antidiag (default depends on the family)")
            ->check(CLI::IsMember({"diag", "antidiag"}));
        sub->add_option("--dmax", cfg.dmax, "largest degree for the Hilbert checks")->check(CLI::NonNegativeNumber);
        sub->add_option("--field", cfg.field, "q or gf:P");
        sub->add_option("--budget-spairs", cfg.budget_spairs, "S-pair budget per Groebner computation")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget-faces", cfg.budget_faces, "facet and search-node budget")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "write the JSON report here");
        sub->add_flag("--json", cfg.json_output, "print JSON instead of text");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        return Session(cfg).run();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const InvalidLadder& e) {
        std::cerr << "invalid ladder: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
