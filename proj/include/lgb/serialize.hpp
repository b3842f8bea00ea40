#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lgb/complexes.hpp"
#include "lgb/ladders.hpp"
#include "lgb/linkage.hpp"
#include "lgb/monomial_ideal.hpp"

namespace lgb {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "lgb.report/1";
inline constexpr const char* kCertificateSchema = "lgb.certificate/1";

/// Thrown for JSON documents that do not match the expected schema.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json to_json(const LadderInstance& inst);
/// {"family", "n", "m"?, "corners"|"points", "t"}.
LadderInstance instance_from_json(const json& j);

Var parse_var(const std::string& s);
json to_json(const MonomialIdeal& a);
MonomialIdeal ideal_from_json(const json& j);

json to_json(const VDCertificate& c);
VDCertificate vd_from_json(const json& j);

json to_json(const LinkageStep& s);
LinkageStep step_from_json(const json& j);

/// Chain plus the root VD certificate and the degree bound used for replay.
struct CertificateDocument {
    LinkageCertificate chain;
    MonomialIdeal root_ideal;
    std::shared_ptr<const VDCertificate> vd;
    int dmax = 0;
};

json to_json(const CertificateDocument& d);
CertificateDocument certificate_from_json(const json& j);
CertificateDocument make_certificate_document(const FamilyReport& rep);

json to_json(const InidReport& r);
InidReport inid_from_json(const json& j);
json to_json(const CheckResult& c);
CheckResult check_from_json(const json& j);

json to_json(const FamilyReport& r);
FamilyReport report_from_json(const json& j);

struct ReplayResult {
    std::size_t steps_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Re-checks a serialized certificate (or a report containing one) from its
/// own data: C = A + f*B with A : f = A and A inside B, the Hilbert identity
/// up to dmax, the ideals agree between linked steps, the chain is connected
/// and the VD certificate replays on the root complex.
ReplayResult replay(const json& doc);

} // namespace lgb
