#pragma once

#include <json.hpp>

#include "qstab/disc.hpp"
#include "qstab/gen.hpp"
#include "qstab/hn.hpp"
#include "qstab/kempf.hpp"

namespace qstab {

using json = nlohmann::json;

// Instance document:
// {"quiver":{"vertices":[...],"arrows":[{"id","tail","head"},...]},
//  "dims":{v:int},"maps":{arrowId:[["p/q",...],...]},
//  "theta":{v:int},"kappa":{v:int}}
Instance parse_instance(const json& j);
json instance_to_json(const Instance& inst);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j, int rows, int cols);

json certificate_to_json(const ShrunkCertificate& cert, const Weight& theta_used,
                         const Quiver& quiver, long scale);
struct ParsedCertificate {
    ShrunkCertificate cert;
    Weight theta;
    bool has_theta = false;
    long scale = 1;
};
ParsedCertificate certificate_from_json(const json& j, const Quiver* quiver);

// Command payloads (the CLI prints these verbatim, tests reuse them).
json check_output(const Instance& inst, uint64_t seed, const DiscOptions& opt = {});
json disc_output(const Instance& inst, uint64_t seed, const DiscOptions& opt = {});
json hn_output(const Instance& inst, uint64_t seed, const DiscOptions& opt = {});
json kempf_output(const Instance& inst, uint64_t seed, LimitConvention conv,
                  const DiscOptions& opt = {});
json oracle_output(const Instance& inst);
json verify_certificate_output(const Instance& inst, const json& cert_json);

std::string dump_deterministic(const json& j);

}  // namespace qstab
