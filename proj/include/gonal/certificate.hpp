// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_CERTIFICATE_HPP
#define GONAL_CERTIFICATE_HPP

#include <json.hpp>
#include <string>

#include "gonal/curve.hpp"

namespace gonal {

using Json = nlohmann::ordered_json;

/// Splits a prime power q = p^n; BadInput if q is not one.
std::pair<uint32_t, uint32_t> prime_power_split(uint64_t q);

struct ConstructParams {
    uint64_t q = 2;
    uint64_t gamma = 2;
    int count = 1;
    int max_k = 2;
    uint64_t seed = kDefaultSeed;
    uint64_t budget = 10000;
    int jobs = 1;
    int search_cap = kDefaultSearchCap;
};

struct ConstructResult {
    Field field;
    std::vector<CurveData> curves;
    Json certificate;
};

/// Runs the whole pipeline and assembles the certificate document. Key order
/// is fixed; rendering the document is byte-stable for fixed inputs.
ConstructResult run_construct(const ConstructParams& params);

/// Canonical text form (what cmd_construct writes).
std::string certificate_text(const Json& doc);

struct VerifyResult {
    bool ok = true;
    std::string failed_check;  // name of the first failing check
    std::string detail;
};

/// Recomputes every claim from the construction parameters in the file and
/// compares; trusts nothing else. Throws MalformedCertificate when the
/// document cannot be interpreted at all.
VerifyResult verify_certificate(const Json& doc, const CountOptions& opts = {});

// serialization helpers shared with the CLI
Json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const Field& f, const Json& j);
Json point_to_json(const ClosedPoint& pt);
ClosedPoint point_from_json(const Field& f, const Json& j);
Json pointset_to_json(const PointSet& pts);
Json spec_to_json(const CoverSpec& spec);
CoverSpec spec_from_json(const Field& f, const Json& j);

}  // namespace gonal

#endif  // GONAL_CERTIFICATE_HPP
