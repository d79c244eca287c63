// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <functional>

#include "gonal/certificate.hpp"

using namespace gonal;

namespace {

ConstructParams params22() {
    ConstructParams p;
    p.q = 2;
    p.gamma = 2;
    p.count = 2;
    p.max_k = 2;
    return p;
}

}  // namespace

TEST_CASE("prime_power_split") {
    CHECK(prime_power_split(2) == std::pair<uint32_t, uint32_t>{2, 1});
    CHECK(prime_power_split(9) == std::pair<uint32_t, uint32_t>{3, 2});
    CHECK(prime_power_split(32) == std::pair<uint32_t, uint32_t>{2, 5});
    CHECK_THROWS_AS(prime_power_split(6), Error);
    CHECK_THROWS_AS(prime_power_split(1), Error);
}

TEST_CASE("construct then verify round-trips") {
    const ConstructResult r = run_construct(params22());
    CHECK(verify_certificate(r.certificate).ok);

    // determinism, down to the byte
    const ConstructResult r2 = run_construct(params22());
    CHECK(certificate_text(r.certificate) == certificate_text(r2.certificate));

    // text round-trip parses back to the same document
    const Json reparsed = Json::parse(certificate_text(r.certificate));
    CHECK(reparsed == r.certificate);
    CHECK(verify_certificate(reparsed).ok);
}

TEST_CASE("certificate carries the expected golden content for (2,2)") {
    const ConstructResult r = run_construct(params22());
    const Json& c = r.certificate;
    CHECK(c.at("q") == 2);
    CHECK(c.at("gamma") == 2);
    CHECK(c.at("seed") == kDefaultSeed);
    CHECK(c.at("h").at("a") == Json::array({1, 1, 0, 1}));
    CHECK(c.at("curves").at(0).at("counts").at("1") == "6");
    CHECK(c.at("curves").at(0).at("genus") == 2);
    CHECK(c.at("curves").at(1).at("genus") == 8);
    for (const auto& curve : c.at("curves"))
        for (const auto& [name, value] : curve.at("checks").items()) {
            (void)name;
            if (value.is_boolean()) CHECK(value.get<bool>());
        }
}

TEST_CASE("single-field tampers are caught with the right diagnostic") {
    const Json base = run_construct(params22()).certificate;

    auto tampered = [&](const std::function<void(Json&)>& mutate) {
        Json doc = base;
        mutate(doc);
        return verify_certificate(doc);
    };

    VerifyResult r = tampered([](Json& d) { d["curves"][0]["counts"]["1"] = "7"; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "count_target");

    r = tampered([](Json& d) { d["curves"][0]["genus"] = 3; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "genus_crosscheck");

    r = tampered([](Json& d) { d["curves"][0]["genus_hurwitz"] = 3; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "genus_crosscheck");

    r = tampered([](Json& d) { d["curves"][1]["counts"]["2"] = "12"; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "counts");

    r = tampered([](Json& d) { d["covers"][0]["genus"] = 1; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "cover_genus");

    r = tampered([](Json& d) { d["covers"][0]["modulus"]["e"] = 1; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "cover_modulus");

    r = tampered([](Json& d) { d["covers"][0]["spec"]["pi"] = Json::array({1, 1}); });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "cover_canonical");

    r = tampered([](Json& d) { d["h"]["a"] = Json::array({1, 1, 1, 1}); });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "h_canonical");

    r = tampered([](Json& d) { d["h"]["branch"][0]["poly"] = Json::array({0, 1}); });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "h_branch");

    r = tampered([](Json& d) { d["curves"][0]["u_factors"][0]["num"] = Json::array({1, 1}); });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "u_factors");

    r = tampered([](Json& d) { d["curves"][0]["checks"]["gonality"] = false; });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "checks_flags");

    r = tampered([](Json& d) { d["covers"][0]["branch_points"][0]["poly"] = Json::array({1, 1, 1}); });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "branch_disjoint");

    r = tampered([](Json& d) { d["modulus"] = Json::array({1, 1}); });
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "field_modulus");
}

TEST_CASE("malformed certificates are rejected as malformed, not as mismatches") {
    const Json base = run_construct(params22()).certificate;

    Json no_version = base;
    no_version.erase("version");
    CHECK_THROWS_AS(verify_certificate(no_version), Error);

    Json bad_q = base;
    bad_q["q"] = 6;
    CHECK_THROWS_AS(verify_certificate(bad_q), Error);

    Json bad_counts = base;
    bad_counts["curves"][0]["counts"]["1"] = "six";
    CHECK_THROWS_AS(verify_certificate(bad_counts), Error);

    try {
        verify_certificate(bad_q);
    } catch (const Error& e) {
        CHECK(e.code() == Err::MalformedCertificate);
    }
}

TEST_CASE("composite cover certificates round-trip too") {
    ConstructParams p;
    p.q = 4;
    p.gamma = 6;
    p.count = 1;
    p.max_k = 2;
    const ConstructResult r = run_construct(p);
    CHECK(r.certificate.at("covers").at(0).at("spec").at("type") == "composite");
    CHECK(verify_certificate(r.certificate).ok);
    const CoverSpec spec =
        spec_from_json(r.field, r.certificate.at("covers").at(0).at("spec"));
    CHECK(spec.degree() == 6);
}
