// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include "gonal/certificate.hpp"

#include <algorithm>
#include <cctype>

namespace gonal {

std::pair<uint32_t, uint32_t> prime_power_split(uint64_t q) {
    if (q < 2) fail(Err::BadInput, "q must be at least 2");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t n = 0;
    uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++n;
    }
    if (v != 1) fail(Err::BadInput, std::to_string(q) + " is not a prime power");
    return {static_cast<uint32_t>(p), n};
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

Json poly_to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.index());
    return arr;
}

UniPoly poly_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) fail(Err::MalformedCertificate, "polynomial must be an array");
    std::vector<FieldElement> c;
    for (const auto& v : j) {
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                       v.get<int64_t>() < 0))
            fail(Err::MalformedCertificate, "bad coefficient");
        const uint64_t idx = v.get<uint64_t>();
        if (idx >= f->order()) fail(Err::MalformedCertificate, "coefficient out of range");
        c.push_back(f->from_index(idx));
    }
    return UniPoly(f, std::move(c));
}

Json point_to_json(const ClosedPoint& pt) {
    if (pt.is_infinity()) return Json{{"inf", true}};
    return Json{{"poly", poly_to_json(pt.poly())}};
}

ClosedPoint point_from_json(const Field& f, const Json& j) {
    if (j.contains("inf")) return ClosedPoint::infinity(f);
    if (!j.contains("poly")) fail(Err::MalformedCertificate, "closed point needs inf or poly");
    return ClosedPoint::at(poly_from_json(f, j.at("poly")));
}

Json pointset_to_json(const PointSet& pts) {
    Json arr = Json::array();
    for (const auto& pt : pts) arr.push_back(point_to_json(pt));
    return arr;
}

Json spec_to_json(const CoverSpec& spec) {
    auto one = [](const CyclicFactor& f) {
        if (const auto* k = std::get_if<KummerFactor>(&f))
            return Json{{"type", "kummer"}, {"gamma", k->gamma}, {"pi", poly_to_json(k->pi)}};
        return Json{{"type", "artin_schreier"},
                    {"pi", poly_to_json(std::get<ArtinSchreierFactor>(f).pi)}};
    };
    if (!spec.is_composite()) return one(spec.factors.front());
    Json factors = Json::array();
    for (const auto& f : spec.factors) factors.push_back(one(f));
    return Json{{"type", "composite"}, {"factors", factors}};
}

namespace {

CyclicFactor factor_from_json(const Field& f, const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "kummer")
        return KummerFactor{j.at("gamma").get<uint32_t>(), poly_from_json(f, j.at("pi"))};
    if (type == "artin_schreier") return ArtinSchreierFactor{poly_from_json(f, j.at("pi"))};
    fail(Err::MalformedCertificate, "unknown factor type " + type);
}

}  // namespace

CoverSpec spec_from_json(const Field& f, const Json& j) {
    if (!j.is_object() || !j.contains("type"))
        fail(Err::MalformedCertificate, "cover spec must be a tagged object");
    CoverSpec spec;
    if (j.at("type").get<std::string>() == "composite") {
        for (const auto& fj : j.at("factors")) spec.factors.push_back(factor_from_json(f, fj));
    } else {
        spec.factors.push_back(factor_from_json(f, j));
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

Json ufactor_to_json(const UFactor& uf) {
    Json j;
    j["kind"] = uf.artin_schreier ? "artin_schreier" : "kummer";
    j["gamma"] = uf.gamma;
    j["num"] = poly_to_json(uf.u.num());
    j["den"] = poly_to_json(uf.u.den());
    return j;
}

Json curve_to_json(const CurveData& curve, uint64_t q, uint64_t gamma,
                   const CollapseMap& collapse) {
    Json j;
    Json ufs = Json::array();
    for (const auto& uf : curve.u_factors) ufs.push_back(ufactor_to_json(uf));
    j["u_factors"] = ufs;
    j["genus"] = curve.genus;
    const auto [hurwitz, acc] = genus_hurwitz(curve.cover, collapse);
    (void)acc;
    j["genus_hurwitz"] = hurwitz;

    Json counts = Json::object();
    for (const auto& [k, nk] : curve.counts) counts[std::to_string(k)] = std::to_string(nk);
    j["counts"] = counts;

    bool abs_ok = true;
    for (size_t i = 0; i < curve.u_factors.size(); ++i)
        abs_ok = abs_ok && abs_irreducible_cyclic(curve.cover.spec.factors[i],
                                                  curve.u_factors[i].u) == IrredCert::Certified;
    Json weil = Json::object();
    for (const auto& [k, nk] : curve.counts)
        weil[std::to_string(k)] = weil_consistency(nk, curve.genus, q, k);
    const int64_t n1 = curve.counts.at(1);
    Json checks;
    checks["collapse"] = verify_collapse(collapse.h, collapse.field);
    checks["branch_disjoint"] = branch_disjoint(curve.cover, collapse);
    checks["split_infty"] = verify_split_infty(curve.cover.spec);
    checks["abs_irreducible"] = abs_ok;
    checks["count_target"] =
        n1 == static_cast<int64_t>(gamma) * static_cast<int64_t>(q + 1);
    checks["weil"] = weil;
    checks["gonality"] = gonality_certificate(n1, gamma, q) == Gonality::Certified;
    j["checks"] = checks;
    return j;
}

}  // namespace

ConstructResult run_construct(const ConstructParams& params) {
    const auto [p, n] = prime_power_split(params.q);
    if (params.gamma < 2) fail(Err::BadInput, "gamma must be >= 2");
    if (params.count < 1) fail(Err::BadInput, "count must be >= 1");
    if (params.max_k < 1) fail(Err::BadInput, "max-k must be >= 1");
    set_factor_seed(params.seed);

    const Field field = create_field(p, n);
    SequenceOptions seq;
    seq.max_k = params.max_k;
    seq.count.budget = params.budget;
    seq.count.jobs = params.jobs;
    seq.search_cap = params.search_cap;
    std::vector<CurveData> curves = construct_sequence(field, params.gamma, params.count, seq);
    const CollapseMap& collapse = curves.front().collapse;

    Json cert;
    cert["version"] = "1";
    cert["q"] = params.q;
    cert["p"] = p;
    cert["n"] = n;
    cert["modulus"] = field->modulus();  // base-field serialization, constant-first
    cert["gamma"] = params.gamma;
    cert["seed"] = params.seed;
    cert["h"] = Json{{"a", poly_to_json(collapse.h.num())},
                     {"q", params.q},
                     {"branch", pointset_to_json(collapse.branch)}};

    Json covers = Json::array();
    for (const auto& curve : curves) {
        Json c;
        c["spec"] = spec_to_json(curve.cover.spec);
        c["degree"] = curve.cover.degree;
        c["genus"] = curve.cover.genus;
        c["branch_points"] = pointset_to_json(curve.cover.branch_points);
        c["modulus"] = Json{{"P", point_to_json(curve.cover.modulus_found.P)},
                            {"e", curve.cover.modulus_found.e}};
        covers.push_back(c);
    }
    cert["covers"] = covers;

    Json jcurves = Json::array();
    for (const auto& curve : curves)
        jcurves.push_back(curve_to_json(curve, params.q, params.gamma, collapse));
    cert["curves"] = jcurves;

    return ConstructResult{field, std::move(curves), std::move(cert)};
}

std::string certificate_text(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

struct CheckFailure {
    std::string name;
    std::string detail;
};

// throwing a dedicated type keeps verification flow linear
[[noreturn]] void check_fail(const std::string& name, const std::string& detail) {
    throw CheckFailure{name, detail};
}

void check(bool ok, const std::string& name, const std::string& detail) {
    if (!ok) check_fail(name, detail);
}

uint64_t get_u64(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        fail(Err::MalformedCertificate, std::string("missing or non-integer field ") + key);
    return j.at(key).get<uint64_t>();
}

int64_t get_i64(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        fail(Err::MalformedCertificate, std::string("missing or non-integer field ") + key);
    return j.at(key).get<int64_t>();
}

int parse_k(const std::string& key) {
    if (key.empty() || key.size() > 6 ||
        !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail(Err::MalformedCertificate, "bad extension index '" + key + "'");
    return std::stoi(key);
}

int64_t parse_count(const Json& v) {
    if (!v.is_string()) fail(Err::MalformedCertificate, "counts must be decimal strings");
    const std::string s = v.get<std::string>();
    if (s.empty() || s.size() > 18 ||
        !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail(Err::MalformedCertificate, "bad count value '" + s + "'");
    return std::stoll(s);
}

bool spec_equal(const CoverSpec& a, const CoverSpec& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i) {
        const auto& fa = a.factors[i];
        const auto& fb = b.factors[i];
        if (fa.index() != fb.index()) return false;
        if (factor_degree(fa) != factor_degree(fb)) return false;
        if (!(factor_pi(fa) == factor_pi(fb))) return false;
    }
    return true;
}

}  // namespace

VerifyResult verify_certificate(const Json& doc, const CountOptions& opts) {
    // -- parameter extraction; anything unusable here is a malformed file
    uint64_t q, gamma, seed;
    uint32_t p, n;
    try {
        if (!doc.is_object()) fail(Err::MalformedCertificate, "not a JSON object");
        if (!doc.contains("version") || doc.at("version").get<std::string>() != "1")
            fail(Err::MalformedCertificate, "unsupported certificate version");
        q = get_u64(doc, "q");
        gamma = get_u64(doc, "gamma");
        seed = get_u64(doc, "seed");
        p = static_cast<uint32_t>(get_u64(doc, "p"));
        n = static_cast<uint32_t>(get_u64(doc, "n"));
        const auto [pp, nn] = prime_power_split(q);
        if (pp != p || nn != n) fail(Err::MalformedCertificate, "p^n does not match q");
        if (gamma < 2) fail(Err::MalformedCertificate, "gamma < 2");
        if (!doc.contains("h") || !doc.contains("covers") || !doc.contains("curves") ||
            !doc.at("covers").is_array() || !doc.at("curves").is_array() ||
            doc.at("covers").size() != doc.at("curves").size() || doc.at("curves").empty())
            fail(Err::MalformedCertificate, "h/covers/curves sections missing or inconsistent");
    } catch (const Json::exception& e) {
        fail(Err::MalformedCertificate, e.what());
    }

    set_factor_seed(seed);
    const Field field = create_field(p, n);

    try {
        // -- base field serialization
        if (doc.contains("modulus")) {
            std::vector<uint32_t> stored;
            for (const auto& v : doc.at("modulus")) stored.push_back(v.get<uint32_t>());
            check(stored == field->modulus(), "field_modulus",
                  "stored modulus is not the canonical one for (p, n)");
        } else {
            check_fail("field_modulus", "missing base-field modulus");
        }

        // -- collapse map
        const Json& jh = doc.at("h");
        const UniPoly a_file = poly_from_json(field, jh.at("a"));
        const UniPoly a_canon = nth_irreducible(field, static_cast<int>(q) + 1, {});
        check(get_u64(jh, "q") == q && a_file == a_canon, "h_canonical",
              "stored numerator is not the canonical irreducible of degree q+1");

        const CollapseMap collapse = build_h(field);
        check(verify_collapse(collapse.h, field), "collapse", "collapse property fails");

        PointSet branch_file;
        for (const auto& bj : jh.at("branch")) branch_file.insert(point_from_json(field, bj));
        check(branch_file == collapse.branch, "h_branch", "stored branch locus is wrong");

        // -- covers, replaying the avoid-set iteration
        const size_t count = doc.at("covers").size();
        std::vector<CoverSpec> specs;
        PointSet avoid = collapse.branch;
        int min_deg = 1;
        for (size_t i = 0; i < count; ++i) {
            const Json& jc = doc.at("covers").at(i);
            CoverSpec spec = spec_from_json(field, jc.at("spec"));
            try {
                spec.validate();
            } catch (const Error& e) {
                check_fail("cover_spec", e.what());
            }
            check(spec.degree() == gamma && get_u64(jc, "degree") == gamma, "cover_spec",
                  "cover degree is not gamma");

            CoverData rebuilt = [&]() -> CoverData {
                try {
                    return build_cover(field, gamma, avoid, min_deg);
                } catch (const Error& e) {
                    if (e.code() == Err::BudgetExceeded) throw;
                    check_fail("cover_canonical", e.what());
                }
            }();
            check(spec_equal(rebuilt.spec, spec), "cover_canonical",
                  "stored cover differs from the canonical realization");

            const Json& jm = jc.at("modulus");
            check(point_from_json(field, jm.at("P")) == rebuilt.modulus_found.P &&
                      get_i64(jm, "e") == rebuilt.modulus_found.e,
                  "cover_modulus", "stored modulus differs from the divisibility search");

            check(get_i64(jc, "genus") == cover_genus(spec), "cover_genus",
                  "stored cover genus is wrong");
            check(verify_split_infty(spec), "split_infty", "infinity does not split completely");

            PointSet bp_file;
            for (const auto& bj : jc.at("branch_points")) bp_file.insert(point_from_json(field, bj));
            check(bp_file == spec.branch_points() && branch_disjoint(bp_file, collapse),
                  "branch_disjoint", "branch points wrong or colliding with branch(h)");

            for (const auto& pt : bp_file) avoid.insert(pt);
            int max_deg = 0;
            for (const auto& f : spec.factors) max_deg = std::max(max_deg, factor_pi(f).degree());
            min_deg = max_deg + 1;
            specs.push_back(std::move(spec));
        }

        // -- curves
        for (size_t i = 0; i < count; ++i) {
            const Json& jc = doc.at("curves").at(i);
            const CoverSpec& spec = specs[i];

            const Json& jfs = jc.at("u_factors");
            check(jfs.is_array() && jfs.size() == spec.factors.size(), "u_factors",
                  "u_factors count differs from the cover factors");
            std::vector<RatFn> us;
            for (size_t t = 0; t < spec.factors.size(); ++t) {
                const bool as = std::holds_alternative<ArtinSchreierFactor>(spec.factors[t]);
                RatFn u = compose(factor_pi(spec.factors[t]), collapse.h);
                if (as) u = reciprocal(u);
                const Json& jf = jfs.at(t);
                check(jf.at("kind").get<std::string>() ==
                              (as ? "artin_schreier" : "kummer") &&
                          get_u64(jf, "gamma") == factor_degree(spec.factors[t]) &&
                          poly_from_json(field, jf.at("num")) == u.num() &&
                          poly_from_json(field, jf.at("den")) == u.den(),
                      "u_factors", "stored u does not match pi composed with h");
                us.push_back(std::move(u));
            }
            for (size_t t = 0; t < spec.factors.size(); ++t)
                check(abs_irreducible_cyclic(spec.factors[t], us[t]) == IrredCert::Certified,
                      "abs_irreducible", "geometric irreducibility certificate fails");

            const int64_t genus_file = get_i64(jc, "genus");
            const int64_t hurwitz_file = get_i64(jc, "genus_hurwitz");
            CoverData cover{spec, gamma, cover_genus(spec), spec.branch_points(),
                            Modulus{ClosedPoint::infinity(field), 1}};
            const auto [hurwitz, acc] = genus_hurwitz(cover, collapse);
            (void)acc;
            check(genus_file == hurwitz_file && genus_file == hurwitz &&
                      genus_file == genus_closed_formula(q, cover.genus, gamma),
                  "genus_crosscheck", "stored genus disagrees with the two genus routes");

            const Json& jcounts = jc.at("counts");
            check(jcounts.is_object() && jcounts.contains("1"), "count_target",
                  "counts must include k = 1");
            const int64_t n1_file = parse_count(jcounts.at("1"));
            const int64_t n1 = count_points_C(cover, collapse, 1, opts);
            const int64_t target = static_cast<int64_t>(gamma) * static_cast<int64_t>(q + 1);
            check(n1_file == n1 && n1 == target, "count_target",
                  "N_1 = " + std::to_string(n1) + ", stored " + std::to_string(n1_file) +
                      ", target " + std::to_string(target));

            for (const auto& [key, value] : jcounts.items()) {
                const int k = parse_k(key);
                if (k == 1) continue;
                check(parse_count(value) == count_points_C(cover, collapse, k, opts), "counts",
                      "stored N_" + key + " does not match the recount");
            }
            for (const auto& [key, value] : jcounts.items())
                check(weil_consistency(parse_count(value), genus_file, q, parse_k(key)),
                      "weil", "count outside the Weil window for k = " + key);

            check(gonality_certificate(n1_file, gamma, q) == Gonality::Certified, "gonality",
                  "gonality not certified");

            const Json& jchecks = jc.at("checks");
            bool flags = jchecks.is_object();
            if (flags)
                for (const auto& [key, value] : jchecks.items()) {
                    if (value.is_boolean()) flags = flags && value.get<bool>();
                    else if (value.is_object())
                        for (const auto& [k2, v2] : value.items()) {
                            (void)k2;
                            flags = flags && v2.is_boolean() && v2.get<bool>();
                        }
                    else
                        flags = false;
                }
            check(flags, "checks_flags", "stored check flags are not all true");
        }
    } catch (const CheckFailure& f) {
        return VerifyResult{false, f.name, f.detail};
    } catch (const Json::exception& e) {
        fail(Err::MalformedCertificate, e.what());
    }
    return VerifyResult{};
}

}  // namespace gonal
