// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).
//
// gonal: construct curves over F_q with gonality gamma and gamma(q+1)
// rational points, emit machine-checkable certificates, and re-verify them.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gonal/certificate.hpp"

namespace {

using namespace gonal;

// exit contract: 0 ok, 1 verification failure, 2 unsupported gamma,
// 3 bad input / malformed file, 4 budget or search cap
int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Err::UnsupportedGamma:
            return 2;
        case Err::SearchCapExceeded:
        case Err::BudgetExceeded:
            return 4;
        default:
            return 3;
    }
}

uint64_t default_seed() {
    if (const char* env = std::getenv("GONAL_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<uint64_t>(v);
    }
    return kDefaultSeed;
}

std::string format_element(const FieldElement& c) { return std::to_string(c.index()); }

std::string format_poly(const UniPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c.index() == 1;
        if (i == 0) {
            out += format_element(c);
        } else {
            if (!unit) out += format_element(c) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string format_point(const ClosedPoint& pt) {
    return pt.is_infinity() ? "inf" : "(" + format_poly(pt.poly(), "t") + ")";
}

int cmd_construct(uint64_t q, uint64_t gamma, int count, int max_k, uint64_t seed,
                  const std::string& out_path, int jobs) {
    ConstructParams params;
    params.q = q;
    params.gamma = gamma;
    params.count = count;
    params.max_k = max_k;
    params.seed = seed;
    params.jobs = jobs;
    ConstructResult result = run_construct(params);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 3;
    }
    out << certificate_text(result.certificate);
    out.close();

    std::printf("%3s %6s %6s %6s %6s %6s  %s\n", "i", "degP", "g(X)", "g(C)", "N1", "N2",
                "status");
    for (size_t i = 0; i < result.curves.size(); ++i) {
        const CurveData& c = result.curves[i];
        const auto& checks = result.certificate.at("curves").at(i).at("checks");
        bool ok = true;
        for (const auto& [key, value] : checks.items()) {
            (void)key;
            if (value.is_boolean()) ok = ok && value.get<bool>();
            if (value.is_object())
                for (const auto& [k2, v2] : value.items()) {
                    (void)k2;
                    ok = ok && v2.get<bool>();
                }
        }
        const std::string n2 =
            c.counts.count(2) ? std::to_string(c.counts.at(2)) : std::string("-");
        std::printf("%3zu %6d %6lld %6lld %6lld %6s  %s\n", i,
                    c.cover.modulus_found.P.degree(),
                    static_cast<long long>(c.cover.genus), static_cast<long long>(c.genus),
                    static_cast<long long>(c.counts.at(1)), n2.c_str(), ok ? "ok" : "FAIL");
    }
    std::printf("certificate written to %s\n", out_path.c_str());
    return 0;
}

int cmd_verify(const std::string& in_path, int jobs) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << in_path << "\n";
        return 3;
    }
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception& e) {
        std::cerr << "malformed certificate: " << e.what() << "\n";
        return 3;
    }
    CountOptions opts;
    opts.jobs = jobs;
    const VerifyResult result = verify_certificate(doc, opts);
    if (!result.ok) {
        std::cout << "FAIL " << result.failed_check << ": " << result.detail << "\n";
        return 1;
    }
    std::cout << "ok: all checks recomputed and matched\n";
    return 0;
}

int cmd_rayclass(uint64_t q, uint64_t gamma, int max_sum) {
    prime_power_split(q);
    if (gamma < 2) fail(Err::BadInput, "gamma must be >= 2");
    std::printf("%4s %4s %24s  %s\n", "d", "e", "order", "div");
    bool found = false;
    int fd = 0, fe = 0;
    for (int sum = 2; sum <= max_sum; ++sum) {
        for (int d = 1; d < sum; ++d) {
            const int e = sum - d;
            const BigInt order = ray_class_order(q, d, e);
            const bool div = order % gamma == 0;
            std::printf("%4d %4d %24s  %s\n", d, e, order.str().c_str(), div ? "yes" : "no");
            if (div && !found) {
                found = true;
                fd = d;
                fe = e;
            }
        }
    }
    if (!found)
        fail(Err::SearchCapExceeded, "no admissible modulus with d+e <= " + std::to_string(max_sum));
    std::printf("minimal admissible: d=%d e=%d order=%s\n", fd, fe,
                ray_class_order(q, fd, fe).str().c_str());
    return 0;
}

int cmd_hmap(uint64_t q) {
    const auto [p, n] = prime_power_split(q);
    const Field field = create_field(p, n);
    const CollapseMap h = build_h(field);
    std::printf("q = %llu (p = %u, n = %u)\n", static_cast<unsigned long long>(q), p, n);
    std::printf("a(t)   = %s\n", format_poly(h.h.num(), "t").c_str());
    std::printf("h(t)   = (%s) / (%s)\n", format_poly(h.h.num(), "t").c_str(),
                format_poly(h.h.den(), "t").c_str());
    std::string branch;
    for (const auto& pt : h.branch) {
        if (!branch.empty()) branch += ", ";
        branch += format_point(pt);
    }
    std::printf("branch = { %s }\n", branch.c_str());
    std::printf("ramification divisor degree = %lld\n",
                static_cast<long long>(h.ram_divisor_degree));
    std::printf("collapse check: %s\n",
                verify_collapse(h.h, field) ? "all rational points map to inf" : "FAILED");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelian-cover curves over F_q meeting the gonality point bound"};
    app.require_subcommand(1);

    uint64_t q = 2, gamma = 2, seed = default_seed();
    int count = 1, max_k = 2, jobs = 1, max_sum = 10;
    std::string out_path = "certificate.json", in_path;

    CLI::App* construct = app.add_subcommand("construct", "build curves and emit a certificate");
    construct->add_option("--q", q, "field size, a prime power")->required();
    construct->add_option("--gamma", gamma, "gonality target, >= 2")->required();
    construct->add_option("--count", count, "number of curves in the sequence");
    construct->add_option("--seed", seed, "factorization seed (default: GONAL_SEED or 1729)");
    construct->add_option("--max-k", max_k, "count points over F_{q^k} for k = 1..max-k");
    construct->add_option("--out", out_path, "certificate output path");
    construct->add_option("--jobs", jobs, "point-counting worker threads");

    CLI::App* verify = app.add_subcommand("verify", "re-verify a certificate from scratch");
    verify->add_option("--in", in_path, "certificate path")->required();
    verify->add_option("--jobs", jobs, "point-counting worker threads");

    CLI::App* rayclass = app.add_subcommand("rayclass", "ray class group order table");
    rayclass->add_option("--q", q, "field size, a prime power")->required();
    rayclass->add_option("--gamma", gamma, "divisor to search for")->required();
    rayclass->add_option("--max", max_sum, "cap on d + e");

    CLI::App* hmap = app.add_subcommand("hmap", "show the collapse map for F_q");
    hmap->add_option("--q", q, "field size, a prime power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (construct->parsed()) return cmd_construct(q, gamma, count, max_k, seed, out_path, jobs);
        if (verify->parsed()) return cmd_verify(in_path, jobs);
        if (rayclass->parsed()) return cmd_rayclass(q, gamma, max_sum);
        if (hmap->parsed()) return cmd_hmap(q);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
