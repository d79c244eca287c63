// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include "gonal/curve.hpp"

#include <algorithm>
#include <thread>

namespace gonal {

bool branch_disjoint(const PointSet& cover_branch, const CollapseMap& collapse) {
    for (const auto& pt : cover_branch) {
        if (pt.is_infinity()) return false;
        if (collapse.branch.count(pt) != 0) return false;
    }
    return true;
}

bool branch_disjoint(const CoverData& cover, const CollapseMap& collapse) {
    return branch_disjoint(cover.branch_points, collapse);
}

int64_t genus_closed_formula(uint64_t q, int64_t g_X, uint64_t gamma) {
    return static_cast<int64_t>(q + 1) * g_X + static_cast<int64_t>(q) * (static_cast<int64_t>(gamma) - 1);
}

std::pair<int64_t, RamAccount> genus_hurwitz(const CoverData& cover, const CollapseMap& collapse) {
    const int64_t q = static_cast<int64_t>(collapse.field->order());
    const int64_t gamma = static_cast<int64_t>(cover.degree);
    RamAccount acc{};
    acc.d_f = gamma;
    acc.d_h = q + 1;
    acc.deg_R_f = 2 * cover.genus - 2 + 2 * gamma;
    acc.deg_R_h = collapse.ram_divisor_degree;
    acc.deg_R_W = acc.d_f * acc.deg_R_h + acc.d_h * acc.deg_R_f;
    const int64_t twice = acc.deg_R_W - 2 * gamma * (q + 1) + 2;
    if (twice % 2 != 0) fail(Err::NonIntegerGenus, "Hurwitz system gives a half-integer genus");
    const int64_t genus = twice / 2;
    require(genus == genus_closed_formula(static_cast<uint64_t>(q), cover.genus,
                                          static_cast<uint64_t>(gamma)),
            Err::InternalCheck, "Hurwitz genus disagrees with the closed formula");
    return {genus, acc};
}

// ---------------------------------------------------------------------------
// Point counting
// ---------------------------------------------------------------------------

namespace {

uint64_t checked_pow(uint64_t q, int k, uint64_t budget) {
    uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        v *= q;
        if (v > budget)
            fail(Err::BudgetExceeded, "q^k = " + std::to_string(v) + " exceeds the enumeration budget " +
                                          std::to_string(budget));
    }
    return v;
}

}  // namespace

int64_t count_points_C(const CoverData& cover, const CollapseMap& collapse, int k,
                       const CountOptions& opts) {
    if (k < 1) fail(Err::BadInput, "extension index must be >= 1");
    const Field& base = collapse.field;
    const uint64_t qk = checked_pow(base->order(), k, opts.budget);
    const Field ext = create_field(base->p(), base->degree() * static_cast<uint32_t>(k));
    require(ext->order() == qk, Err::InternalCheck, "extension order mismatch");

    const FiberCounter counter(cover.spec, ext);
    const UniPoly num = embed_poly(collapse.h.num(), ext);
    const UniPoly den = embed_poly(collapse.h.den(), ext);

    // s0 = infinity maps to infinity (deg num > deg den)
    int64_t total = static_cast<int64_t>(counter.count(std::nullopt));

    auto fiber_at = [&](uint64_t idx) -> uint64_t {
        const FieldElement s0 = ext->from_index(idx);
        const FieldElement d = den.eval(s0);
        if (d.is_zero()) return counter.count(std::nullopt);
        return counter.count(num.eval(s0) / d);
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || qk < 64) {
        for (uint64_t i = 0; i < qk; ++i) total += static_cast<int64_t>(fiber_at(i));
        return total;
    }

    std::vector<int64_t> partial(static_cast<size_t>(jobs), 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            int64_t sum = 0;
            for (uint64_t i = static_cast<uint64_t>(w); i < qk; i += static_cast<uint64_t>(jobs))
                sum += static_cast<int64_t>(fiber_at(i));
            partial[static_cast<size_t>(w)] = sum;
        });
    }
    for (auto& t : workers) t.join();
    for (int64_t s : partial) total += s;
    return total;
}

int64_t count_points_C(const CurveData& curve, int k, const CountOptions& opts) {
    return count_points_C(curve.cover, curve.collapse, k, opts);
}

bool weil_consistency(int64_t n_k, int64_t g, uint64_t q, int k) {
    if (g < 0) fail(Err::BadInput, "genus must be nonnegative");
    const BigInt qk = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
    const BigInt dev = BigInt(n_k) - qk - 1;
    return dev * dev <= 4 * BigInt(g) * BigInt(g) * qk;
}

Gonality gonality_certificate(int64_t n1, uint64_t gamma, uint64_t q) {
    const int64_t target = static_cast<int64_t>(gamma) * static_cast<int64_t>(q + 1);
    if (n1 == target) return Gonality::Certified;
    return n1 < target ? Gonality::Inconclusive : Gonality::Inconsistent;
}

// ---------------------------------------------------------------------------
// Fiber product assembly
// ---------------------------------------------------------------------------

CurveData build_curve(const CoverData& cover, const CollapseMap& collapse,
                      const CountOptions& opts) {
    if (!branch_disjoint(cover, collapse))
        fail(Err::BranchCollision, "cover branch point meets branch(h) or infinity");
    require(verify_split_infty(cover.spec), Err::InternalCheck, "cover not split at infinity");
    require(verify_collapse(collapse.h, collapse.field), Err::InternalCheck,
            "collapse property violated");

    std::vector<UFactor> u_factors;
    for (const auto& fac : cover.spec.factors) {
        const bool as = std::holds_alternative<ArtinSchreierFactor>(fac);
        RatFn u = compose(factor_pi(fac), collapse.h);
        if (as) u = reciprocal(u);
        if (abs_irreducible_cyclic(fac, u) != IrredCert::Certified)
            fail(Err::IrreducibilityInconclusive,
                 "cannot certify geometric irreducibility of a cyclic factor");
        u_factors.push_back(UFactor{as, factor_degree(fac), std::move(u)});
    }

    const uint64_t q = collapse.field->order();
    const int64_t genus = genus_closed_formula(q, cover.genus, cover.degree);
    const auto [hurwitz, acc] = genus_hurwitz(cover, collapse);
    (void)acc;
    require(hurwitz == genus, Err::InternalCheck, "genus routes disagree");

    CurveData curve{cover, collapse, std::move(u_factors), genus, {}, {}};
    const int64_t n1 = count_points_C(cover, collapse, 1, opts);
    const int64_t target = static_cast<int64_t>(cover.degree) * static_cast<int64_t>(q + 1);
    if (n1 != target)
        fail(Err::CountMismatch, "N_1 = " + std::to_string(n1) + " but gamma(q+1) = " +
                                     std::to_string(target));
    curve.counts[1] = n1;
    return curve;
}

std::vector<CurveData> construct_sequence(const Field& field, uint64_t gamma, int n,
                                          const SequenceOptions& opts) {
    if (n < 1) fail(Err::BadInput, "sequence length must be >= 1");
    const CollapseMap collapse = build_h(field);

    std::vector<CurveData> out;
    PointSet avoid = collapse.branch;
    int min_deg = 1;
    for (int i = 0; i < n; ++i) {
        CoverData cover = build_cover(field, gamma, avoid, min_deg, opts.search_cap);
        CurveData curve = build_curve(cover, collapse, opts.count);
        for (int k = 2; k <= opts.max_k; ++k)
            curve.counts[k] = count_points_C(cover, collapse, k, opts.count);
        for (const auto& [k, nk] : curve.counts)
            require(weil_consistency(nk, curve.genus, field->order(), k), Err::InternalCheck,
                    "point count violates the Weil window");
        curve.avoid_trace = avoid;

        int max_factor_deg = 0;
        for (const auto& fac : cover.spec.factors)
            max_factor_deg = std::max(max_factor_deg, factor_pi(fac).degree());
        min_deg = max_factor_deg + 1;
        for (const auto& pt : cover.branch_points) avoid.insert(pt);

        if (!out.empty())
            require(curve.genus > out.back().genus, Err::InternalCheck,
                    "genera not strictly increasing");
        out.push_back(std::move(curve));
    }
    return out;
}

}  // namespace gonal
