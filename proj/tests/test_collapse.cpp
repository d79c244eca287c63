// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include "gonal/collapse.hpp"

using namespace gonal;

namespace {

Field field_for(uint64_t q) {
    switch (q) {
        case 4: return create_field(2, 2);
        case 8: return create_field(2, 3);
        case 9: return create_field(3, 2);
        default: return create_field(static_cast<uint32_t>(q), 1);
    }
}

// oracle: first monic irreducible of degree d by trial division
UniPoly brute_first_irreducible(const Field& f, int d) {
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= f->order();
    for (uint64_t k = 0; k < total; ++k) {
        std::vector<uint64_t> idx(static_cast<size_t>(d) + 1, 1);
        uint64_t v = k;
        for (int i = 0; i < d; ++i) {
            idx[static_cast<size_t>(i)] = v % f->order();
            v /= f->order();
        }
        const UniPoly cand = UniPoly::from_indices(f, idx);
        bool reducible = false;
        for (int dd = 1; 2 * dd <= d && !reducible; ++dd) {
            uint64_t tot2 = 1;
            for (int i = 0; i < dd; ++i) tot2 *= f->order();
            for (uint64_t k2 = 0; k2 < tot2 && !reducible; ++k2) {
                std::vector<uint64_t> idx2(static_cast<size_t>(dd) + 1, 1);
                uint64_t v2 = k2;
                for (int i = 0; i < dd; ++i) {
                    idx2[static_cast<size_t>(i)] = v2 % f->order();
                    v2 /= f->order();
                }
                if (divmod(cand, UniPoly::from_indices(f, idx2)).second.is_zero())
                    reducible = true;
            }
        }
        if (!reducible) return cand;
    }
    FAIL("no irreducible found");
    return UniPoly(f);
}

}  // namespace

TEST_CASE("build_h for q = 2 matches the worked example") {
    const Field f2 = create_field(2, 1);
    const CollapseMap h = build_h(f2);
    CHECK(h.h.num() == UniPoly::from_indices(f2, {1, 1, 0, 1}));
    CHECK(h.h.den() == UniPoly::from_indices(f2, {0, 1, 1}));
    REQUIRE(h.branch.size() == 1);
    CHECK(h.branch.begin()->poly() == UniPoly::from_indices(f2, {1, 1, 1}));
    CHECK(h.ram_divisor_degree == 4);
}

TEST_CASE("build_h numerator is the first irreducible of degree q+1") {
    for (uint64_t q : {2, 3, 4, 5}) {
        const Field f = field_for(q);
        const CollapseMap h = build_h(f);
        CHECK(h.h.num() == brute_first_irreducible(f, static_cast<int>(q) + 1));
        CHECK(h.h.num().degree() == static_cast<int>(q) + 1);
        CHECK(h.h.den().degree() == static_cast<int>(q));
    }
}

TEST_CASE("collapse property, exhaustive for q in {2,3,4,5}") {
    for (uint64_t q : {2, 3, 4, 5}) {
        const Field f = field_for(q);
        const CollapseMap h = build_h(f);
        CHECK(verify_collapse(h.h, f));
        // every rational point of P^1 goes to infinity
        for (const auto& c : f->elements()) CHECK_FALSE(eval_p1(h.h, c, f).has_value());
        CHECK_FALSE(eval_p1(h.h, std::nullopt, f).has_value());
    }
    // a non-collapsing map
    const Field f2 = create_field(2, 1);
    const RatFn identity(UniPoly::x(f2), UniPoly::constant(f2, f2->one()));
    CHECK_FALSE(verify_collapse(identity, f2));
}

TEST_CASE("branch locus: degree 2q, infinity excluded, points irreducible") {
    for (uint64_t q : {2, 3, 4, 5}) {
        const Field f = field_for(q);
        const CollapseMap h = build_h(f);
        const BranchInfo info = branch_locus_info(h.h);
        CHECK(info.resultant.degree() == static_cast<int>(2 * q));
        CHECK(info.points == h.branch);
        int64_t support_degree = 0;
        for (const auto& pt : info.points) {
            CHECK_FALSE(pt.is_infinity());
            CHECK(is_irreducible(pt.poly()));
            support_degree += pt.degree();
        }
        CHECK(support_degree <= static_cast<int64_t>(2 * q));
        // numerator and denominator share no factor
        CHECK(gcd(h.h.num(), h.h.den()).degree() == 0);
    }
}

TEST_CASE("branch points are where fibers degenerate, q = 2") {
    // the only branch point of h for q = 2 is (t^2+t+1); over F_4 its two
    // roots must have degenerate fibers and every other point an etale one
    const Field f2 = create_field(2, 1);
    const Field f4 = create_field(2, 2);
    const CollapseMap h = build_h(f2);
    const UniPoly num = embed_poly(h.h.num(), f4);
    const UniPoly den = embed_poly(h.h.den(), f4);
    const UniPoly branch_poly = embed_poly(h.branch.begin()->poly(), f4);
    for (const auto& t0 : f4->elements()) {
        const UniPoly fiber = num - t0 * den;
        const bool degenerate = gcd(fiber, derivative(fiber)).degree() > 0;
        CHECK(degenerate == branch_poly.eval(t0).is_zero());
    }
}
