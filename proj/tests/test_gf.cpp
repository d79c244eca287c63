// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <random>

#include "gonal/gf.hpp"

using namespace gonal;

namespace {

// test-side oracle: does the monic polynomial given by base-p digits of k
// (constant first, degree d) have a root in F_p? Sufficient to decide
// irreducibility for d = 2, 3.
bool has_root_mod_p(uint64_t k, int d, uint32_t p) {
    std::vector<uint32_t> c(static_cast<size_t>(d) + 1, 1);
    for (int i = 0; i < d; ++i) {
        c[static_cast<size_t>(i)] = static_cast<uint32_t>(k % p);
        k /= p;
    }
    for (uint32_t r = 0; r < p; ++r) {
        uint64_t acc = 0;
        for (int i = d; i >= 0; --i) acc = (acc * r + c[static_cast<size_t>(i)]) % p;
        if (acc == 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("create_field picks the lexicographically-first modulus") {
    const Field f2 = create_field(2, 1);
    CHECK(f2->order() == 2);
    CHECK(f2->modulus() == std::vector<uint32_t>{0, 1});

    // unique irreducible quadratic over F_2
    const Field f4 = create_field(2, 2);
    CHECK(f4->modulus() == std::vector<uint32_t>{1, 1, 1});

    // oracle: first rootless monic quadratic over F_3 in lexicographic order
    uint64_t first = 9;
    for (uint64_t k = 0; k < 9; ++k)
        if (!has_root_mod_p(k, 2, 3)) {
            first = k;
            break;
        }
    CHECK(first == 1);  // x^2 + 1
    const Field f9 = create_field(3, 2);
    CHECK(f9->modulus() == std::vector<uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(create_field(6, 1), Error);
    CHECK_THROWS_AS(create_field(5, 0), Error);
}

TEST_CASE("field arithmetic on the documented examples") {
    const Field f3 = create_field(3, 1);
    CHECK(f3->scalar(2) + f3->scalar(2) == f3->scalar(1));

    const Field f4 = create_field(2, 2);
    const FieldElement g = f4->element({0, 1});
    CHECK(g * g == f4->element({1, 1}));  // g^2 = g + 1 under x^2 + x + 1

    const Field f5 = create_field(5, 1);
    CHECK(inverse(f5->scalar(3)) == f5->scalar(2));

    CHECK_THROWS_AS(f5->scalar(1) / f5->scalar(0), Error);
    CHECK_THROWS_AS(f5->scalar(1) + f3->scalar(1), Error);
}

TEST_CASE("frobenius on F_4") {
    const Field f4 = create_field(2, 2);
    const FieldElement g = f4->element({0, 1});
    CHECK(frobenius(g, 1) == f4->element({1, 1}));
    CHECK(frobenius(g, 2) == g);
    CHECK(frobenius(f4->one(), 7) == f4->one());
}

TEST_CASE("enumerate_field order and closure") {
    const Field f2 = create_field(2, 1);
    const auto e2 = f2->elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1] == f2->one());

    const auto e4 = create_field(2, 2)->elements();
    CHECK(e4.size() == 4);
    for (size_t i = 0; i < e4.size(); ++i)
        for (size_t j = i + 1; j < e4.size(); ++j) CHECK(e4[i] != e4[j]);

    // F_9 is closed under negation: x and -x pair up
    const Field f9 = create_field(3, 2);
    for (const auto& x : f9->elements()) {
        CHECK((-x).index() < f9->order());
        CHECK(-(-x) == x);
    }
}

TEST_CASE("embeddings") {
    const Field f2 = create_field(2, 1);
    const Field f4 = create_field(2, 2);
    const Field f16 = create_field(2, 4);
    CHECK(embed(f2, f4, f2->one()) == f4->one());

    // oracle: first root of x^2 + x + 1 in F_16 enumeration order
    FieldElement expected = f16->zero();
    bool found = false;
    for (const auto& r : f16->elements()) {
        if ((r * r + r + f16->one()).is_zero()) {
            expected = r;
            found = true;
            break;
        }
    }
    REQUIRE(found);
    const FieldElement g = f4->element({0, 1});
    CHECK(embed(f4, f16, g) == expected);

    const Field f8 = create_field(2, 3);
    CHECK_THROWS_AS(embed(f4, f8, g), Error);
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        const Field f = create_field(p, n);
        const auto elems = f->elements();
        CHECK(elems.size() == f->order());
        for (const auto& a : elems) {
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK(a - a == f->zero());
            CHECK(pow(a, f->order()) == a);  // Fermat
            if (!a.is_zero()) CHECK(a * inverse(a) == f->one());
            for (const auto& b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const auto& c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("axioms, randomized on a larger field") {
    const Field f = create_field(2, 10);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const FieldElement a = f->from_index(rng() % f->order());
        const FieldElement b = f->from_index(rng() % f->order());
        const FieldElement c = f->from_index(rng() % f->order());
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(pow(a, f->order()) == a);
    }
}

TEST_CASE("frobenius order and trace") {
    // frobenius(., n*k) is the identity on F_{q^k} represented as F_p^{nk}
    const Field f64 = create_field(2, 6);
    for (const auto& a : f64->elements()) CHECK(frobenius(a, 6) == a);

    const Field f9 = create_field(3, 2);
    for (const auto& a : f9->elements()) {
        CHECK(trace_to_prime(a) < 3);
        for (const auto& b : f9->elements())
            CHECK((trace_to_prime(a) + trace_to_prime(b)) % 3 == trace_to_prime(a + b));
    }
}

TEST_CASE("embed is a ring homomorphism, exhaustive for small fields") {
    const std::vector<std::pair<std::pair<uint32_t, uint32_t>, std::pair<uint32_t, uint32_t>>>
        pairs = {{{2, 1}, {2, 2}}, {{2, 1}, {2, 4}}, {{2, 2}, {2, 4}}, {{3, 1}, {3, 2}}};
    for (const auto& [sub_pn, sup_pn] : pairs) {
        const Field sub = create_field(sub_pn.first, sub_pn.second);
        const Field sup = create_field(sup_pn.first, sup_pn.second);
        CHECK(embed(sub, sup, sub->one()) == sup->one());
        for (const auto& a : sub->elements())
            for (const auto& b : sub->elements()) {
                CHECK(embed(sub, sup, a + b) == embed(sub, sup, a) + embed(sub, sup, b));
                CHECK(embed(sub, sup, a * b) == embed(sub, sup, a) * embed(sub, sup, b));
                if (a != b) CHECK(embed(sub, sup, a) != embed(sub, sup, b));
            }
    }
}

TEST_CASE("element serialization round-trips through indices") {
    const Field f = create_field(3, 2);
    for (const auto& a : f->elements()) CHECK(f->from_index(a.index()) == a);
}
