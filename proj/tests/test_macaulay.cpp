#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wilf/invariants.hpp"
#include "wilf/macaulay.hpp"
#include "wilf/tree.hpp"

using namespace wilf;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(52, 26) == 495918532948104);
    CHECK_THROWS_AS(binomial(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(binomial(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);

    CHECK(binomial_capped(10, 3, 1000) == 120);
    CHECK(binomial_capped(10, 3, 100) == 101);
    CHECK(binomial_capped(68, 34, 50) == 51);          // would overflow uncapped
    CHECK(binomial_capped(1'000'000'007, 2, 10) == 11);
}

TEST_CASE("greedy binomial representation") {
    auto r = binomial_representation(10, 3);
    CHECK(r.degree == 3);
    CHECK(r.coeffs == std::vector<std::int64_t>{0, 1, 5});
    CHECK(r.value() == 10);
    CHECK(r.to_string() == "C(5,3)+C(1,2)+C(0,1)");

    CHECK(binomial_representation(2, 1).coeffs == std::vector<std::int64_t>{2});
    CHECK(binomial_representation(10, 2).coeffs == std::vector<std::int64_t>{0, 5});
    CHECK(binomial_representation(7, 2).coeffs == std::vector<std::int64_t>{1, 4});
    CHECK(binomial_representation(0, 3).coeffs == std::vector<std::int64_t>{0, 1, 2});
    CHECK(binomial_representation(0, 3).value() == 0);

    CHECK_THROWS_AS(binomial_representation(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(binomial_representation(5, 0), std::invalid_argument);
}

TEST_CASE("representation round-trips and descends strictly") {
    for (std::int64_t i = 1; i <= 6; ++i)
        for (std::int64_t a = 0; a <= 5000; a += (a < 64 ? 1 : 37)) {
            auto r = binomial_representation(a, i);
            REQUIRE(static_cast<std::int64_t>(r.coeffs.size()) == i);
            REQUIRE(r.value() == a);
            for (std::size_t t = 1; t < r.coeffs.size(); ++t)
                REQUIRE(r.coeffs[t] > r.coeffs[t - 1]);
            REQUIRE(r.coeffs.front() >= 0);
        }
}

TEST_CASE("the descending representation is unique") {
    // Enumerate every strictly descending coefficient tuple up to a value cap
    // and confirm values are hit exactly once, by the greedy tuple.
    for (int i = 1; i <= 4; ++i) {
        const std::int64_t cap = 300;
        std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> by_value;
        for (const auto& t : oracle::all_desc_tuples(i, cap))
            by_value[t.value].push_back(t.coeffs);
        for (std::int64_t a = 0; a <= cap; ++a) {
            CAPTURE(i);
            CAPTURE(a);
            REQUIRE(by_value.count(a) == 1);
            REQUIRE(by_value[a].size() == 1);
            REQUIRE(by_value[a][0] == binomial_representation(a, i).coeffs);
        }
    }
}

TEST_CASE("macaulay step") {
    CHECK(macaulay_step(2, 1) == 3);
    CHECK(macaulay_step(10, 2) == 20);
    CHECK(macaulay_step(7, 2) == 11);   // C(5,3) + C(2,2)
    CHECK(macaulay_step(4, 1) == 10);   // C(5,2)
    for (std::int64_t i = 1; i <= 5; ++i) CHECK(macaulay_step(0, i) == 0);
    for (std::int64_t k = 1; k <= 12; ++k)
        CHECK(macaulay_step(k, 1) == k * (k + 1) / 2);
}

TEST_CASE("real-argument binomials") {
    CHECK(binomial_real(3, 2) == Rational(3));
    CHECK(binomial_real(Rational(7, 2), 2) == Rational(35, 8));
    CHECK(binomial_real(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(binomial_real(Rational(123, 7), 0) == Rational(1));
    for (std::int64_t n = 0; n <= 12; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            CHECK(binomial_real(n, k) == Rational(binomial(n, k)));
    CHECK_THROWS_AS(binomial_real(2, -1), std::invalid_argument);
}

TEST_CASE("binomial inverse brackets") {
    SUBCASE("integer arguments are detected exactly") {
        for (std::int64_t i = 1; i <= 4; ++i)
            for (std::int64_t n = i - 1; n <= 40; ++n) {
                auto inv = binomial_inverse(binomial(n, i), i);
                REQUIRE(inv.exact);
                REQUIRE(inv.lo == inv.hi);
                if (binomial(n, i) > 0) REQUIRE(inv.lo == Rational(n));
            }
    }
    SUBCASE("non-integer solutions get a tight bracket") {
        auto inv = binomial_inverse(4, 2);
        CHECK_FALSE(inv.exact);
        CHECK(inv.lo < inv.hi);
        CHECK(inv.hi - inv.lo <= Rational(1, std::int64_t{1} << 40));
        CHECK(binomial_real(inv.lo, 2) < Rational(4));
        CHECK(binomial_real(inv.hi, 2) > Rational(4));
        CHECK(inv.lo > Rational(3));
        CHECK(inv.hi < Rational(4));

        auto next = binomial_inverse(5, 2);
        CHECK(next.lo > inv.hi);  // strictly larger root, disjoint brackets
    }
    SUBCASE("bracket always encloses the argument") {
        std::mt19937_64 rng(42);
        for (int t = 0; t < 200; ++t) {
            const std::int64_t a = static_cast<std::int64_t>(rng() % 100000);
            const std::int64_t i = 1 + static_cast<std::int64_t>(rng() % 5);
            auto inv = binomial_inverse(a, i);
            REQUIRE(binomial_real(inv.lo, i) <= Rational(a));
            REQUIRE(binomial_real(inv.hi, i) >= Rational(a));
            REQUIRE(inv.lo >= Rational(i - 1));
        }
    }
    CHECK_THROWS_AS(binomial_inverse(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(binomial_inverse(5, 0), std::invalid_argument);
}

TEST_CASE("sumset counting sequences") {
    auto h1 = hilbert_from_sumsets({5}, 3);
    CHECK(h1.values == std::vector<std::int64_t>{1, 1, 1, 1});

    auto h2 = hilbert_from_sumsets({10, 15}, 4);
    CHECK(h2.values == std::vector<std::int64_t>{1, 2, 3, 4, 5});

    auto h3 = hilbert_from_sumsets({10, 11, 12, 13}, 3);
    CHECK(h3.values == std::vector<std::int64_t>{1, 4, 7, 10});

    CHECK_THROWS_AS(hilbert_from_sumsets({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_from_sumsets({5}, 0), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_from_sumsets({0, 5}, 2), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_from_sumsets({5, 5}, 2), std::invalid_argument);

    SUBCASE("matches literal i-fold sums") {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 50; ++t) {
            std::set<std::int64_t> gen;
            const int size = 1 + static_cast<int>(rng() % 6);
            while (static_cast<int>(gen.size()) < size)
                gen.insert(1 + static_cast<std::int64_t>(rng() % 40));
            ElementSet A(gen.begin(), gen.end());
            const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 5);
            auto h = hilbert_from_sumsets(A, n);
            std::set<std::int64_t> fold{0};
            for (std::int64_t i = 1; i <= n; ++i) {
                std::set<std::int64_t> next;
                for (auto x : fold)
                    for (auto a : A) next.insert(x + a);
                fold = next;
                REQUIRE(h.values[i] == static_cast<std::int64_t>(fold.size()));
            }
        }
    }
}

TEST_CASE("macaulay growth test") {
    CHECK(macaulay_growth_ok({{1, 2, 3, 4}, {}}));
    CHECK(macaulay_growth_ok({{1, 3, 6, 10, 15}, {}}));
    CHECK_FALSE(macaulay_growth_ok({{1, 2, 4}, {}}));
    CHECK(macaulay_growth_ok({{1}, {}}));
    CHECK(macaulay_growth_ok({{1, 0, 0}, {}}));
    CHECK_THROWS_AS(macaulay_growth_ok({{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_growth_ok({{2, 1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_growth_ok({{1, -1}, {}}), std::invalid_argument);

    SUBCASE("polynomial sequences meet the step with equality") {
        // h_i = C(k+i-1, i) is the extremal growth for k generators.
        const std::int64_t k = 3;
        for (std::int64_t i = 1; i <= 6; ++i)
            REQUIRE(macaulay_step(binomial(k + i - 1, i), i) == binomial(k + i, i + 1));
    }
    SUBCASE("every sumset sequence passes") {
        std::mt19937_64 rng(1234);
        for (int t = 0; t < 1000; ++t) {
            std::set<std::int64_t> gen;
            const int size = 1 + static_cast<int>(rng() % 10);
            while (static_cast<int>(gen.size()) < size)
                gen.insert(10 + static_cast<std::int64_t>(rng() % 50));
            const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
            auto h = hilbert_from_sumsets(ElementSet(gen.begin(), gen.end()), n);
            CAPTURE(t);
            REQUIRE(macaulay_growth_ok(h));
        }
    }
}

TEST_CASE("condensed neighbour bounds") {
    auto b = condensed_bounds(3, 2);
    CHECK(b.lower_prev == 2);
    CHECK(b.upper_next == 4);

    auto z = condensed_bounds(0, 2);
    CHECK(z.lower_prev == 0);
    CHECK(z.upper_next == 0);

    auto f = condensed_bounds(4, 2);
    CHECK(f.lower_prev == 3);
    CHECK(f.upper_next == 5);

    CHECK_THROWS_AS(condensed_bounds(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(condensed_bounds(3, 0), std::invalid_argument);

    SUBCASE("sound against the exact step in both directions") {
        for (std::int64_t r = 1; r <= 5; ++r)
            for (std::int64_t a = 0; a <= 2000; a += (a < 128 ? 1 : 53)) {
                auto cb = condensed_bounds(a, r);
                CAPTURE(r);
                CAPTURE(a);
                // Upper: nothing admissible exceeds it.
                REQUIRE(macaulay_step(a, r) <= cb.upper_next);
                // Lower: anything below it cannot reach a in the next degree.
                // (Meaningless at r = 1, where the only predecessor is h_0 = 1.)
                if (r >= 2 && cb.lower_prev > 0)
                    REQUIRE(macaulay_step(cb.lower_prev - 1, r - 1) < a);
            }
    }
}

TEST_CASE("averaging bound") {
    CHECK(averaging_bound_ok({{1, 3, 6, 10}, {}}, 3));   // ties exactly
    CHECK(averaging_bound_ok({{1, 3, 6, 10}, {}}, 2));
    CHECK_FALSE(averaging_bound_ok({{1, 2, 4, 8}, {}}, 3));
    CHECK_THROWS_AS(averaging_bound_ok({{1, 2}, {}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(averaging_bound_ok({{1, 2}, {}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(averaging_bound_ok({{2, 2}, {}}, 1), std::invalid_argument);

    SUBCASE("holds for every sumset sequence at every depth") {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 400; ++t) {
            std::set<std::int64_t> gen;
            const int size = 1 + static_cast<int>(rng() % 8);
            while (static_cast<int>(gen.size()) < size)
                gen.insert(5 + static_cast<std::int64_t>(rng() % 60));
            const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
            auto h = hilbert_from_sumsets(ElementSet(gen.begin(), gen.end()), n);
            for (std::int64_t qq = 1; qq <= n; ++qq) {
                CAPTURE(t);
                CAPTURE(qq);
                REQUIRE(averaging_bound_ok(h, qq));
            }
        }
    }
}

TEST_CASE("graded quotient dimensions") {
    auto s = NumericalSemigroup::from_text("4:12");
    auto d = quotient_dims(s);
    CHECK(d.d1 == 0);
    CHECK(d.d2 == 0);
    CHECK(d.d3 == 0);

    auto t = NumericalSemigroup::from_text("5,6:15");
    REQUIRE(t.conductor() == 15);
    REQUIRE(profile(t) == std::vector<std::int64_t>{2, 0});
    auto e = quotient_dims(t);
    CHECK(e.d1 == 1);
    CHECK(e.d2 == 1);
    CHECK(e.d3 == 1);

    CHECK_THROWS_AS(quotient_dims(NumericalSemigroup::from_text("2,5")),
                    std::invalid_argument);  // q = 2
    CHECK_THROWS_AS(quotient_dims(NumericalSemigroup::from_text("3,5")),
                    std::invalid_argument);  // profile (1,1)

    SUBCASE("dimension triples grow like a graded algebra") {
        enumerate(10, [&](const NumericalSemigroup& g) {
            auto dec = decompose(g);
            if (dec.q != 3) return;
            auto p = profile(g);
            if (p[1] != 0) return;
            auto qd = quotient_dims(g);
            const std::string which =
                GeneratorSpec{g.primitives(), g.conductor()}.to_string();
            CAPTURE(which);
            REQUIRE(qd.d1 == p[0] - 1);
            REQUIRE(qd.d2 <= binomial(qd.d1 + 1, 2));
            REQUIRE(macaulay_growth_ok({{1, qd.d1, qd.d2, qd.d3}, {}}));
            REQUIRE(qd.d3 <= condensed_bounds(qd.d2, 2).upper_next);
        });
    }
}
