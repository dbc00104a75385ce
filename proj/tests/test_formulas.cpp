#include <catch2/catch_amalgamated.hpp>

#include "nps/formulas.hpp"
#include "nps/io.hpp"
#include "nps/statistics.hpp"

using namespace nps;

TEST_CASE("signed exit formula") {
    SECTION("spot values") {
        Partition two({2});
        Census c2 = f_census(two);
        CHECK(delta_formula(two, c2, 1, {1, 2}) == 1);
        CHECK(delta_formula(two, c2, 1, {1, 1}) == -1);

        Partition hook({2, 1});
        Census ch = f_census(hook);
        CHECK(delta_formula(hook, ch, 1, {1, 1}) == -2);
    }
    SECTION("domain") {
        Partition p({2, 1});
        Census c = f_census(p);
        CHECK_THROWS_AS(delta_formula(p, c, 0, {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(delta_formula(p, c, 3, {1, 1}), std::invalid_argument);
    }
    SECTION("matches the oracle for n <= 6") {
        for (int n = 2; n <= 6; ++n)
            for (const Partition& shape : partitions_of(n)) {
                Census c = f_census(shape);
                StatTables st = compute_stat_tables(shape);
                for (int k = 1; k < n; ++k)
                    for (Cell x : shape.cells())
                        CHECK(delta_formula(shape, c, k, x) ==
                              ExactRational(st.signed_exit[k - 1][shape.cell_index(x)]));
            }
    }
    SECTION("recursion") {
        for (const Partition& shape : {Partition({2}), Partition({2, 1}), Partition({3, 2})}) {
            Census c = f_census(shape);
            for (int k = 1; k < shape.size(); ++k)
                for (Cell x : shape.cells())
                    CHECK(delta_recursion_check(shape, c, k, x));
        }
    }
}

TEST_CASE("drop formula") {
    SECTION("k = 1 degenerates to (n-1)!") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& shape : partitions_of(n)) {
                Census c = f_census(shape);
                for (Cell x : shape.cells()) {
                    CHECK(drop_formula(shape, c, 1, x, DropVariant::harmonic_free) ==
                          factorial(n - 1));
                    CHECK(drop_formula(shape, c, 1, x, DropVariant::hook_product) ==
                          factorial(n - 1));
                }
            }
    }
    SECTION("spot values") {
        Partition p({2, 1});
        Census c = f_census(p);
        CHECK(drop_formula(p, c, 2, {1, 2}, DropVariant::harmonic_free) == 3);
        CHECK(drop_formula(p, c, 3, {1, 1}, DropVariant::harmonic_free) == 0);
    }
    SECTION("both variants match the oracle for n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& shape : partitions_of(n)) {
                Census c = f_census(shape);
                StatTables st = compute_stat_tables(shape);
                for (int k = 1; k <= n; ++k)
                    for (Cell x : shape.cells()) {
                        ExactInt oracle = st.drop[k - 1][shape.cell_index(x)];
                        CHECK(drop_formula(shape, c, k, x, DropVariant::harmonic_free) == oracle);
                        CHECK(drop_formula(shape, c, k, x, DropVariant::hook_product) == oracle);
                    }
            }
    }
}

TEST_CASE("exchange formula") {
    SECTION("spot values") {
        Partition hook({2, 1});
        Census ch = f_census(hook);
        CHECK(exchange_formula(hook, ch, 1) == 2);
        CHECK(exchange_formula(hook, ch, 2) == 0);
        Partition two({2});
        CHECK(exchange_formula(two, f_census(two), 1) == 1);
    }
    SECTION("matches the oracle, the weighted-exit identity and the recursion") {
        for (int n = 2; n <= 6; ++n)
            for (const Partition& shape : partitions_of(n)) {
                Census c = f_census(shape);
                StatTables st = compute_stat_tables(shape);
                for (int k = 1; k < n; ++k) {
                    CHECK(exchange_formula(shape, c, k) == st.exchange_of(k));
                    CHECK(exchange_delta_identity(shape, c, k) == st.exchange_of(k));
                    CHECK(exchange_recursion_check(shape, c, k));
                }
            }
    }
}

TEST_CASE("complexity formula") {
    SECTION("spot values and the summation-limit discrepancy") {
        Partition two({2});
        Census c2 = f_census(two);
        CHECK(complexity_formula(two, c2, ComplexityVariant::comp1) == make_rational(1, 2));
        CHECK(complexity_formula(two, c2, ComplexityVariant::comp2_full) ==
              make_rational(1, 2));
        CHECK(complexity_formula(two, c2, ComplexityVariant::comp2_truncated) == 0);

        Partition hook({2, 1});
        CHECK(complexity_formula(hook, f_census(hook), ComplexityVariant::comp1) ==
              make_rational(2, 3));

        Partition one({1});
        Census c1 = f_census(one);
        CHECK(complexity_formula(one, c1, ComplexityVariant::comp1) == 0);
        CHECK(complexity_formula(one, c1, ComplexityVariant::comp2_full) == 0);
        CHECK(complexity_formula(one, c1, ComplexityVariant::comp2_truncated) == 0);
    }
    SECTION("both complexity forms match the oracle for n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& shape : partitions_of(n)) {
                Census c = f_census(shape);
                ExactRational oracle = complexity_bruteforce(shape);
                CHECK(complexity_formula(shape, c, ComplexityVariant::comp1) == oracle);
                CHECK(complexity_formula(shape, c, ComplexityVariant::comp2_full) == oracle);
            }
    }
}

TEST_CASE("conjugation symmetry") {
    CHECK(complexity_bruteforce(Partition({3})) == make_rational(3, 2));
    CHECK(complexity_bruteforce(Partition({1, 1, 1})) == make_rational(3, 2));

    for (const Partition& shape :
         {Partition({2, 1}), Partition({3}), Partition({3, 1}), Partition({2, 1, 1})}) {
        FormulaReport r = symmetry_check(shape);
        CHECK(r.equal);
        CHECK(r.lhs == r.rhs);
    }
    for (int n = 1; n <= 5; ++n)
        for (const Partition& shape : partitions_of(n))
            CHECK(symmetry_check(shape).equal);
}
