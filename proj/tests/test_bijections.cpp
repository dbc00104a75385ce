#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "nps/bijections.hpp"
#include "nps/io.hpp"
#include "nps/statistics.hpp"

using namespace nps;

namespace {

Tabloid tab(const std::string& s) { return parse_tabloid(s); }

// Comparable key for an exchange-set element with its label.
using ExKey = std::tuple<std::vector<int>, int, int, int>;

ExKey key_of(const ExchangeWitness& w, int label) {
    return {w.tabloid.entries(), w.partner, w.index, label};
}

int count_syt_at_least(const Partition& shape, Cell x, int k) {
    int count = 0;
    for_each_syt(shape, [&](const Tabloid& u) {
        if (u.at(x) >= k) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("psi forward") {
    Partition two({2});
    SECTION("fixed point") {
        auto [hook, syt] = psi_forward(two, 2, {1, 2}, {tab("1,2"), 2});
        CHECK(hook.at({1, 1}) == 0);
        CHECK(hook.at({1, 2}) == 0);
        CHECK(syt == tab("1,2"));
    }
    SECTION("encode example") {
        auto [hook, syt] = psi_forward(two, 2, {1, 2}, {tab("2,1"), 2});
        CHECK(hook.at({1, 1}) == 1);
        CHECK(syt == tab("1,2"));
    }
    SECTION("rejects bad inputs") {
        CHECK_THROWS_AS(psi_forward(two, 2, {1, 2}, {tab("1,2"), 1}),
                        std::invalid_argument);  // label below k
        CHECK_THROWS_AS(psi_forward(two, 2, {1, 2}, {tab("1,2"), 3}),
                        std::invalid_argument);  // label above n
        CHECK_THROWS_AS(psi_forward(two, 2, {1, 1}, {tab("1,2"), 2}),
                        std::invalid_argument);  // 2 drops at (1,2), not (1,1)
    }
}

TEST_CASE("psi cardinality identity") {
    // |T(lambda, k->x)| (n-k+1) = prod hooks * #SYT(lambda, x >= k)
    for (int n = 1; n <= 6; ++n)
        for (const Partition& shape : partitions_of(n)) {
            StatTables st = compute_stat_tables(shape);
            for (int k = 1; k <= n; ++k)
                for (Cell x : shape.cells())
                    CHECK(st.drop[k - 1][shape.cell_index(x)] * (n - k + 1) ==
                          hook_product(shape) * count_syt_at_least(shape, x, k));
        }
}

TEST_CASE("psi inverse") {
    Partition two({2});
    HookTableau zero(two, {0, 0});
    HookTableau one(two, {1, 0});
    SECTION("spot values") {
        DropWitness w = psi_inverse(two, 2, {1, 2}, zero, tab("1,2"));
        CHECK(w.tabloid == tab("1,2"));
        CHECK(w.label == 2);
        DropWitness v = psi_inverse(two, 2, {1, 2}, one, tab("1,2"));
        CHECK(v.tabloid == tab("2,1"));
        CHECK(v.label == 2);
    }
    SECTION("rejects U(x) < k") {
        CHECK_THROWS_AS(psi_inverse(two, 2, {1, 1}, zero, tab("1,2")),
                        std::invalid_argument);
    }
    SECTION("round trips on the full domain, n <= 5") {
        for (int n = 1; n <= 5; ++n)
            for (const Partition& shape : partitions_of(n))
                for (int k = 1; k <= n; ++k)
                    for (Cell x : shape.cells()) {
                        // witness side
                        for (const Tabloid& t : drop_set(shape, k, x))
                            for (int l = k; l <= n; ++l) {
                                auto [hook, syt] = psi_forward(shape, k, x, {t, l});
                                REQUIRE(syt.at(x) >= k);
                                DropWitness back = psi_inverse(shape, k, x, hook, syt);
                                CHECK(back.tabloid == t);
                                CHECK(back.label == l);
                            }
                        // pair side
                        for_each_hook_tableau(shape, [&](const HookTableau& hook) {
                            for_each_syt(shape, [&](const Tabloid& syt) {
                                if (syt.at(x) < k) return;
                                DropWitness w = psi_inverse(shape, k, x, hook, syt);
                                REQUIRE(w.label >= k);
                                REQUIRE(w.label <= n);
                                REQUIRE(drops_at(w.tabloid, k, x));
                                auto [h2, u2] = psi_forward(shape, k, x, w);
                                CHECK(h2 == hook);
                                CHECK(u2 == syt);
                            });
                        });
                    }
    }
}

TEST_CASE("drop involution") {
    SECTION("maps the witnesses of (2) onto (1,1)") {
        Partition two({2});
        for (const std::string& s : {"1,2", "2,1"}) {
            DropWitness w = drop_involution(two, 2, {1, 2}, {tab(s), 2});
            CHECK(w.tabloid.shape() == Partition({1, 1}));
            CHECK(drops_at(w.tabloid, 2, {2, 1}));
            CHECK(w.label == 2);
        }
    }
    SECTION("applied twice is the identity, n <= 5") {
        for (int n = 1; n <= 5; ++n)
            for (const Partition& shape : partitions_of(n))
                for (int k = 1; k <= n; ++k)
                    for (Cell x : shape.cells())
                        for (const Tabloid& t : drop_set(shape, k, x))
                            for (int l = k; l <= n; ++l) {
                                DropWitness w = drop_involution(shape, k, x, {t, l});
                                REQUIRE(drops_at(w.tabloid, k, x.conjugated()));
                                DropWitness back = drop_involution(
                                    shape.conjugate(), k, x.conjugated(), w);
                                CHECK(back.tabloid == t);
                                CHECK(back.label == l);
                            }
    }
    SECTION("the tabloid projection is not injective") {
        // shape (3,2), k = 3, x = (1,2): distinct inputs, one output tabloid
        const Partition shape({3, 2});
        const int k = 3;
        const Cell x{1, 2};
        std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, int>>> fibers;
        for (const Tabloid& t : drop_set(shape, k, x))
            for (int l = k; l <= 5; ++l) {
                DropWitness w = drop_involution(shape, k, x, {t, l});
                fibers[w.tabloid.entries()].push_back({t.entries(), l});
            }
        bool collision = false;
        for (const auto& [out, ins] : fibers)
            if (ins.size() > 1) collision = true;
        CHECK(collision);
    }
}

TEST_CASE("exchange bijection psi") {
    SECTION("domain boundaries on (2)") {
        Partition two({2});
        // "2,1" drops 1 at (1,2), h'=1 and e=1: the only slot is in Ex
        CHECK_THROWS_AS(psi_exchange_forward(two, 1, tab("2,1"), 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(psi_exchange_forward(two, 1, tab("2,1"), 2),
                        std::invalid_argument);
        // "1,2" drops 1 at (1,1), h' = 0: no slots at all
        CHECK_THROWS_AS(psi_exchange_forward(two, 1, tab("1,2"), 1),
                        std::invalid_argument);
    }
    SECTION("cardinalities on (2,1), k = 1") {
        const Partition shape({2, 1});
        int a = 0, ex = 0;
        for_each_tabloid(shape, [&](const Tabloid& t) {
            const CellOrder order = CellOrder::column_major(shape);
            SortTrace trace = nps_sort(t, order);
            a += shape.cohook(drop_cell(trace, order, 1));
            ex += exchange_count(trace, 1);
        });
        CHECK(a == 4);
        CHECK(ex == 4);  // A \ Ex is empty, so B must be empty too
        ExactInt b = 0;
        for_each_syt(shape, [&](const Tabloid& u) { b += shape.cohook(u.position_of(1)); });
        CHECK(b * hook_product(shape) == 0);
    }
    SECTION("bijectivity between A \\ Ex and B, n <= 5") {
        for (int n = 1; n <= 5; ++n)
            for (const Partition& shape : partitions_of(n))
                for (int k = 1; k <= n; ++k) {
                    // forward over all of A \ Ex, collecting images
                    std::set<std::tuple<std::vector<int>, std::vector<int>, int>> images;
                    int domain = 0;
                    for_each_tabloid(shape, [&](const Tabloid& t) {
                        const CellOrder order = CellOrder::column_major(shape);
                        SortTrace trace = nps_sort(t, order);
                        Cell x = drop_cell(trace, order, k);
                        int e = exchange_count(trace, k);
                        for (int i = e + 1; i <= shape.cohook(x); ++i) {
                            ++domain;
                            BElement b = psi_exchange_forward(shape, k, t, i);
                            REQUIRE(b.slot >= 1);
                            REQUIRE(b.slot <= shape.cohook(b.syt.position_of(k)));
                            images.insert({b.hook.values(), b.syt.entries(), b.slot});
                            auto [back, j] = psi_exchange_inverse(shape, k, b);
                            CHECK(back == t);
                            CHECK(j == i);
                        }
                    });
                    CHECK(ExactInt(domain) == ExactInt(images.size()));
                    // inverse over all of B
                    int codomain = 0;
                    for_each_hook_tableau(shape, [&](const HookTableau& hook) {
                        for_each_syt(shape, [&](const Tabloid& syt) {
                            for (int j = 1; j <= shape.cohook(syt.position_of(k)); ++j) {
                                ++codomain;
                                auto [t, i] = psi_exchange_inverse(shape, k,
                                                                   {hook, syt, j});
                                BElement b = psi_exchange_forward(shape, k, t, i);
                                CHECK(b.hook == hook);
                                CHECK(b.syt == syt);
                                CHECK(b.slot == j);
                            }
                        });
                    });
                    CHECK(domain == codomain);
                }
    }
}

TEST_CASE("ping-pong") {
    SECTION("(2), k = 1: two elements onto two elements") {
        const Partition shape({2});
        auto ex = exchange_set(shape, 1);
        REQUIRE(ex.size() == 1);
        std::set<ExKey> hits;
        for (int label = 1; label <= 2; ++label) {
            auto [w, outLabel] = pingpong(shape, 1, ex[0], label);
            CHECK(w.tabloid.shape() == Partition({1, 1}));
            hits.insert(key_of(w, outLabel));
        }
        CHECK(hits.size() == 2);
    }
    SECTION("(2,1), k = 1: a permutation of a 12-element set") {
        const Partition shape({2, 1});
        std::set<ExKey> domain, image;
        for (const ExchangeWitness& e : exchange_set(shape, 1))
            for (int label = 1; label <= 3; ++label) {
                domain.insert(key_of(e, label));
                auto [w, outLabel] = pingpong(shape, 1, e, label);
                image.insert(key_of(w, outLabel));
            }
        // (n-k) eps(k) witnesses, each with n-k+1 labels: 2*2*3
        CHECK(domain.size() == 12);
        CHECK(image == domain);  // self-conjugate shape
    }
    SECTION("bijectivity, inversion and the step bound, n <= 5") {
        for (int n = 2; n <= 5; ++n)
            for (const Partition& shape : partitions_of(n)) {
                const Partition conj = shape.conjugate();
                for (int k = 1; k < n; ++k) {
                    // |A| + |B| bounds the number of f-steps in any walk
                    int sizeA = 0;
                    for_each_tabloid(shape, [&](const Tabloid& t) {
                        const CellOrder order = CellOrder::column_major(shape);
                        SortTrace trace = nps_sort(t, order);
                        sizeA += shape.cohook(drop_cell(trace, order, k));
                    });
                    int sizeB = 0;
                    for_each_hook_tableau(shape, [&](const HookTableau&) {
                        for_each_syt(shape, [&](const Tabloid& u) {
                            sizeB += shape.cohook(u.position_of(k));
                        });
                    });

                    std::set<ExKey> image;
                    int walks = 0;
                    for (const ExchangeWitness& e : exchange_set(shape, k))
                        for (int label = k; label <= n; ++label) {
                            ++walks;
                            std::vector<PingPongState> traj;
                            auto [w, outLabel] = pingpong(shape, k, e, label, &traj);
                            int fSteps = 0;
                            for (const PingPongState& s : traj)
                                if (s.shape == conj) ++fSteps;
                            CHECK(fSteps <= sizeA + sizeB);
                            REQUIRE(outLabel >= k);
                            REQUIRE(outLabel <= n);
                            image.insert(key_of(w, outLabel));
                            // the conjugate-side walk undoes this one
                            auto [back, backLabel] = pingpong(conj, k, w, outLabel);
                            CHECK(back.tabloid == e.tabloid);
                            CHECK(back.partner == e.partner);
                            CHECK(back.index == e.index);
                            CHECK(backLabel == label);
                        }
                    CHECK(ExactInt(walks) == ExactInt(image.size()));
                    CHECK(ExactInt(walks) ==
                          ExactInt(exchange_set(conj, k).size()) * (n - k + 1));
                }
            }
    }
}
