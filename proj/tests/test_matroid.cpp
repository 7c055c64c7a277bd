#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hws/matroid.hpp"

using namespace hws;

static std::shared_ptr<const LinearCode> rm22(long q) {
    return std::make_shared<const LinearCode>(build_rm22(q));
}

TEST_CASE("q=2 Betti tables for all elongations") {
    auto m = Matroid(rm22(2));
    auto inv = cycle_inventory(m, InventoryMethod::SubsetScan);
    auto b0 = betti_table_from_inventory(inv, 0);
    long expect0[4][2] = {{1, 4}, {2, 6}, {3, 4}, {4, 1}};
    for (auto& [i, v] : expect0) REQUIRE(b0.at(int(i), i) == v);
    REQUIRE(b0.b.size() == 4);

    auto b1 = betti_table_from_inventory(inv, 1);
    REQUIRE(b1.at(1, 2) == 6);
    REQUIRE(b1.at(2, 3) == 8);
    REQUIRE(b1.at(3, 4) == 3);
    REQUIRE(b1.b.size() == 3);

    auto b2 = betti_table_from_inventory(inv, 2);
    REQUIRE(b2.at(1, 3) == 4);
    REQUIRE(b2.at(2, 4) == 3);
    auto b3 = betti_table_from_inventory(inv, 3);
    REQUIRE(b3.at(1, 4) == 1);
    REQUIRE(b3.b.size() == 1);
}

TEST_CASE("q=3 Betti tables for all elongations") {
    auto m = Matroid(rm22(3));
    auto inv = cycle_inventory(m, InventoryMethod::SubsetScan);
    auto b0 = betti_table_from_inventory(inv, 0);
    REQUIRE(b0.at(1, 3) == 12);
    REQUIRE(b0.at(1, 4) == 54);
    REQUIRE(b0.at(2, 5) == 324);
    REQUIRE(b0.at(3, 6) == 600);
    REQUIRE(b0.at(4, 7) == 540);
    REQUIRE(b0.at(5, 8) == 243);
    REQUIRE(b0.at(6, 9) == 44);
    REQUIRE(b0.b.size() == 7);

    auto b1 = betti_table_from_inventory(inv, 1);
    REQUIRE(b1.at(1, 5) == 126);
    REQUIRE(b1.at(2, 6) == 420);
    REQUIRE(b1.at(3, 7) == 540);
    REQUIRE(b1.at(4, 8) == 315);
    REQUIRE(b1.at(5, 9) == 70);

    auto b2 = betti_table_from_inventory(inv, 2);
    REQUIRE(b2.at(1, 6) == 84);
    REQUIRE(b2.at(2, 7) == 216);
    REQUIRE(b2.at(3, 8) == 189);
    REQUIRE(b2.at(4, 9) == 56);

    auto b3 = betti_table_from_inventory(inv, 3);
    REQUIRE(b3.at(1, 7) == 36);
    REQUIRE(b3.at(2, 8) == 63);
    REQUIRE(b3.at(3, 9) == 28);

    auto b4 = betti_table_from_inventory(inv, 4);
    REQUIRE(b4.at(1, 8) == 9);
    REQUIRE(b4.at(2, 9) == 8);

    auto b5 = betti_table_from_inventory(inv, 5);
    REQUIRE(b5.at(1, 9) == 1);
    REQUIRE(b5.b.size() == 1);
}

TEST_CASE("subset scan and subcode supports give the same inventory") {
    for (long q : {2L, 3L}) {
        auto m = Matroid(rm22(q));
        auto a = cycle_inventory(m, InventoryMethod::SubsetScan);
        auto b = cycle_inventory(m, InventoryMethod::SubcodeSupports);
        auto key = [](const Cycle& c) { return std::make_pair(c.sigma, c.nullity); };
        std::set<std::pair<uint64_t, int>> sa, sb;
        for (auto& c : a) sa.insert(key(c));
        for (auto& c : b) sb.insert(key(c));
        REQUIRE(sa == sb);
    }
}

TEST_CASE("local Moebius values agree with the global recursion") {
    auto m = Matroid(rm22(3));
    auto inv = cycle_inventory(m, InventoryMethod::SubsetScan);
    auto mu = mobius_all(inv, 0);
    std::mt19937_64 rng(7);
    std::vector<const Cycle*> pick;
    for (auto& c : inv) pick.push_back(&c);
    std::shuffle(pick.begin(), pick.end(), rng);
    for (size_t t = 0; t < 25 && t < pick.size(); ++t)
        REQUIRE(mobius_local(m, pick[t]->sigma) == mu[pick[t]->sigma]);
}

TEST_CASE("Betti numbers match reduced Euler characteristics") {
    auto code = rm22(3);
    for (int ell : {0, 1, 2}) {
        Matroid m(code, ell);
        auto inv = cycle_inventory(m, InventoryMethod::SubsetScan);
        auto mu = mobius_all(inv, ell);
        int checked = 0;
        for (auto& c : inv) {
            if (c.nullity != ell + 1 || c.cardinality > 8) continue; // small minimal cycles
            REQUIRE(abs(mu[c.sigma]) == abs(euler_characteristic(m, c.sigma)));
            if (++checked == 10) break;
        }
        REQUIRE(checked > 0);
    }
}

TEST_CASE("nullity is semimodular") {
    for (long q : {2L, 3L, 4L}) {
        auto code = rm22(q);
        for (int ell : {0, 1, 2}) {
            Matroid m(code, ell);
            std::mt19937_64 rng(42 + q + ell);
            uint64_t full = (m.ground_size() == 64) ? ~0ull : ((1ull << m.ground_size()) - 1);
            for (int t = 0; t < 400; ++t) {
                uint64_t a = rng() & full, b = rng() & full;
                int lhs = m.nullity(a | b) + m.nullity(a & b);
                int rhs = m.nullity(a) + m.nullity(b);
                REQUIRE(lhs >= rhs);
            }
        }
    }
}

TEST_CASE("nullity increase under adding one element is 0 or 1") {
    auto code = rm22(3);
    Matroid m(code);
    std::mt19937_64 rng(99);
    uint64_t full = (1ull << m.ground_size()) - 1;
    for (int t = 0; t < 300; ++t) {
        uint64_t s = rng() & full;
        int j = int(rng() % m.ground_size());
        uint64_t s2 = s | (1ull << j);
        int d = m.nullity(s2) - m.nullity(s);
        REQUIRE((d == 0 || d == 1));
    }
}

TEST_CASE("phi profile of the q=3 matroid") {
    auto m = Matroid(rm22(3));
    auto inv = cycle_inventory(m, InventoryMethod::SubsetScan);
    std::vector<BettiTable> tables;
    for (int ell = 0; ell <= 5; ++ell) tables.push_back(betti_table_from_inventory(inv, ell));
    auto phi = phi_profile(tables, 6, 9);
    REQUIRE(phi.at(0, 3) == -12);
    REQUIRE(phi.at(0, 4) == -54);
    REQUIRE(phi.at(0, 5) == 324);
    REQUIRE(phi.at(0, 6) == -600);
    REQUIRE(phi.at(0, 7) == 540);
    REQUIRE(phi.at(0, 8) == -243);
    REQUIRE(phi.at(0, 9) == 44);
    REQUIRE(phi.at(5, 9) == -1);
    REQUIRE(phi.at(6, 0) == 1); // convention: level k is the trivial profile
    REQUIRE(phi.at(-1, 5) == 0);
}

TEST_CASE("matroid constructor and elongation bounds") {
    auto code = rm22(2);
    REQUIRE_THROWS_AS(Matroid(code, -1), OutOfRangeElong);
    REQUIRE_THROWS_AS(Matroid(code, 5), OutOfRangeElong);
    Matroid m(code, 0);
    REQUIRE(m.elongate(2).ell() == 2);
    REQUIRE(m.corank() == 4);
    REQUIRE(m.elongate(4).corank() == 0);
}
