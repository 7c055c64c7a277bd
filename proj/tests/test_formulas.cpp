#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include <hws/formulas.hpp>
#include <hws/pipeline.hpp>

using namespace hws;

TEST_CASE("closed spectra match the exact small-field tables") {
    // ground truth established independently by exhaustive subspace enumeration
    const long q2[][3] = {{0, 0, 1}, {1, 1, 4}, {1, 2, 6}, {1, 3, 4}, {1, 4, 1}, {2, 2, 6},
                          {2, 3, 16}, {2, 4, 13}, {3, 3, 4}, {3, 4, 11}, {4, 4, 1}};
    const long q3[][3] = {{0, 0, 1}, {1, 3, 12}, {1, 4, 54}, {1, 5, 54}, {1, 6, 96},
                          {1, 7, 108}, {1, 8, 27}, {1, 9, 13}, {2, 5, 126}, {2, 6, 588},
                          {2, 7, 2160}, {2, 8, 4302}, {2, 9, 3835}, {3, 6, 84}, {3, 7, 1188},
                          {3, 8, 8262}, {3, 9, 24346}, {4, 7, 36}, {4, 8, 1017}, {4, 9, 9958},
                          {5, 8, 9}, {5, 9, 355}, {6, 9, 1}};
    const long q4[][3] = {{0, 0, 1}, {1, 8, 30}, {1, 9, 160}, {1, 11, 288}, {1, 12, 280},
                          {1, 13, 480}, {1, 15, 96}, {1, 16, 31}, {2, 11, 240}, {2, 12, 1020},
                          {2, 13, 5280}, {2, 14, 18480}, {2, 15, 34672}, {2, 16, 33401},
                          {3, 12, 20}, {3, 13, 480}, {3, 14, 8640}, {3, 15, 73952},
                          {3, 16, 293713}, {4, 14, 120}, {4, 15, 5216}, {4, 16, 87757},
                          {5, 15, 16}, {5, 16, 1349}, {6, 16, 1}};
    const long q5[][3] = {{0, 0, 1}, {1, 15, 60}, {1, 16, 375}, {1, 19, 1000}, {1, 20, 660},
                          {1, 21, 1500}, {1, 24, 250}, {1, 25, 61}, {2, 19, 600}, {2, 20, 330},
                          {2, 21, 6500}, {2, 22, 30000}, {2, 23, 100500}, {2, 24, 185400},
                          {2, 25, 185101}, {3, 20, 30}, {3, 22, 2000}, {3, 23, 40500},
                          {3, 24, 420500}, {3, 25, 2095526}, {4, 23, 300}, {4, 24, 18925},
                          {4, 25, 489206}, {5, 24, 25}, {5, 25, 3881}, {6, 25, 1}};
    auto check = [](long q, const long (*rows)[3], size_t cnt) {
        auto t = fallq_spectra(q);
        REQUIRE(t.cells().size() == cnt);
        for (size_t i = 0; i < cnt; ++i) {
            CAPTURE(q, rows[i][0], rows[i][1]);
            REQUIRE(t.at(int(rows[i][0]), rows[i][1]) == rows[i][2]);
        }
    };
    check(2, q2, sizeof(q2) / sizeof(q2[0]));
    check(3, q3, sizeof(q3) / sizeof(q3[0]));
    check(4, q4, sizeof(q4) / sizeof(q4[0]));
    check(5, q5, sizeof(q5) / sizeof(q5[0]));
}

TEST_CASE("spectra row sums are Gaussian binomials") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        int k = q == 2 ? 4 : 6;
        auto t = fallq_spectra(q);
        std::map<int, BigInt> rows;
        for (const auto& [rw, v] : t.cells()) rows[rw.first] += v;
        for (int r = 0; r <= k; ++r) {
            CAPTURE(q, r);
            REQUIRE(rows[r] == gaussian_binomial(k, r, q));
        }
    }
}

TEST_CASE("closed Betti equals the pipeline for q in {7,8,9}") {
    for (long q : {7L, 8L, 9L}) {
        auto res = run_pipeline(q);
        for (int l = 0; l <= 5; ++l) {
            CAPTURE(q, l);
            REQUIRE(closed_betti(q, l) == res.tables[l]);
        }
    }
}

TEST_CASE("closed Betti equals the fixtures for q <= 5") {
    for (long q : {2L, 3L, 4L, 5L}) {
        auto fx = fixtures(q);
        for (int l = 0; l < fx.k; ++l) {
            CAPTURE(q, l);
            REQUIRE(closed_betti(q, l) == fx.tables[l]);
        }
    }
}

TEST_CASE("first order Reed-Muller closed forms match the generic pipeline") {
    for (auto [q, m] : {std::pair<long, int>{2, 2}, {3, 2}, {2, 3}}) {
        CAPTURE(q, m);
        auto code = std::make_shared<LinearCode>(build_rm1m(q, m));
        auto tables = matroid_betti_tables(code, InventoryMethod::SubsetScan);
        for (int l = 0; l <= m; ++l) {
            CAPTURE(l);
            REQUIRE(tables[l] == rm1m_betti(q, m, l));
        }
        REQUIRE(brute_force_spectra(*code, m + 1) == rm1m_spectra(q, m));
    }
}

TEST_CASE("first order spectrum obeys the q-Pascal identity") {
    // [m+1, i]_q = q^i [m, i]_q + [m, i-1]_q makes the row sums consistent
    for (long q : {2L, 3L, 4L}) {
        for (int m = 2; m <= 3; ++m) {
            auto t = rm1m_spectra(q, m);
            std::map<int, BigInt> rows;
            for (const auto& [rw, v] : t.cells()) rows[rw.first] += v;
            for (int r = 0; r <= m + 1; ++r) {
                CAPTURE(q, m, r);
                REQUIRE(rows[r] == gaussian_binomial(m + 1, r, q));
            }
        }
    }
}

TEST_CASE("hamming weights") {
    REQUIRE(hamming_weights(2) == std::vector<long>{1, 2, 3, 4});
    REQUIRE(hamming_weights(3) == std::vector<long>{3, 5, 6, 7, 8, 9});
    REQUIRE(hamming_weights(4) == std::vector<long>{8, 11, 12, 14, 15, 16});
    REQUIRE(hamming_weights(7) == std::vector<long>{35, 41, 42, 47, 48, 49});
    // they are the column minima of the spectra
    for (long q : {2L, 3L, 4L, 5L, 7L}) {
        auto t = fallq_spectra(q);
        auto hw = hamming_weights(q);
        std::map<int, long> dmin;
        for (const auto& [rw, v] : t.cells())
            if (rw.first >= 1 && (!dmin.count(rw.first) || rw.second < dmin[rw.first]))
                dmin[rw.first] = rw.second;
        for (size_t r = 1; r <= hw.size(); ++r) {
            CAPTURE(q, r);
            REQUIRE(dmin[int(r)] == hw[r - 1]);
        }
    }
}

TEST_CASE("typo ledger") {
    auto slots7 = typo_slots(7);
    REQUIRE(slots7.size() == 2);
    for (const auto& s : slots7) REQUIRE(s.printed != BigRat(s.canonical));
    // at q=7 the degree-9 misprint is not even an integer
    REQUIRE_FALSE(is_integral(slots7[0].printed));
    auto slots4 = typo_slots(4);
    REQUIRE(slots4.size() == 1);
    REQUIRE(slots4[0].canonical == fixtures(4).tables[0].at(2, 12));
    REQUIRE(typo_slots(3).empty());
}

TEST_CASE("census family counts") {
    auto c3 = nullity_census(3);
    REQUIRE(c3.lines == 12);
    REQUIRE(c3.theta == 72);
    REQUIRE(c3.triangles == 72);
    REQUIRE(c3.quads == 54);
    auto c7 = nullity_census(7);
    REQUIRE(c7.lines == 56);
    REQUIRE(c7.theta == 56 * 42);
    // quads: closed form equals the direct product / 4!
    REQUIRE(c7.quads == exact_div(BigInt(49) * 48 * 42 * 31, BigInt(24)));
}

TEST_CASE("input validation") {
    REQUIRE_THROWS_AS(fallq_spectra(6), NotPrime);
    REQUIRE_THROWS_AS(fixtures(7), NoFixtures);
    REQUIRE_THROWS_AS(closed_betti(3, 6), OutOfRangeElong);
    REQUIRE_THROWS_AS(closed_gwp(5), UnsupportedQ);
}
