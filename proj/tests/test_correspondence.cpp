#include <catch2/catch_amalgamated.hpp>

#include <hws/correspondence.hpp>

using namespace hws;

TEST_CASE("second order pair over GF(3)") {
    auto rep = verify_correspondence(3, 2, 2);
    REQUIRE(rep.direction_a);
    REQUIRE(rep.direction_b);
    REQUIRE(rep.counterexample.empty());
    REQUIRE(rep.dual_rank_affine == 6);
    REQUIRE(rep.dual_rank_proj == 6);
    REQUIRE(rep.dual_rank_affine == binomial(2 + 2, 2));
    REQUIRE(rep.n_affine == 9);
    REQUIRE(rep.n_proj == 13);
    // affine minimal set counts per nullity agree with the cycle counts of
    // the reference tables: 66 at nullity 1 (12 line complements + 54 conic
    // complements), then 126, 84, 36, 9, 1
    std::vector<size_t> counts;
    for (size_t i = 1; i < rep.minimal_affine.size(); ++i)
        counts.push_back(rep.minimal_affine[i].size());
    REQUIRE(counts == std::vector<size_t>{66, 126, 84, 36, 9, 1});
    // every witness nullity is at least the projective nullity by construction
    REQUIRE_FALSE(rep.witness_j.empty());
}

TEST_CASE("first order pair over GF(3)") {
    auto rep = verify_correspondence(3, 1, 2);
    REQUIRE(rep.ok());
    REQUIRE(rep.dual_rank_affine == 3);
    REQUIRE(rep.n_proj == 13);
}

TEST_CASE("first order pair over GF(2)") {
    auto rep = verify_correspondence(2, 1, 2);
    REQUIRE(rep.ok());
    REQUIRE(rep.n_affine == 4);
    REQUIRE(rep.n_proj == 7);
}

TEST_CASE("degenerate degree is rejected") {
    REQUIRE_THROWS_AS(verify_correspondence(2, 2, 2), DegreeTooLarge);
}

TEST_CASE("line pair with the line at infinity restricts to a nullity-3 set") {
    // a projective line pair L ∪ M with M at infinity meets the affine plane
    // in the single line L; the complement of L is a minimal nullity-3 set
    auto affine = std::make_shared<LinearCode>(build_rm_affine(3, 2, 2));
    Matroid m(affine, 0);
    uint64_t line = 0;
    for (long x = 0; x < 3; ++x) line |= 1ULL << x; // y = 0, index x + 3y
    uint64_t sigma = ((1ULL << 9) - 1) & ~line;
    REQUIRE(m.nullity(sigma) == 3);
    for (long e = 0; e < 9; ++e)
        if ((sigma >> e) & 1) REQUIRE(m.nullity(sigma & ~(1ULL << e)) < 3);
    // while the complement of two crossing affine lines is a circuit
    uint64_t lines = line;
    for (long y = 0; y < 3; ++y) lines |= 1ULL << (3 * y); // x = 0
    uint64_t sigma2 = ((1ULL << 9) - 1) & ~lines;
    REQUIRE(m.nullity(sigma2) == 1);
}
