#include "doctest.h"

#include <stdexcept>

#include <memory>
#include <set>

#include "pdrm/crt.hpp"
#include "pdrm/pd_like.hpp"

using namespace pdrm;

TEST_SUITE("crt_infoset") {

TEST_CASE("multiplicative orders") {
    CHECK(mult_order(2, 3) == 2);
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(2, 23) == 11);
    CHECK(mult_order(2, 9) == 6);
    CHECK(mult_order(2, 5) == 4);
    CHECK_THROWS_AS(mult_order(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(mult_order(4, 8), std::invalid_argument);
}

TEST_CASE("factorizations of 2^m - 1, both orientations") {
    const auto f8 = valid_factorizations(8);
    const std::vector<Factorization> expected8 = {{3, 85, 2},  {5, 51, 4},  {15, 17, 4},
                                                  {17, 15, 8}, {51, 5, 8},  {85, 3, 8}};
    CHECK(f8 == expected8);

    const auto f6 = valid_factorizations(6);
    const std::vector<Factorization> expected6 = {{7, 9, 3}, {9, 7, 6}};
    CHECK(f6 == expected6);

    for (int m : {3, 5, 7, 13}) CHECK(valid_factorizations(m).empty());  // 2^m - 1 prime
}

TEST_CASE("full-order selection follows the best-s policy") {
    CHECK(select_full_order_factorization(4) == Factorization{5, 3, 4});
    CHECK(select_full_order_factorization(6) == Factorization{9, 7, 6});
    CHECK(select_full_order_factorization(8) == Factorization{17, 15, 8});
    CHECK(select_full_order_factorization(10) == Factorization{11, 93, 10});

    CHECK(select_full_order_factorization(8, 17) == Factorization{17, 15, 8});
    CHECK(select_full_order_factorization(8, 85) == Factorization{85, 3, 8});
    CHECK_THROWS_AS(select_full_order_factorization(8, 3), std::invalid_argument);   // a = 2
    CHECK_THROWS_AS(select_full_order_factorization(8, 7), std::invalid_argument);   // not a factor
    CHECK_THROWS_AS(select_full_order_factorization(5), std::runtime_error);         // 31 prime
}

TEST_CASE("crt map is a bijection with a working inverse") {
    for (auto [r1, r2] : {std::pair<std::uint32_t, std::uint32_t>{5, 3},
                          {9, 7},
                          {23, 89},
                          {11, 93}}) {
        const CrtMap crt(r1, r2);
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (std::uint32_t i = 0; i < crt.n(); ++i) {
            const auto fw = crt.forward(i);
            CHECK(seen.insert(fw).second);
            CHECK(crt.inverse(fw.first, fw.second) == i);
        }
    }
    const CrtMap crt(5, 3);
    CHECK(crt.forward(7) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
    CHECK_THROWS_AS(CrtMap(3, 6), std::invalid_argument);
    CHECK_THROWS_AS(CrtMap(1, 15), std::invalid_argument);
}

 TEST_CASE("divisibility: m | d iff 2^m - 1 | 2^d - 1") {
    for (int m = 1; m <= 24; ++m)
        for (int d = 1; d <= 24; ++d) {
            const std::uint64_t nm = (std::uint64_t{1} << m) - 1;
            const std::uint64_t nd = (std::uint64_t{1} << d) - 1;
            CHECK((d % m == 0) == (nd % nm == 0));
        }
}

TEST_CASE("one factor of every splitting carries the full order") {
    for (int m = 3; m <= 16; ++m)
        for (const auto& f : valid_factorizations(m))
            CHECK(std::max(f.a, mult_order(2, f.r2)) == static_cast<std::uint32_t>(m));
}

TEST_CASE("gamma set bounds") {
    const GammaSet g4 = gamma_set(4, 4);
    CHECK(g4.pairs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                          {0, 0}, {1, 0}, {2, 0}, {3, 0}});
    CHECK(gamma_set(2, 4).pairs.size() == 4);
    CHECK(gamma_set(1, 6).pairs.size() == 6);
    CHECK_THROWS_AS(gamma_set(3, 4), std::invalid_argument);
}

TEST_CASE("information set for m = 4") {
    const Gf2m gf = Gf2m::make(4);
    const InformationSet info = build_info_set(gf, select_full_order_factorization(4));
    CHECK(info.exponents == std::vector<std::uint32_t>{0, 3, 6, 12});
    CHECK(info.positions == std::vector<std::uint32_t>{0, 1, 4, 7, 13});
    CHECK(info.i_prime == std::vector<std::uint32_t>{1, 4, 7, 13});
    CHECK(info.contains_zero);

    const BinMatrix gen = classical_rm1_generator(gf);
    CHECK(rank_of(select_columns(gen, info.positions)) == 5);
}

TEST_CASE("information sets for partial-order factorizations are also valid") {
    // a = 2 < m = 8: the two-block Gamma still yields an information set.
    const Gf2m gf = Gf2m::make(8);
    const InformationSet info = build_info_set(gf, Factorization{3, 85, 2});
    CHECK(info.positions.size() == 9);
    CHECK(info.exponents.size() == 8);
}

TEST_CASE("build_info_set validates its factorization") {
    const Gf2m gf = Gf2m::make(4);
    CHECK_THROWS_AS(build_info_set(gf, Factorization{7, 9, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_info_set(gf, Factorization{5, 3, 2}), std::invalid_argument);
}

TEST_CASE("dropping position 0 breaks the punctured information set") {
    const Gf2m gf = Gf2m::make(4);
    const InformationSet info = build_info_set(gf, select_full_order_factorization(4));

    // Generator of the punctured code: delete the X^0 column.
    const BinMatrix gen = classical_rm1_generator(gf);
    std::vector<std::uint32_t> keep;
    for (std::uint32_t c = 1; c < 16; ++c) keep.push_back(c);
    const BinMatrix punctured = select_columns(gen, keep);
    CHECK(rank_of(punctured) == 5);  // puncturing keeps the dimension

    std::vector<std::uint32_t> iprime_cols;
    for (auto p : info.i_prime) iprime_cols.push_back(p - 1);
    CHECK(rank_of(select_columns(punctured, iprime_cols)) < 5);
}

}  // TEST_SUITE
