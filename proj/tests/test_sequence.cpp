#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pulsar/construct.hpp"
#include "pulsar/sequence.hpp"

using pulsar::block;
using pulsar::dual;
using pulsar::dual_block;
using pulsar::nth_term;
using pulsar::prefix;

TEST_CASE("dual values and involution") {
    CHECK(dual(2, 5) == 4);
    CHECK(dual(1, 5) == 5);
    CHECK(dual(dual(3, 7), 7) == 3);
    for (int n = 1; n <= 20; ++n) {
        for (int x = 1; x <= n; ++x) {
            CHECK(dual(dual(x, n), n) == x);
        }
    }
    CHECK_THROWS_AS(dual(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(dual(6, 5), std::invalid_argument);
}

TEST_CASE("known blocks") {
    CHECK(block(1) == std::vector<int>{1});
    CHECK(block(4) == std::vector<int>{4, 2, 3, 1});
    CHECK(block(7) == std::vector<int>{7, 2, 5, 4, 3, 6, 1});
    // Block 8 from the column-count rule; the transcription 8,2,6,5,6,3,7,1
    // repeats a 6 and is rejected by the block invariants below.
    CHECK(block(8) == std::vector<int>{8, 2, 6, 4, 5, 3, 7, 1});
    CHECK_THROWS_AS(block(0), std::invalid_argument);
}

TEST_CASE("block invariants up to 200") {
    for (int i = 1; i <= 200; ++i) {
        CAPTURE(i);
        const std::vector<int> entries = block(i);
        REQUIRE(entries.size() == static_cast<size_t>(i));
        CHECK(entries.front() == i);
        CHECK(entries.back() == 1);
        // Position 2 is forced to 2 once it is not also the final position.
        if (i >= 3) CHECK(entries[1] == 2);
        std::vector<int> sorted = entries;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(i);
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(sorted == expected);
        for (int k = 0; k < i; ++k) {
            CHECK(entries[k] + entries[i - 1 - k] == i + 1);
        }
    }
}

TEST_CASE("term positions") {
    CHECK(nth_term(1) == 1);
    CHECK(nth_term(11) == 5);
    CHECK(nth_term(6) == 1);
    CHECK(nth_term(7) == 4);
    CHECK_THROWS_AS(nth_term(0), std::invalid_argument);

    // 1's sit at the triangular positions and are followed by i+1.
    for (std::int64_t i = 1; i <= 60; ++i) {
        CHECK(nth_term(i * (i + 1) / 2) == 1);
        CHECK(nth_term(i * (i + 1) / 2 + 1) == static_cast<int>(i) + 1);
    }
}

TEST_CASE("prefix") {
    CHECK(prefix(10) == std::vector<int>{1, 2, 1, 3, 2, 1, 4, 2, 3, 1});
    CHECK(prefix(0).empty());
    const std::vector<int> first28 = {1, 2, 1, 3, 2, 1, 4, 2, 3, 1,
                                      5, 2, 3, 4, 1, 6, 2, 4, 3, 5,
                                      1, 7, 2, 5, 4, 3, 6, 1};
    CHECK(prefix(28) == first28);
}

TEST_CASE("prefix restricted to a block equals that block") {
    const std::vector<int> terms = prefix(210);  // blocks 1..20
    for (int i = 1; i <= 20; ++i) {
        const std::int64_t start = static_cast<std::int64_t>(i - 1) * i / 2;
        const std::vector<int> slice(terms.begin() + start,
                                     terms.begin() + start + i);
        CHECK(slice == block(i));
    }
}

TEST_CASE("prefix / nth_term agreement") {
    const std::vector<int> terms = prefix(120);
    for (std::int64_t k = 1; k <= 120; ++k) {
        CHECK(terms[k - 1] == nth_term(k));
    }
}

TEST_CASE("dual blocks") {
    CHECK(dual_block(5, 5) == std::vector<int>{1, 4, 3, 2, 5});
    CHECK(dual_block(1, 5) == std::vector<int>{5});
    CHECK(dual_block(2, 2) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(dual_block(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(dual_block(0, 5), std::invalid_argument);
}

TEST_CASE("block equals the first column of the next size's solution") {
    for (int i = 1; i <= 16; ++i) {
        const pulsar::Grid grid = pulsar::construct_direct(i + 1);
        std::vector<int> first_col;
        for (int row = 2; row <= i + 1; ++row) {
            first_col.push_back(grid.at(row, 1));
        }
        CHECK(first_col == block(i));
    }
}
