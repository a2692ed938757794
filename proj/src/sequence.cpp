#include "pulsar/sequence.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "pulsar/spiral.hpp"

namespace pulsar {

namespace {

std::vector<int> compute_block(int i) {
    const SpiralPattern pattern = build_pattern(i);
    std::vector<int> entries(i);
    for (int col = 1; col <= i; ++col) {
        int uncircled = 0;
        for (int row = 2; row <= i; ++row) {
            if (!pattern.circled(row, col)) ++uncircled;
        }
        entries[col - 1] = 1 + uncircled;
    }
    return entries;
}

// Blocks are cheap but reused heavily by prefix(); cache them per index.
const std::vector<int>& cached_block(int i) {
    static std::mutex mutex;
    static std::vector<std::vector<int>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (static_cast<size_t>(i) > cache.size()) {
        cache.resize(i);
    }
    if (cache[i - 1].empty()) {
        cache[i - 1] = compute_block(i);
    }
    return cache[i - 1];
}

// Smallest i with i(i+1)/2 >= k, for k >= 1.
int block_index_for(std::int64_t k) {
    auto i = static_cast<std::int64_t>(
        std::floor((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0));
    while (i * (i + 1) / 2 < k) ++i;
    while (i > 1 && (i - 1) * i / 2 >= k) --i;
    return static_cast<int>(i);
}

}  // namespace

int dual(int x, int n) {
    if (x < 1 || x > n) {
        throw std::invalid_argument("dual: x must be in 1..n, got x=" +
                                    std::to_string(x) + " n=" + std::to_string(n));
    }
    return n + 1 - x;
}

std::vector<int> block(int i) {
    if (i < 1) {
        throw std::invalid_argument("block: index must be >= 1, got " +
                                    std::to_string(i));
    }
    return cached_block(i);
}

int nth_term(std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("nth_term: position must be >= 1, got " +
                                    std::to_string(k));
    }
    const int i = block_index_for(k);
    const std::int64_t offset = k - static_cast<std::int64_t>(i - 1) * i / 2;
    return cached_block(i)[offset - 1];
}

std::vector<int> prefix(std::int64_t m) {
    if (m < 0) {
        throw std::invalid_argument("prefix: length must be >= 0, got " +
                                    std::to_string(m));
    }
    std::vector<int> terms;
    terms.reserve(static_cast<size_t>(m));
    for (int i = 1; static_cast<std::int64_t>(terms.size()) < m; ++i) {
        const std::vector<int>& entries = cached_block(i);
        for (int value : entries) {
            terms.push_back(value);
            if (static_cast<std::int64_t>(terms.size()) == m) break;
        }
    }
    return terms;
}

std::vector<int> dual_block(int i, int n) {
    if (i > n) {
        throw std::invalid_argument("dual_block: need i <= n, got i=" +
                                    std::to_string(i) + " n=" + std::to_string(n));
    }
    std::vector<int> entries = block(i);
    for (int& value : entries) value = dual(value, n);
    return entries;
}

}  // namespace pulsar
