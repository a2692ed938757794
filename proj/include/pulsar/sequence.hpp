// The Pulsar sequence: blocks of size 1, 2, 3, ... where block i is a
// permutation of {1..i} starting with i, ending with 1, with second entry 2
// (i >= 2) and symmetric sums a_k + a_{i+1-k} = i+1.

#pragma once

#include <cstdint>
#include <vector>

namespace pulsar {

// Order-reversing involution on {1..n}: n+1-x. Throws if x is outside 1..n.
int dual(int x, int n);

// Entries a_1..a_i of block i, computed from the i x i spiral:
// a_j = 1 + (number of uncircled cells in column j). Throws for i < 1.
std::vector<int> block(int i);

// k-th term of the sequence, 1-based. Throws for k < 1.
int nth_term(std::int64_t k);

// First m terms (blocks concatenated, truncated). m = 0 gives an empty list.
std::vector<int> prefix(std::int64_t m);

// Element-wise dual(., n) of block(i). Requires 1 <= i <= n.
std::vector<int> dual_block(int i, int n);

}  // namespace pulsar
