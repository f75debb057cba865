#pragma once

#include <vector>

#include "duocat/core.hpp"

namespace duocat {

/// A permutation of {0..n-1} as its image vector: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a o b)(i) = a[b[i]]
Perm perm_inverse(const Perm& p);
Perm adjacent_transposition(int n, int i);  // swaps i and i+1

/// Decomposes p into adjacent transpositions: p = s_{w[0]} o s_{w[1]} o ...
std::vector<int> adjacent_word(const Perm& p);

/// The permutation of {0..n-1} (n = sum of parts) that permutes contiguous
/// blocks of the given sizes the way sigma permutes {0..m-1}: block i moves
/// to the position block slot sigma[i], preserving inner order.
Perm block_permutation(const Perm& sigma, const std::vector<int>& parts);

/// All permutations of S_n (n small), in lexicographic order.
std::vector<Perm> symmetric_group(int n);

/// Compositions of n into m parts >= 0, lexicographically ascending.
std::vector<std::vector<int>> compositions(int n, int m);

/// Compositions of n into m parts >= 1, lexicographically ascending.
std::vector<std::vector<int>> positive_compositions(int n, int m);

Integer factorial(int n);
Integer multinomial(const std::vector<int>& parts);

/// A shuffle of a composition (n_1..n_m) of n: disjoint increasing position
/// sets (0-based) partitioning {0..n-1}, one per part.
struct Shuffle {
  std::vector<std::vector<int>> parts;
  bool operator==(const Shuffle&) const = default;
  /// The permutation sigma in S_n with sigma(offset_i + j) = parts[i][j]
  /// (order preserved within each part).
  Perm to_perm() const;
};

/// All shuffles of the composition, in lexicographic order of the
/// concatenated position lists. Count = multinomial(n; n_1..n_m).
std::vector<Shuffle> shuffles(const std::vector<int>& parts);

}  // namespace duocat
