#pragma once

#include <iosfwd>
#include <vector>

#include "tableau_lab/core.hpp"

namespace tableau_lab {

/// A permutation of [m] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int m);

    const std::vector<int>& values() const { return vals_; }
    int size() const { return static_cast<int>(vals_.size()); }
    int operator[](int i) const { return vals_[static_cast<std::size_t>(i)]; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& other) const { return vals_ < other.vals_; }

private:
    std::vector<int> vals_;
};

/// Insertion tableau P and recording tableau Q; standard, same shape.
struct TableauPair {
    Tableau p;
    Tableau q;

    bool operator==(const TableauPair&) const = default;
};

/// Length of the longest strictly increasing subsequence (patience piles
/// with binary search).
int lis_length(const Permutation& sigma);

/// Robinson–Schensted row insertion.
TableauPair rsk(const Permutation& sigma);

/// Inverse of rsk: reverse bumping driven by the recording tableau.
Permutation rsk_inverse(const TableauPair& pair);

/// (1,…,w) is a longest increasing subsequence: the values 1..w appear at
/// increasing positions and the LIS length is exactly w.
bool has_lis_prefix(const Permutation& sigma, int w);

/// In rsk(sigma).P, the values [kw] occupy exactly the top k rows, each of
/// length w (so the shape has width exactly w).
bool has_block_head(const Permutation& sigma, int k, int w);

/// LIS length is exactly w and [kw] splits into k pairwise-disjoint
/// increasing subsequences of length w. Exhaustive search over the
/// partitions of [kw]; an oracle for small inputs only.
bool has_disjoint_lis_block(const Permutation& sigma, int k, int w);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace tableau_lab
