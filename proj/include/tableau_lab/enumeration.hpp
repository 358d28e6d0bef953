#pragma once

#include <functional>
#include <vector>

#include "tableau_lab/big_count.hpp"
#include "tableau_lab/core.hpp"
#include "tableau_lab/rsk.hpp"

namespace tableau_lab {

/// Number of semistandard tableaux of the given shape and content, by
/// pruned backtracking. Exact.
BigCount kostka(const Diagram& shape, const ContentVector& content);

/// Number of standard tableaux via the hook length formula.
BigCount count_syt_hook(const Diagram& shape);

/// s(k) = 1! 2! ··· k!.
BigCount superfactorial(int k);

/// Number of standard tableaux of the width-n, height-m rectangle:
/// (mn)! s(m−1) s(n−1) / s(m+n−1).
BigCount rect_catalan(int n, int m);

/// Visit every semistandard tableau of the given shape and content exactly
/// once, in lexicographic order of the column-major reading word.
void for_each_ssyt(const Diagram& shape, const ContentVector& content,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const Diagram& shape, const ContentVector& content);
std::vector<Tableau> enumerate_syt(const Diagram& shape);

enum class PermClass { LisAtMost, LisPrefix, BlockHead, DisjointLis };

int default_brute_force_cap();  // 9

/// Exact count over all of S_m of the permutations in the given class.
/// w is the LIS bound / prefix length / block width; k is the block height
/// (BlockHead and DisjointLis only).
BigCount count_perm_class(PermClass cls, int m, int w, int k = 1,
                          int cap = default_brute_force_cap());

void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit);

/// A set partition of [n] in arc representation with one color per arc.
/// Arcs join consecutive elements of each block.
struct ColoredArcPartition {
    struct Arc {
        int from = 0;  // 1-based, from < to
        int to = 0;

        bool operator==(const Arc&) const = default;
    };

    int ground_size = 0;
    std::vector<std::vector<int>> blocks;  // sorted blocks covering [n]
    std::vector<int> colors;               // parallel to arcs(), values in [r]

    std::vector<Arc> arcs() const;
};

bool arcs_cross(const ColoredArcPartition::Arc& a, const ColoredArcPartition::Arc& b);

/// Candidate NC_2 condition: no two arcs of the same color cross. This
/// predicate is the single definition point for the colored-noncrossing
/// model; the counter below must agree with filtering by it.
bool monochrome_noncrossing(const ColoredArcPartition& p);

/// Number of r-colored set partitions of [n] whose same-colored arcs never
/// cross. Exhaustive over partitions and colorings.
BigCount count_colored_noncrossing(int n, int r);

void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit);

}  // namespace tableau_lab
