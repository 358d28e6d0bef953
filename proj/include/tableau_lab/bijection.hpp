#pragma once

#include <vector>

#include "tableau_lab/complement.hpp"
#include "tableau_lab/core.hpp"
#include "tableau_lab/rsk.hpp"

namespace tableau_lab {

/// Parameters of the rectangle-to-pair bijection: ambient rectangle
/// □(width, height) and the skew parameter k with
/// −height/(width−1) ≤ k ≤ height. k = 0 selects the base bijection.
struct BijectionParams {
    int width;
    int height;
    int k;

    BijectionParams(int w, int n, int k);

    SkewWeight weight() const { return SkewWeight(height, k, width - 1); }
    /// Size m of the target symmetric group: n+k(w−1) for k ≥ 0, n−k for k < 0.
    int perm_size() const;

    bool operator==(const BijectionParams&) const = default;
};

/// 0-based cell coordinates inside a tableau.
struct Cell {
    int column = 0;
    int row = 0;

    bool operator==(const Cell&) const = default;
};

/// The high-value skew region of R (cells holding values above n−k, in
/// column-major order) and the standard tableau Q obtained by rotating it
/// 180° and relabeling x ↦ 2n + k(w−2) − x + 1.
struct SkewExtraction {
    std::vector<Cell> skew_cells;
    Tableau q;
};

SkewExtraction extract_q(const Tableau& r, const BijectionParams& params);

/// Base bijection (k = 0): R of shape □(w,n) with n copies each of w−1 and
/// of 1 maps to a standard pair (P,Q) of the same shape λ ⊢ n, width ≤ w.
TableauPair forward_base(const Tableau& r, int w, int n);
Tableau inverse_base(const TableauPair& pair, int w, int n);

struct SkewPreimage {
    Tableau r;
    Tableau m_block;

    bool operator==(const SkewPreimage&) const = default;
};

/// Generalized bijection (k ≠ 0). m_block is a standard tableau of shape
/// □(w,|k|) on [|k|w]; it becomes the top |k| rows of P.
TableauPair forward_skew(const Tableau& r, const BijectionParams& params, const Tableau& m_block);

/// Recovers (R, M) from a standard same-shape pair of width exactly w whose
/// top |k| rows of P hold exactly the values [|k|w]. A pair outside that
/// image raises MembershipError.
SkewPreimage inverse_skew(const TableauPair& pair, const BijectionParams& params);

/// All standard tableaux of shape □(w,|k|) on [|k|w], ordered
/// lexicographically by row-reading word. Size equals rect_catalan(|k|, w).
std::vector<Tableau> enumerate_m_blocks(int k, int w);

}  // namespace tableau_lab
