#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "tableau_lab/errors.hpp"

namespace tableau_lab {

/// A strictly increasing sequence of positive integers: the column of a
/// tableau, or a set written in increasing order. May be empty.
class Column {
public:
    Column() = default;
    explicit Column(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    bool operator==(const Column&) const = default;

private:
    std::vector<int> entries_;
};

/// A Young diagram given by its column lengths, weakly decreasing
/// left-to-right. Canonical form has no trailing zero columns.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<int> column_lengths);
    static Diagram from_row_lengths(const std::vector<int>& row_lengths);

    const std::vector<int>& columns() const { return cols_; }
    int width() const { return static_cast<int>(cols_.size()); }
    /// Column length, 0 beyond the last column.
    int column_length(int i) const;
    int height() const { return cols_.empty() ? 0 : cols_.front(); }
    std::size_t cell_count() const;
    std::vector<int> row_lengths() const;
    bool empty() const { return cols_.empty(); }

    bool operator==(const Diagram&) const = default;

private:
    std::vector<int> cols_;
};

/// Ambient rectangle: w columns of height h.
struct RectShape {
    int width = 1;
    int height = 1;

    RectShape(int w, int h);
    Diagram diagram() const;
    std::size_t cell_count() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

    bool operator==(const RectShape&) const = default;
};

enum class Classification { Invalid, Semistandard, Standard };

/// A filled Young diagram, stored column-major. Construction enforces only
/// structure (positive entries, weakly decreasing column lengths); whether
/// the filling is semistandard is the job of classify_tableau.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> columns);
    static Tableau from_rows(const std::vector<std::vector<int>>& rows);

    const std::vector<std::vector<int>>& columns() const { return cols_; }
    const std::vector<int>& column(int i) const { return cols_[static_cast<std::size_t>(i)]; }
    int width() const { return static_cast<int>(cols_.size()); }
    int height() const { return cols_.empty() ? 0 : static_cast<int>(cols_.front().size()); }
    std::size_t cell_count() const;
    bool empty() const { return cols_.empty(); }
    Diagram shape() const;
    std::vector<std::vector<int>> rows() const;
    /// 0-based (column, row) access.
    int at(int col, int row) const { return cols_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)]; }

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> cols_;
};

/// Content (weight) vector: multiplicities[i] = copies of the value i+1.
/// Canonical form trims trailing zeros, so equal contents compare equal.
class ContentVector {
public:
    ContentVector() = default;
    explicit ContentVector(std::vector<int> multiplicities);

    const std::vector<int>& multiplicities() const { return mult_; }
    /// Largest value with nonzero multiplicity (0 for the empty content).
    int max_value() const { return static_cast<int>(mult_.size()); }
    int count(int value) const;
    std::size_t sum() const;

    bool operator==(const ContentVector&) const = default;

private:
    std::vector<int> mult_;
};

/// Skewed weight parameters (n, k, a): n−k copies of a followed by ak+n
/// copies of 1. Valid iff −n/a ≤ k ≤ n.
struct SkewWeight {
    int n = 1;
    int k = 0;
    int a = 1;

    SkewWeight(int n, int k, int a);

    bool operator==(const SkewWeight&) const = default;
};

Classification classify_tableau(const Tableau& t);
bool is_semistandard(const Tableau& t);
bool is_standard(const Tableau& t);

/// Human-readable description of the first semistandardness violation,
/// naming the offending cells (1-based coordinates); empty if none.
std::string describe_violation(const Tableau& t);

ContentVector content_of(const Tableau& t);

ContentVector expand_skew_weight(const SkewWeight& s);

/// □(w,h) − λ with |γ_i| = h − |λ_{w−i+1}| (λ right-padded with empty
/// columns to width w).
Diagram rect_subtract_shape(const RectShape& rect, const Diagram& lambda);

/// Column i of the result keeps the h − |λ_{w−i+1}| smallest entries of
/// column i of R, where λ is the shape being removed.
Tableau rect_subtract_tableau(const Tableau& r, const Diagram& lambda);
Tableau rect_subtract_tableau(const Tableau& r, const Tableau& q);

std::ostream& operator<<(std::ostream& os, const Column& c);
std::ostream& operator<<(std::ostream& os, const Diagram& d);
std::ostream& operator<<(std::ostream& os, const Tableau& t);
std::ostream& operator<<(std::ostream& os, const ContentVector& c);
std::ostream& operator<<(std::ostream& os, Classification c);

}  // namespace tableau_lab
