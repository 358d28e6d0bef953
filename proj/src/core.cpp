#include "tableau_lab/core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace tableau_lab {

namespace {

std::string coord(int col, int row) {
    std::ostringstream os;
    os << "(column " << col + 1 << ", row " << row + 1 << ")";
    return os.str();
}

}  // namespace

Column::Column(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1)
            throw StructureError("column entries must be positive");
        if (i > 0 && entries_[i - 1] >= entries_[i])
            throw StructureError("column entries must be strictly increasing");
    }
}

Diagram::Diagram(std::vector<int> column_lengths) : cols_(std::move(column_lengths)) {
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (cols_[i] < 0)
            throw StructureError("column lengths must be non-negative");
        if (i > 0 && cols_[i - 1] < cols_[i])
            throw StructureError("column lengths must be weakly decreasing");
    }
    while (!cols_.empty() && cols_.back() == 0) cols_.pop_back();
}

Diagram Diagram::from_row_lengths(const std::vector<int>& row_lengths) {
    for (std::size_t i = 0; i < row_lengths.size(); ++i) {
        if (row_lengths[i] < 0)
            throw StructureError("row lengths must be non-negative");
        if (i > 0 && row_lengths[i - 1] < row_lengths[i])
            throw StructureError("row lengths must be weakly decreasing");
    }
    const int width = row_lengths.empty() ? 0 : row_lengths.front();
    std::vector<int> cols(static_cast<std::size_t>(width), 0);
    for (int len : row_lengths)
        for (int i = 0; i < len; ++i) ++cols[static_cast<std::size_t>(i)];
    return Diagram(std::move(cols));
}

int Diagram::column_length(int i) const {
    if (i < 0 || i >= width()) return 0;
    return cols_[static_cast<std::size_t>(i)];
}

std::size_t Diagram::cell_count() const {
    return static_cast<std::size_t>(std::accumulate(cols_.begin(), cols_.end(), 0LL));
}

std::vector<int> Diagram::row_lengths() const {
    std::vector<int> rows(static_cast<std::size_t>(height()), 0);
    for (int len : cols_)
        for (int j = 0; j < len; ++j) ++rows[static_cast<std::size_t>(j)];
    return rows;
}

RectShape::RectShape(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw StructureError("rectangle width and height must be positive");
}

Diagram RectShape::diagram() const {
    return Diagram(std::vector<int>(static_cast<std::size_t>(width), height));
}

Tableau::Tableau(std::vector<std::vector<int>> columns) : cols_(std::move(columns)) {
    while (!cols_.empty() && cols_.back().empty()) cols_.pop_back();
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i > 0 && cols_[i - 1].size() < cols_[i].size())
            throw StructureError("column lengths must be weakly decreasing");
        for (int v : cols_[i])
            if (v < 1) throw StructureError("tableau entries must be positive");
    }
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
    for (std::size_t j = 1; j < rows.size(); ++j)
        if (rows[j - 1].size() < rows[j].size())
            throw StructureError("row lengths must be weakly decreasing");
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    std::vector<std::vector<int>> cols(width);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) cols[i].push_back(row[i]);
    return Tableau(std::move(cols));
}

std::size_t Tableau::cell_count() const {
    std::size_t total = 0;
    for (const auto& c : cols_) total += c.size();
    return total;
}

Diagram Tableau::shape() const {
    std::vector<int> lens;
    lens.reserve(cols_.size());
    for (const auto& c : cols_) lens.push_back(static_cast<int>(c.size()));
    return Diagram(std::move(lens));
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(height()));
    for (const auto& c : cols_)
        for (std::size_t j = 0; j < c.size(); ++j) rows[j].push_back(c[j]);
    return rows;
}

ContentVector::ContentVector(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int m : mult_)
        if (m < 0) throw StructureError("multiplicities must be non-negative");
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

int ContentVector::count(int value) const {
    if (value < 1 || value > max_value()) return 0;
    return mult_[static_cast<std::size_t>(value - 1)];
}

std::size_t ContentVector::sum() const {
    return static_cast<std::size_t>(std::accumulate(mult_.begin(), mult_.end(), 0LL));
}

SkewWeight::SkewWeight(int n_, int k_, int a_) : n(n_), k(k_), a(a_) {
    if (n < 1) throw RangeError("skew weight requires n >= 1");
    if (a < 1) throw RangeError("skew weight requires a >= 1");
    if (k > n || n + static_cast<long long>(k) * a < 0)
        throw RangeError("skew weight requires -n/a <= k <= n");
}

std::string describe_violation(const Tableau& t) {
    const auto& cols = t.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        for (std::size_t j = 1; j < cols[i].size(); ++j) {
            if (cols[i][j - 1] >= cols[i][j]) {
                std::ostringstream os;
                os << "column not strictly increasing: " << coord(static_cast<int>(i), static_cast<int>(j) - 1)
                   << "=" << cols[i][j - 1] << " >= " << coord(static_cast<int>(i), static_cast<int>(j))
                   << "=" << cols[i][j];
                return os.str();
            }
        }
    }
    for (std::size_t i = 1; i < cols.size(); ++i) {
        for (std::size_t j = 0; j < cols[i].size(); ++j) {
            if (cols[i - 1][j] > cols[i][j]) {
                std::ostringstream os;
                os << "row decreases: " << coord(static_cast<int>(i) - 1, static_cast<int>(j)) << "="
                   << cols[i - 1][j] << " > " << coord(static_cast<int>(i), static_cast<int>(j)) << "="
                   << cols[i][j];
                return os.str();
            }
        }
    }
    return {};
}

Classification classify_tableau(const Tableau& t) {
    const auto& cols = t.columns();
    for (const auto& c : cols)
        for (std::size_t j = 1; j < c.size(); ++j)
            if (c[j - 1] >= c[j]) return Classification::Invalid;
    bool rows_strict = true;
    for (std::size_t i = 1; i < cols.size(); ++i) {
        for (std::size_t j = 0; j < cols[i].size(); ++j) {
            if (cols[i - 1][j] > cols[i][j]) return Classification::Invalid;
            if (cols[i - 1][j] == cols[i][j]) rows_strict = false;
        }
    }
    if (!rows_strict) return Classification::Semistandard;
    const std::size_t n = t.cell_count();
    const ContentVector content = content_of(t);
    if (content.max_value() != static_cast<int>(n)) return Classification::Semistandard;
    for (int m : content.multiplicities())
        if (m != 1) return Classification::Semistandard;
    return Classification::Standard;
}

bool is_semistandard(const Tableau& t) { return classify_tableau(t) != Classification::Invalid; }

bool is_standard(const Tableau& t) { return classify_tableau(t) == Classification::Standard; }

ContentVector content_of(const Tableau& t) {
    int max_v = 0;
    for (const auto& c : t.columns())
        for (int v : c) max_v = std::max(max_v, v);
    std::vector<int> mult(static_cast<std::size_t>(max_v), 0);
    for (const auto& c : t.columns())
        for (int v : c) ++mult[static_cast<std::size_t>(v - 1)];
    return ContentVector(std::move(mult));
}

ContentVector expand_skew_weight(const SkewWeight& s) {
    std::vector<int> mult;
    mult.reserve(static_cast<std::size_t>(s.n - s.k) + static_cast<std::size_t>(s.a * s.k + s.n));
    for (int i = 0; i < s.n - s.k; ++i) mult.push_back(s.a);
    for (int i = 0; i < s.a * s.k + s.n; ++i) mult.push_back(1);
    return ContentVector(std::move(mult));
}

Diagram rect_subtract_shape(const RectShape& rect, const Diagram& lambda) {
    if (lambda.width() > rect.width || lambda.height() > rect.height)
        throw DomainError("diagram does not fit inside the rectangle");
    std::vector<int> cols(static_cast<std::size_t>(rect.width));
    for (int i = 0; i < rect.width; ++i)
        cols[static_cast<std::size_t>(i)] = rect.height - lambda.column_length(rect.width - i - 1);
    return Diagram(std::move(cols));
}

Tableau rect_subtract_tableau(const Tableau& r, const Diagram& lambda) {
    const int w = r.width();
    const int h = r.height();
    for (const auto& c : r.columns())
        if (static_cast<int>(c.size()) != h) throw DomainError("tableau is not rectangular");
    if (lambda.width() > w || lambda.height() > h)
        throw DomainError("diagram does not fit inside the rectangle");
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) {
        const int keep = h - lambda.column_length(w - i - 1);
        const auto& src = r.column(i);
        cols[static_cast<std::size_t>(i)].assign(src.begin(), src.begin() + keep);
    }
    return Tableau(std::move(cols));
}

Tableau rect_subtract_tableau(const Tableau& r, const Tableau& q) {
    return rect_subtract_tableau(r, q.shape());
}

std::ostream& operator<<(std::ostream& os, const Column& c) {
    os << "(";
    for (int i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os << ")";
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) {
    os << "cols[";
    for (int i = 0; i < d.width(); ++i) os << (i ? "," : "") << d.columns()[static_cast<std::size_t>(i)];
    return os << "]";
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
    os << "rows[";
    const auto rows = t.rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        os << (j ? "," : "") << "(";
        for (std::size_t i = 0; i < rows[j].size(); ++i) os << (i ? "," : "") << rows[j][i];
        os << ")";
    }
    return os << "]";
}

std::ostream& operator<<(std::ostream& os, const ContentVector& c) {
    os << "(";
    for (std::size_t i = 0; i < c.multiplicities().size(); ++i)
        os << (i ? "," : "") << c.multiplicities()[i];
    return os << ")";
}

std::ostream& operator<<(std::ostream& os, Classification c) {
    switch (c) {
        case Classification::Invalid: return os << "invalid";
        case Classification::Semistandard: return os << "semistandard";
        case Classification::Standard: return os << "standard";
    }
    return os;
}

}  // namespace tableau_lab
