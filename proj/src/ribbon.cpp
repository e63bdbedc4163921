#include "hopf/ribbon.hpp"

#include <algorithm>

namespace hopf {

QuasiRibbon::QuasiRibbon(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        require(!rows_[r].empty(), "quasi-ribbon row must be nonempty");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            require(rows_[r][c] >= 1, "quasi-ribbon entries must be positive");
            if (c > 0)
                require(rows_[r][c - 1] <= rows_[r][c],
                        "quasi-ribbon rows must weakly increase left to right");
        }
        // Row r+1 starts in the column of the last cell of row r, so that
        // single shared column must strictly increase downward.
        if (r > 0)
            require(rows_[r - 1].back() < rows_[r].front(),
                    "quasi-ribbon columns must strictly increase top to bottom");
    }
}

int QuasiRibbon::size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

Composition QuasiRibbon::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Composition(std::move(parts));
}

bool QuasiRibbon::operator<(const QuasiRibbon& o) const {
    if (size() != o.size()) return size() < o.size();
    return rows_ < o.rows_;
}

std::string QuasiRibbon::str() const {
    if (rows_.empty()) return "[]";
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(rows_[r][c]);
        }
        out += ']';
    }
    return out;
}

HypoplacticPair hypoplactic_rsk(const Word& w) {
    require(w.size() >= 1, "inserting an empty word");
    Permutation R = standardize(w).inverse();
    Composition I = descent_composition(R);
    // Fill the ribbon of shape I with the sorted letters of w, one column at
    // a time left to right, top to bottom inside a column.
    std::vector<int> sorted = w.letters();
    std::sort(sorted.begin(), sorted.end());
    const int r = I.length();
    std::vector<int> start(r), len(r);
    int maxcol = 0;
    for (int i = 0; i < r; ++i) {
        start[i] = i == 0 ? 1 : start[i - 1] + len[i - 1] - 1;
        len[i] = I.part(i);
        maxcol = std::max(maxcol, start[i] + len[i] - 1);
    }
    std::vector<std::vector<int>> rows(r);
    std::vector<std::vector<int>> cells(r, std::vector<int>(maxcol + 1, 0));
    size_t next = 0;
    for (int c = 1; c <= maxcol; ++c)
        for (int row = 0; row < r; ++row)  // top to bottom
            if (c >= start[row] && c < start[row] + len[row]) cells[row][c] = sorted[next++];
    HOPF_CHECK(next == sorted.size(), "ribbon filling miscounted");
    for (int row = 0; row < r; ++row)
        for (int c = start[row]; c < start[row] + len[row]; ++c)
            rows[row].push_back(cells[row][c]);
    return {QuasiRibbon(std::move(rows)), R};
}

} // namespace hopf
