#include "hopf/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hopf {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        require(!rows_[r].empty(), "tableau row must be nonempty");
        if (r > 0)
            require(rows_[r].size() <= rows_[r - 1].size(),
                    "tableau shape must weakly decrease bottom to top");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            require(rows_[r][c] >= 1, "tableau entries must be positive");
            if (c > 0)
                require(rows_[r][c - 1] <= rows_[r][c],
                        "tableau rows must weakly increase left to right");
            if (r > 0)
                require(rows_[r][c] > rows_[r - 1][c],
                        "tableau columns must strictly increase bottom to top");
        }
    }
}

int Tableau::size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

std::vector<int> Tableau::shape() const {
    std::vector<int> sh;
    sh.reserve(rows_.size());
    for (const auto& row : rows_) sh.push_back(static_cast<int>(row.size()));
    return sh;
}

bool Tableau::is_standard() const {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v > n || seen[v]) return false;
            seen[v] = 1;
        }
    return true;
}

Word Tableau::row_word() const {
    std::vector<int> letters;
    letters.reserve(size());
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        letters.insert(letters.end(), it->begin(), it->end());
    return Word(std::move(letters));
}

std::set<int> Tableau::recoils() const {
    require(is_standard(), "recoils need a standard tableau");
    const int n = size();
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (int r = 0; r < nrows(); ++r)
        for (int v : rows_[r]) row_of[v] = r;
    std::set<int> rec;
    for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) rec.insert(i);
    return rec;
}

bool Tableau::operator<(const Tableau& o) const {
    if (size() != o.size()) return size() < o.size();
    return rows_ < o.rows_;
}

std::string Tableau::str() const {
    if (rows_.empty()) return "[]";
    std::ostringstream out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out << ',';
        out << '[';
        for (size_t c = 0; c < rows_[r].size(); ++c) out << (c ? "," : "") << rows_[r][c];
        out << ']';
    }
    return out.str();
}

Tableau parse_tableau(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "[]" || t == "[[]]" || t.empty()) return Tableau();
    // Accept both "[1,2],[3]" and "[[1,2],[3]]".
    if (t.size() >= 4 && t.rfind("[[", 0) == 0 && t.substr(t.size() - 2) == "]]")
        t = t.substr(1, t.size() - 2);
    std::vector<std::vector<int>> rows;
    size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != '[') throw parse_error("expected '[' in tableau");
        size_t close = t.find(']', pos);
        if (close == std::string::npos) throw parse_error("unterminated row in tableau");
        std::string inner = t.substr(pos + 1, close - pos - 1);
        std::vector<int> row;
        if (!inner.empty()) {
            std::istringstream in(inner);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                    }))
                    throw parse_error("bad tableau entry: '" + item + "'");
                row.push_back(std::stoi(item));
            }
        }
        rows.push_back(std::move(row));
        pos = close + 1;
        if (pos < t.size()) {
            if (t[pos] != ',') throw parse_error("expected ',' between tableau rows");
            ++pos;
        }
    }
    try {
        return Tableau(std::move(rows));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

std::pair<Tableau, Tableau> rsk(const Word& w) {
    require(w.size() >= 1, "inserting an empty word");
    std::vector<std::vector<int>> p, q;
    for (int step = 1; step <= w.size(); ++step) {
        int x = w.letters()[step - 1];
        size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q[r].push_back(step);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Word inverse_rsk(const Tableau& P, const Tableau& Q) {
    require(P.shape() == Q.shape(), "insertion pair must share a shape");
    require(Q.is_standard(), "recording tableau must be standard");
    const int n = P.size();
    std::vector<std::vector<int>> p = P.rows(), q = Q.rows();
    std::vector<int> letters(n, 0);
    for (int step = n; step >= 1; --step) {
        // Locate the cell recorded at this step; it is a corner.
        int r = -1;
        for (size_t i = 0; i < q.size(); ++i)
            if (!q[i].empty() && q[i].back() == step) {
                r = static_cast<int>(i);
                break;
            }
        HOPF_CHECK(r >= 0, "recording tableau lost a timestamp");
        int x = p[r].back();
        p[r].pop_back();
        q[r].pop_back();
        if (p[r].empty()) {
            p.pop_back();
            q.pop_back();
        }
        for (int row = r - 1; row >= 0; --row) {
            // Reverse the bump: x displaced the rightmost entry below it
            // that is strictly smaller.
            auto it = std::lower_bound(p[row].begin(), p[row].end(), x);
            HOPF_CHECK(it != p[row].begin(), "reverse insertion found no smaller entry");
            --it;
            std::swap(*it, x);
        }
        letters[step - 1] = x;
    }
    return Word(std::move(letters));
}

namespace {

void partitions_rec(int rest, int maxpart, std::vector<int>& parts,
                    std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(parts);
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(rest - p, p, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions(int n) {
    require(n >= 0, "negative partition size");
    require_scale(n <= 30, "partition enumeration capped at n = 30");
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    partitions_rec(n, n == 0 ? 1 : n, parts, out);
    return out;
}

namespace {

void check_partition(const std::vector<int>& shape) {
    for (size_t r = 0; r < shape.size(); ++r) {
        require(shape[r] >= 1, "shape parts must be positive");
        if (r > 0) require(shape[r] <= shape[r - 1], "shape must weakly decrease");
    }
}

void syt_rec(std::vector<int>& shape, int n, std::vector<std::vector<int>>& cells,
             std::vector<Tableau>& out) {
    if (n == 0) {
        out.push_back(Tableau(cells));
        return;
    }
    for (int r = static_cast<int>(shape.size()) - 1; r >= 0; --r) {
        bool corner = (r + 1 == static_cast<int>(shape.size())) || shape[r] > shape[r + 1];
        if (!corner) continue;
        cells[r][shape[r] - 1] = n;
        --shape[r];
        bool dropped = false;
        if (shape[r] == 0) {
            shape.pop_back();
            dropped = true;
        }
        syt_rec(shape, n - 1, cells, out);
        if (dropped) shape.push_back(0);
        ++shape[r];
    }
}

} // namespace

std::vector<Tableau> standard_tableaux(const std::vector<int>& shape) {
    check_partition(shape);
    int n = 0;
    for (int p : shape) n += p;
    require_scale(n <= 12, "standard tableau enumeration capped at 12 cells");
    std::vector<std::vector<int>> cells;
    for (int p : shape) cells.emplace_back(p, 0);
    std::vector<int> sh = shape;
    std::vector<Tableau> out;
    syt_rec(sh, n, cells, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void ssyt_rec(const std::vector<int>& shape, int max_letter, size_t r, size_t c,
              std::vector<std::vector<int>>& cells, std::vector<Tableau>& out) {
    if (r == shape.size()) {
        out.push_back(Tableau(cells));
        return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == static_cast<size_t>(shape[r])) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cells[r][c - 1]);
    if (r > 0) lo = std::max(lo, cells[r - 1][c] + 1);
    for (int v = lo; v <= max_letter; ++v) {
        cells[r][c] = v;
        ssyt_rec(shape, max_letter, nr, nc, cells, out);
    }
}

} // namespace

std::vector<Tableau> semistandard_tableaux(const std::vector<int>& shape, int max_letter) {
    check_partition(shape);
    require(max_letter >= 1, "need at least one letter");
    int n = 0;
    for (int p : shape) n += p;
    require_scale(n <= 12 && max_letter <= 8, "semistandard enumeration capped");
    if (shape.empty()) return {Tableau()};
    std::vector<std::vector<int>> cells;
    for (int p : shape) cells.emplace_back(p, 0);
    std::vector<Tableau> out;
    ssyt_rec(shape, max_letter, 0, 0, cells, out);
    return out;
}

std::vector<Word> plactic_class(const Word& w) {
    require_scale(w.size() <= 10, "plactic closure capped at word length 10");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{w.letters()};
    seen.insert(w.letters());
    while (!queue.empty()) {
        std::vector<int> cur = std::move(queue.back());
        queue.pop_back();
        for (size_t i = 0; i + 2 < cur.size(); ++i) {
            int a = cur[i], b = cur[i + 1], c = cur[i + 2];
            // xzy <-> zxy (x <= y < z): swap the first two of the window.
            if ((a <= c && c < b) || (b <= c && c < a)) {
                std::vector<int> next = cur;
                std::swap(next[i], next[i + 1]);
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
            // yxz <-> yzx (x < y <= z): swap the last two of the window.
            if ((b < a && a <= c) || (c < a && a <= b)) {
                std::vector<int> next = cur;
                std::swap(next[i + 1], next[i + 2]);
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& letters : seen) out.push_back(Word(letters));
    std::sort(out.begin(), out.end());
    return out;
}

Permutation hyperstandard_reading(const std::vector<int>& outer, const std::vector<int>& inner) {
    check_partition(outer);
    check_partition(inner);
    require(!outer.empty(), "empty shape");
    require(inner.size() <= outer.size(), "inner shape has too many rows");
    std::vector<int> in(outer.size(), 0);
    std::copy(inner.begin(), inner.end(), in.begin());
    const int nrows = static_cast<int>(outer.size());
    for (int r = 0; r < nrows; ++r) {
        require(in[r] < outer[r], "skew shape has an empty row");
        if (r + 1 < nrows)
            require(outer[r + 1] > in[r], "skew shape is disconnected between rows");
    }
    // Row r occupies columns in[r]+1 .. outer[r]; number the cells by columns
    // left to right, bottom to top inside each column.
    std::vector<std::vector<int>> value(nrows, std::vector<int>(outer[0] + 1, 0));
    int next = 1;
    for (int c = 1; c <= outer[0]; ++c)
        for (int r = 0; r < nrows; ++r)
            if (c > in[r] && c <= outer[r]) value[r][c] = next++;
    std::vector<int> word;
    word.reserve(next - 1);
    for (int r = nrows - 1; r >= 0; --r)
        for (int c = in[r] + 1; c <= outer[r]; ++c) word.push_back(value[r][c]);
    return Permutation(std::move(word));
}

} // namespace hopf
