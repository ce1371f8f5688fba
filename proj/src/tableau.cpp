#include "shc/tableau.hpp"

#include <algorithm>

namespace shc {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "shape", "shape parts must be positive");
        require(i == 0 || parts_[i] < parts_[i - 1], "shape",
                "shape parts must be strictly decreasing");
    }
}

long long Shape::size() const {
    long long n = 0;
    for (int p : parts_) n += p;
    return n;
}

int Shape::column_depth(int j) const {
    int deep = 0;
    for (int i = 1; i <= rows() && i <= j; ++i) {
        if (contains(i, j)) deep = i;
    }
    return deep;
}

Shape shape_of(const Path& p) {
    require(!p.empty() && p.step(1) == Step::down, "shape-domain",
            "shape_of expects a nonempty path starting with d");
    int n = p.size();
    auto enc = k_encoding(p);
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(enc.downs));
    for (int i = 1; i <= enc.downs; ++i)
        parts.push_back(n - i - enc.k[static_cast<size_t>(i - 1)] + 1);
    return Shape(std::move(parts));
}

Path path_of_shape(const Shape& s) {
    if (s.empty()) return Path{};
    int n = s.part(1);
    int m = s.rows();
    KEncoding enc;
    enc.downs = m;
    for (int i = 1; i <= m; ++i) enc.k.push_back(n - i + 1 - s.part(i));
    enc.k.push_back(n - m);
    require(enc.k.front() == 0, "shape-domain", "shape does not have lambda_1 = n");
    return from_k_encoding(enc);
}

std::pair<int, int> cell_point(int n, int i, int j) {
    require(1 <= i && i <= j && j <= n, "cell-range", "cell outside any diagram with lambda_1 = n");
    return {n + i - j, n - i - j};
}

std::pair<int, int> point_cell(int n, int x, int y) {
    require((x - y) % 2 == 0, "point-parity", "point coordinates must have the same parity");
    int i = (x - y) / 2;
    int j = n - (x + y) / 2;
    require(1 <= i && i <= j && j <= n, "point-range", "point does not correspond to a cell");
    return {i, j};
}

ShiftedTableau::ShiftedTableau(Shape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    require(static_cast<int>(rows_.size()) == shape_.rows(), "tableau",
            "row count does not match shape");
    for (int i = 1; i <= shape_.rows(); ++i)
        require(static_cast<int>(rows_[static_cast<size_t>(i - 1)].size()) == shape_.part(i),
                "tableau", "row length does not match shape");
}

int ShiftedTableau::max_entry() const {
    int mx = 0;
    for (const auto& row : rows_)
        for (int v : row) mx = std::max(mx, v);
    return mx;
}

TableauClass tableau_class(const ShiftedTableau& t) {
    const Shape& s = t.shape();
    bool weak = true, strict = true;
    for (int i = 1; i <= s.rows(); ++i) {
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
            int v = t.at(i, j);
            if (v < 1) return TableauClass::invalid;
            if (s.contains(i, j - 1)) {
                if (t.at(i, j - 1) > v) weak = false;
                if (t.at(i, j - 1) >= v) strict = false;
            }
            if (s.contains(i - 1, j)) {
                if (t.at(i - 1, j) > v) weak = false;
                if (t.at(i - 1, j) >= v) strict = false;
            }
        }
    }
    if (!weak) return TableauClass::invalid;
    if (strict) {
        long long n = s.size();
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        bool standard = true;
        for (const auto& row : t.rows())
            for (int v : row) {
                if (v > n || seen[static_cast<size_t>(v)])
                    standard = false;
                else
                    seen[static_cast<size_t>(v)] = true;
            }
        if (standard) return TableauClass::standard;
        return TableauClass::increasing;
    }
    return TableauClass::weak;
}

namespace {

// Shared row-major backtracking over increasing fillings.
struct IncreasingWalker {
    const Shape& shape;
    int max_value;
    bool exact_max;
    std::vector<std::pair<int, int>> cells;
    std::vector<int> col_depth;  // per column j
    std::vector<std::vector<int>> rows;

    explicit IncreasingWalker(const Shape& s, int maxv, bool exact)
        : shape(s), max_value(maxv), exact_max(exact) {
        for (int i = 1; i <= s.rows(); ++i) {
            rows.emplace_back(static_cast<size_t>(s.part(i)), 0);
            for (int j = s.row_begin(i); j <= s.row_end(i); ++j) cells.emplace_back(i, j);
        }
        int maxcol = s.empty() ? 0 : s.row_end(1);
        col_depth.assign(static_cast<size_t>(maxcol) + 1, 0);
        for (int j = 1; j <= maxcol; ++j) col_depth[static_cast<size_t>(j)] = s.column_depth(j);
    }

    int& entry(int i, int j) { return rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)]; }

    template <typename Sink>
    void run(Sink&& sink) {
        if (shape.empty()) {
            if (!exact_max || max_value == 0) sink(rows);
            return;
        }
        if (max_value < 1) return;
        step(0, false, sink);
    }

    template <typename Sink>
    void step(size_t idx, bool max_used, Sink&& sink) {
        if (idx == cells.size()) {
            if (!exact_max || max_used) sink(rows);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = i + j - 1;
        if (shape.contains(i, j - 1)) lo = std::max(lo, entry(i, j - 1) + 1);
        if (shape.contains(i - 1, j)) lo = std::max(lo, entry(i - 1, j) + 1);
        // strictly increasing tails must still fit below max_value
        int row_slack = shape.row_end(i) - j;
        int col_slack = col_depth[static_cast<size_t>(j)] - i;
        int hi = max_value - std::max(row_slack, col_slack);
        for (int v = lo; v <= hi; ++v) {
            entry(i, j) = v;
            step(idx + 1, max_used || v == max_value, sink);
        }
        entry(i, j) = 0;
    }
};

}  // namespace

Int count_increasing(const Shape& shape, int max_value, bool exact_max) {
    Int total = 0;
    IncreasingWalker w(shape, max_value, exact_max);
    w.run([&](const auto&) { ++total; });
    return total;
}

std::vector<ShiftedTableau> enumerate_increasing(const Shape& shape, int max_value,
                                                 bool exact_max) {
    std::vector<ShiftedTableau> out;
    IncreasingWalker w(shape, max_value, exact_max);
    w.run([&](const std::vector<std::vector<int>>& rows) { out.emplace_back(shape, rows); });
    return out;
}

void for_each_increasing(const Shape& shape, int max_value, bool exact_max,
                         const std::function<void(const ShiftedTableau&)>& fn) {
    IncreasingWalker w(shape, max_value, exact_max);
    w.run([&](const std::vector<std::vector<int>>& rows) { fn(ShiftedTableau(shape, rows)); });
}

namespace {

// States of the level-set DP: row-prefix lengths p_i <= lambda_i, strictly
// decreasing while positive. {cells with t <= v} is always such a prefix set.
std::vector<std::vector<int>> weak_dp_states(const Shape& shape) {
    std::vector<std::vector<int>> states;
    std::vector<int> cur(static_cast<size_t>(shape.rows()), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > shape.rows()) {
            states.push_back(cur);
            return;
        }
        int hi = shape.part(i);
        if (i > 1) hi = std::min(hi, cur[static_cast<size_t>(i - 2)] - 1);
        cur[static_cast<size_t>(i - 1)] = 0;
        self(self, i + 1);
        for (int v = 1; v <= hi; ++v) {
            cur[static_cast<size_t>(i - 1)] = v;
            self(self, i + 1);
        }
        cur[static_cast<size_t>(i - 1)] = 0;
        return;
    };
    rec(rec, 1);
    return states;
}

bool prefix_contains(const std::vector<int>& big, const std::vector<int>& small) {
    for (size_t i = 0; i < big.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

}  // namespace

Int count_weak(const Shape& shape, int max_value) {
    if (shape.empty()) return 1;
    if (max_value < 1) return 0;
    auto states = weak_dp_states(shape);
    size_t full = 0, empty = 0;
    for (size_t s = 0; s < states.size(); ++s) {
        if (states[s] == shape.parts()) full = s;
        if (std::all_of(states[s].begin(), states[s].end(), [](int x) { return x == 0; }))
            empty = s;
    }
    std::vector<Int> cur(states.size(), 0);
    cur[empty] = 1;
    for (int v = 1; v <= max_value; ++v) {
        std::vector<Int> nxt(states.size(), 0);
        for (size_t a = 0; a < states.size(); ++a) {
            Int sum = 0;
            for (size_t b = 0; b < states.size(); ++b)
                if (cur[b] != 0 && prefix_contains(states[a], states[b])) sum += cur[b];
            nxt[a] = std::move(sum);
        }
        cur = std::move(nxt);
    }
    return cur[full];
}

Int count_standard_formula(const Shape& shape) {
    if (shape.empty()) return 1;
    Rational r = 1;
    Int nf = 1;
    for (long long t = 2; t <= shape.size(); ++t) nf *= t;
    r = nf;
    for (int p : shape.parts()) {
        Int pf = 1;
        for (int t = 2; t <= p; ++t) pf *= t;
        r /= Rational(pf);
    }
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = i + 1; j <= shape.rows(); ++j)
            r *= Rational(shape.part(i) - shape.part(j), shape.part(i) + shape.part(j));
    require(boost::multiprecision::denominator(r) == 1, "non-integral",
            "standard-count product is not an integer (implementation bug)");
    return boost::multiprecision::numerator(r);
}

}  // namespace shc
