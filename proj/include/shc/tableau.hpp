#pragma once

#include <functional>
#include <utility>

#include "shc/bigint.hpp"
#include "shc/path.hpp"

namespace shc {

// Strict partition lambda_1 > ... > lambda_m > 0. The shifted diagram has
// cells {(i,j) : i in [m], i <= j <= lambda_i + i - 1}.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }
    long long size() const;
    bool empty() const { return parts_.empty(); }

    int row_begin(int i) const { return i; }
    int row_end(int i) const { return part(i) + i - 1; }  // inclusive
    bool contains(int i, int j) const {
        return 1 <= i && i <= rows() && row_begin(i) <= j && j <= row_end(i);
    }
    // Deepest row of column j, 0 if the column is empty.
    int column_depth(int j) const;

    bool operator==(const Shape&) const = default;

private:
    std::vector<int> parts_;
};

// lambda_i = n - i - k_i + 1. Defined for paths starting with d (lambda_1 = n).
Shape shape_of(const Path& p);

// Inverse of shape_of: the unique path starting with d whose shape this is
// (n = lambda_1). The empty shape maps to the empty path.
Path path_of_shape(const Shape& s);

// Cell (i,j) of a diagram with lambda_1 = n <-> lattice point (n+i-j, n-i-j).
std::pair<int, int> cell_point(int n, int i, int j);
std::pair<int, int> point_cell(int n, int x, int y);

enum class TableauClass { invalid, weak, increasing, standard };

// A filling of a shifted diagram; rows are stored left-aligned (row i's first
// entry sits in column i).
class ShiftedTableau {
public:
    ShiftedTableau() = default;
    ShiftedTableau(Shape shape, std::vector<std::vector<int>> rows);

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const {  // diagram coordinates
        return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)];
    }
    int max_entry() const;  // 0 for the empty tableau

    bool operator==(const ShiftedTableau&) const = default;

private:
    Shape shape_;
    std::vector<std::vector<int>> rows_;
};

// 'standard' implies 'increasing' implies 'weak'; the strongest class is
// returned. 'invalid' covers non-monotone fillings and non-positive entries.
TableauClass tableau_class(const ShiftedTableau& t);

// Number of increasing shifted tableaux of the shape with max(T) <= max_value,
// or max(T) == max_value when exact_max. Backtracking in row-major order.
Int count_increasing(const Shape& shape, int max_value, bool exact_max);

std::vector<ShiftedTableau> enumerate_increasing(const Shape& shape, int max_value,
                                                 bool exact_max);

// Streaming variant used by the exhaustive test suites.
void for_each_increasing(const Shape& shape, int max_value, bool exact_max,
                         const std::function<void(const ShiftedTableau&)>& fn);

// Number of weak shifted tableaux with entries in [max_value]. Computed by a
// chain DP over nested subdiagrams, so large counts stay cheap.
Int count_weak(const Shape& shape, int max_value);

// N!/(prod lambda_i!) * prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j),
// in exact rational arithmetic; asserts integrality.
Int count_standard_formula(const Shape& shape);

}  // namespace shc
