#include <algorithm>

#include "shc/bijections.hpp"

namespace shc {

ShiftedTableau theta(const Multichain& c) {
    const Path& base = c.paths().front();
    int n = base.size();
    int k = c.length();
    require(!base.empty() && base.step(1) == Step::down, "theta-base",
            "theta expects a base path starting with d");
    require(c.paths().back() == Path::top(n), "theta-top", "theta expects the top element u^n");
    Shape shape = shape_of(base);
    std::vector<std::vector<int>> hs;
    hs.reserve(c.paths().size());
    for (const Path& p : c.paths()) hs.push_back(p.heights());
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.rows(); ++i) {
        std::vector<int> row;
        for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) {
            int x = n + i - j, y = n - i - j;
            int xi = 0;
            for (int z = k; z >= 0; --z) {
                if (hs[static_cast<size_t>(z)][static_cast<size_t>(x - 1)] <= y) {
                    xi = z;
                    break;
                }
            }
            row.push_back(k - xi);
        }
        rows.push_back(std::move(row));
    }
    return ShiftedTableau(std::move(shape), std::move(rows));
}

Multichain theta_inv(const ShiftedTableau& t, int k) {
    require(tableau_class(t) != TableauClass::invalid, "theta-tableau",
            "theta_inv expects a valid shifted tableau");
    require(t.max_entry() <= k, "theta-max", "theta_inv expects max(T) <= k");
    const Shape& shape = t.shape();
    Path base = path_of_shape(shape);
    int n = base.size();
    require(n > 0, "theta-shape", "theta_inv expects a nonempty shape");
    std::vector<Path> chain;
    chain.reserve(static_cast<size_t>(k) + 1);
    for (int xi = 0; xi <= k; ++xi) {
        int value = k - xi;
        KEncoding enc;
        for (int i = 1; i <= shape.rows(); ++i) {
            int len = 0;
            for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) {
                if (t.at(i, j) <= value)
                    ++len;
                else
                    break;
            }
            if (len == 0) break;
            enc.k.push_back(n - i + 1 - len);
        }
        enc.downs = static_cast<int>(enc.k.size());
        enc.k.push_back(n - enc.downs);
        chain.push_back(from_k_encoding(enc));
    }
    return Multichain(std::move(chain));
}

MultichainClass classify_via_theta(const ShiftedTableau& t, int k) {
    TableauClass cls = tableau_class(t);
    require(cls != TableauClass::invalid, "theta-tableau",
            "classification expects a valid shifted tableau");
    require(t.max_entry() <= k, "theta-max", "classification expects max(T) <= k");
    MultichainClass out;
    std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
    for (const auto& row : t.rows())
        for (int v : row) seen[static_cast<size_t>(v)] = true;
    out.is_chain = std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
    out.small_intervals = cls == TableauClass::increasing || cls == TableauClass::standard;
    out.is_saturated = cls == TableauClass::standard && k == t.shape().size();
    return out;
}

}  // namespace shc
