#include "shc/oracles.hpp"

#include <algorithm>
#include <map>

namespace shc::oracle {

namespace {

void walk_interval(const Path& p, const Path& q, const std::function<void(const Path&)>& fn) {
    auto hp = p.heights(), hq = q.heights();
    int n = p.size();
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int h) -> void {
        if (i == n) {
            fn(path_from_heights(cur));
            return;
        }
        for (int nh : {h - 1, h + 1}) {  // 'd' before 'u' keeps the order lexicographic
            if (hp[static_cast<size_t>(i)] <= nh && nh <= hq[static_cast<size_t>(i)]) {
                cur[static_cast<size_t>(i)] = nh;
                self(self, i + 1, nh);
            }
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<Path> enumerate_interval(const Path& p, const Path& q) {
    require(below_or_equal(p, q), "incomparable", "interval enumeration expects P <= Q");
    std::vector<Path> out;
    walk_interval(p, q, [&](const Path& r) { out.push_back(r); });
    return out;
}

std::vector<Multichain> enumerate_min_chains(const Path& p) {
    int d = degree(p);
    const Path top = Path::top(p.size());
    std::vector<Multichain> out;
    std::vector<Path> acc{p};
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (acc.back() == top) out.emplace_back(acc);
            return;
        }
        walk_interval(acc.back(), filling(acc.back()), [&](const Path& q) {
            if (q == acc.back()) return;       // steps are strict
            if (degree(q) != remaining - 1) return;
            acc.push_back(q);
            self(self, remaining - 1);
            acc.pop_back();
        });
    };
    rec(rec, d);
    return out;
}

Int f_bruteforce(const Path& p) { return Int(enumerate_min_chains(p).size()); }

void for_each_multichain(const Path& p, int k, const std::function<void(const Multichain&)>& fn) {
    const Path top = Path::top(p.size());
    std::vector<Path> acc{p};
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (acc.back() == top) fn(Multichain(acc));
            return;
        }
        walk_interval(acc.back(), top, [&](const Path& q) {
            acc.push_back(q);
            self(self, remaining - 1);
            acc.pop_back();
        });
    };
    if (k == 0) {
        if (p == top) fn(Multichain(acc));
        return;
    }
    rec(rec, k);
}

std::vector<Multichain> enumerate_multichains(const Path& p, int k) {
    std::vector<Multichain> out;
    for_each_multichain(p, k, [&](const Multichain& c) { out.push_back(c); });
    return out;
}

Int count_multichains(const Path& p, int k) {
    int n = p.size();
    std::vector<Path> all = all_paths(n);
    std::vector<std::vector<int>> hs;
    hs.reserve(all.size());
    for (const Path& q : all) hs.push_back(q.heights());
    auto leq = [&](size_t a, size_t b) {
        for (int i = 0; i < n; ++i)
            if (hs[a][static_cast<size_t>(i)] > hs[b][static_cast<size_t>(i)]) return false;
        return true;
    };
    size_t top = 0, start = 0;
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i] == Path::top(n)) top = i;
        if (all[i] == p) start = i;
    }
    if (k == 0) return start == top ? 1 : 0;
    std::vector<Int> cur(all.size(), 0);
    cur[top] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<Int> nxt(all.size(), 0);
        for (size_t x = 0; x < all.size(); ++x) {
            Int sum = 0;
            for (size_t y = 0; y < all.size(); ++y)
                if (cur[y] != 0 && leq(x, y)) sum += cur[y];
            nxt[x] = std::move(sum);
        }
        cur = std::move(nxt);
    }
    return cur[start];
}

std::vector<std::pair<Path, std::vector<Multichain>>> enumerate_type_v_brute(const Path& a) {
    require(is_dyck(a), "not-dyck", "type-V enumeration expects a Dyck path");
    std::map<Path, std::vector<Multichain>> grouped;
    if (a.empty()) {
        grouped[a].emplace_back(std::vector<Path>{a});
    } else {
        int h = valley_peak_profile(a).high_valley.value();
        std::vector<Path> dycks = all_dyck_paths(a.downs());
        std::sort(dycks.begin(), dycks.end());
        auto valleys_up_to = [](const Path& q, int hmax) {
            std::vector<PointHeight> out;
            for (const auto& pt : valley_peak_profile(q).valleys)
                if (pt.height <= hmax) out.push_back(pt);
            return out;
        };
        std::vector<Path> acc{a};
        auto rec = [&](auto&& self, int j) -> void {
            if (j > h) {
                grouped[acc.back()].emplace_back(acc);
                return;
            }
            for (const Path& q : dycks) {
                if (!below_or_equal(acc.back(), q)) continue;
                if (valleys_up_to(acc.back(), h - j) != valleys_up_to(q, h - j)) continue;
                acc.push_back(q);
                self(self, j + 1);
                acc.pop_back();
            }
        };
        rec(rec, 1);
    }
    std::vector<std::pair<Path, std::vector<Multichain>>> out;
    for (auto& [b, chains] : grouped) out.emplace_back(b, std::move(chains));
    return out;
}

void for_each_tableau(const Shape& shape, int max_value, TabKind kind,
                      const std::function<void(const ShiftedTableau&)>& fn) {
    if (shape.empty()) {
        if (kind != TabKind::standard || shape.size() == 0) fn(ShiftedTableau(shape, {}));
        return;
    }
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.rows(); ++i)
        rows.emplace_back(static_cast<size_t>(shape.part(i)), 0);
    auto entry = [&](int i, int j) -> int& {
        return rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)];
    };
    long long n_cells = shape.size();
    if (kind == TabKind::standard) {
        // place 1..N, each into any cell whose left and upper neighbours are set
        auto rec = [&](auto&& self, int v) -> void {
            if (v > n_cells) {
                fn(ShiftedTableau(shape, rows));
                return;
            }
            for (auto [i, j] : cells) {
                if (entry(i, j) != 0) continue;
                if (shape.contains(i, j - 1) && entry(i, j - 1) == 0) continue;
                if (shape.contains(i - 1, j) && entry(i - 1, j) == 0) continue;
                entry(i, j) = v;
                self(self, v + 1);
                entry(i, j) = 0;
            }
        };
        rec(rec, 1);
        return;
    }
    bool strict = kind == TabKind::increasing;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            fn(ShiftedTableau(shape, rows));
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= max_value; ++v) {
            if (shape.contains(i, j - 1) &&
                (strict ? entry(i, j - 1) >= v : entry(i, j - 1) > v))
                continue;
            if (shape.contains(i - 1, j) &&
                (strict ? entry(i - 1, j) >= v : entry(i - 1, j) > v))
                continue;
            entry(i, j) = v;
            self(self, idx + 1);
        }
        entry(i, j) = 0;
    };
    rec(rec, 0);
}

std::vector<ShiftedTableau> enumerate_tableaux(const Shape& shape, int max_value, TabKind kind) {
    std::vector<ShiftedTableau> out;
    for_each_tableau(shape, max_value, kind, [&](const ShiftedTableau& t) { out.push_back(t); });
    return out;
}

Int count_standard_peel(const Shape& shape) {
    std::map<std::vector<int>, Int> memo;
    auto rec = [&](auto&& self, const std::vector<int>& parts) -> Int {
        if (parts.empty()) return 1;
        auto it = memo.find(parts);
        if (it != memo.end()) return it->second;
        Int total = 0;
        int m = static_cast<int>(parts.size());
        for (int i = 0; i < m; ++i) {
            // remove the last cell of row i+1; valid only at outer corners
            std::vector<int> next = parts;
            next[static_cast<size_t>(i)] -= 1;
            if (i + 1 < m && next[static_cast<size_t>(i)] <= parts[static_cast<size_t>(i + 1)])
                continue;  // would break strictness or not be a corner
            if (next[static_cast<size_t>(i)] == 0) {
                if (i != m - 1) continue;
                next.pop_back();
            }
            total += self(self, next);
        }
        memo[parts] = total;
        return total;
    };
    return rec(rec, shape.parts());
}

}  // namespace shc::oracle
