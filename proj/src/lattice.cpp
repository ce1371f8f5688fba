#include "shc/lattice.hpp"

#include <algorithm>
#include <map>

namespace shc {

Order compare(const Path& p, const Path& q) {
    require(p.size() == q.size(), "length-mismatch", "compare expects equal-length paths");
    auto hp = p.heights(), hq = q.heights();
    bool le = true, ge = true;
    for (size_t i = 0; i < hp.size(); ++i) {
        if (hp[i] > hq[i]) le = false;
        if (hp[i] < hq[i]) ge = false;
    }
    if (le && ge) return Order::equal;
    if (le) return Order::less;
    if (ge) return Order::greater;
    return Order::incomparable;
}

bool below_or_equal(const Path& p, const Path& q) {
    Order o = compare(p, q);
    return o == Order::equal || o == Order::less;
}

Path join(const Path& p, const Path& q) {
    require(p.size() == q.size(), "length-mismatch", "join expects equal-length paths");
    auto hp = p.heights(), hq = q.heights();
    for (size_t i = 0; i < hp.size(); ++i) hp[i] = std::max(hp[i], hq[i]);
    return path_from_heights(hp);
}

Path meet(const Path& p, const Path& q) {
    require(p.size() == q.size(), "length-mismatch", "meet expects equal-length paths");
    auto hp = p.heights(), hq = q.heights();
    for (size_t i = 0; i < hp.size(); ++i) hp[i] = std::min(hp[i], hq[i]);
    return path_from_heights(hp);
}

long long chain_length(const Path& p, const Path& q) {
    require(below_or_equal(p, q), "incomparable", "chain_length expects P <= Q");
    auto hp = p.heights(), hq = q.heights();
    long long sum = 0;
    for (size_t i = 0; i < hp.size(); ++i) sum += hq[i] - hp[i];
    return sum / 2;
}

std::vector<Path> covers(const Path& p) {
    std::vector<Path> out;
    auto h = p.heights();
    for (const auto& v : valley_peak_profile(p).valleys) {
        auto nh = h;
        nh[static_cast<size_t>(v.position - 1)] += 2;
        out.push_back(path_from_heights(nh));
    }
    return out;
}

Path filling(const Path& p) {
    auto h = p.heights();
    for (const auto& v : valley_peak_profile(p).valleys)
        h[static_cast<size_t>(v.position - 1)] += 2;
    return path_from_heights(h);
}

int degree(const Path& p) {
    Path cur = p;
    const Path top = Path::top(p.size());
    int d = 0;
    while (cur != top) {
        cur = filling(cur);
        ++d;
    }
    return d;
}

Int count_interval(const Path& p, const Path& q) {
    require(below_or_equal(p, q), "incomparable", "count_interval expects P <= Q");
    auto hp = p.heights(), hq = q.heights();
    std::map<int, Int> cur{{0, 1}};
    for (size_t i = 0; i < hp.size(); ++i) {
        std::map<int, Int> nxt;
        for (const auto& [h, c] : cur) {
            for (int nh : {h - 1, h + 1}) {
                if (hp[i] <= nh && nh <= hq[i]) nxt[nh] += c;
            }
        }
        cur = std::move(nxt);
    }
    Int total = 0;
    for (const auto& [h, c] : cur) total += c;
    return total;
}

Multichain::Multichain(std::vector<Path> paths) : paths_(std::move(paths)) {
    require(!paths_.empty(), "multichain", "a multichain has at least one path");
    for (size_t i = 1; i < paths_.size(); ++i)
        require(below_or_equal(paths_[i - 1], paths_[i]), "multichain",
                "multichain paths must be weakly increasing");
}

bool is_small_step(const Path& x, const Path& y) {
    return below_or_equal(x, y) && below_or_equal(y, filling(x));
}

MultichainClass classify_multichain(const Multichain& c, bool top_required) {
    if (top_required)
        require(c.paths().back() == Path::top(c.base_length()), "no-top",
                "multichain must end at u^n");
    MultichainClass out;
    out.is_chain = true;
    out.small_intervals = true;
    for (int i = 1; i <= c.length(); ++i) {
        if (c.at(i - 1) == c.at(i)) out.is_chain = false;
        if (!is_small_step(c.at(i - 1), c.at(i))) out.small_intervals = false;
    }
    out.is_saturated =
        out.is_chain && c.length() == chain_length(c.paths().front(), c.paths().back());
    return out;
}

}  // namespace shc
