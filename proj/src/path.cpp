#include "shc/path.hpp"

#include <algorithm>

namespace shc {

Path Path::parse(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == 'u' || c == 'U') {
            steps.push_back(Step::up);
        } else if (c == 'd' || c == 'D') {
            steps.push_back(Step::down);
        } else {
            fail("parse", "invalid step character at index " + std::to_string(i) +
                              ": expected 'u' or 'd'");
        }
    }
    return Path(std::move(steps));
}

std::string Path::word() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::up ? 'u' : 'd');
    return out;
}

int Path::ups() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::up));
}

std::vector<int> Path::heights() const {
    std::vector<int> h;
    h.reserve(steps_.size());
    int cur = 0;
    for (Step s : steps_) {
        cur += s == Step::up ? 1 : -1;
        h.push_back(cur);
    }
    return h;
}

int Path::height(int i) const {
    int cur = 0;
    for (int t = 1; t <= i; ++t) cur += steps_[static_cast<size_t>(t - 1)] == Step::up ? 1 : -1;
    return cur;
}

int Path::min_height() const {
    int cur = 0, mn = 0;  // the origin h_0 = 0 counts
    for (Step s : steps_) {
        cur += s == Step::up ? 1 : -1;
        mn = std::min(mn, cur);
    }
    return mn;
}

Path Path::subpath(int from, int to) const {
    std::vector<Step> s(steps_.begin() + (from - 1), steps_.begin() + to);
    return Path(std::move(s));
}

Path Path::concat(const Path& other) const {
    std::vector<Step> s = steps_;
    s.insert(s.end(), other.steps_.begin(), other.steps_.end());
    return Path(std::move(s));
}

Path Path::runs(int n_up, int n_down) {
    std::vector<Step> s;
    s.reserve(static_cast<size_t>(n_up + n_down));
    s.insert(s.end(), static_cast<size_t>(n_up), Step::up);
    s.insert(s.end(), static_cast<size_t>(n_down), Step::down);
    return Path(std::move(s));
}

Path path_from_heights(const std::vector<int>& h) {
    std::vector<Step> s;
    s.reserve(h.size());
    int prev = 0;
    for (int x : h) {
        require(x == prev + 1 || x == prev - 1, "heights",
                "adjacent heights must differ by exactly 1");
        s.push_back(x > prev ? Step::up : Step::down);
        prev = x;
    }
    return Path(std::move(s));
}

KEncoding k_encoding(const Path& p) {
    KEncoding enc;
    enc.downs = p.downs();
    enc.k.reserve(static_cast<size_t>(enc.downs) + 1);
    int ups = 0;
    for (Step s : p.steps()) {
        if (s == Step::up) {
            ++ups;
        } else {
            enc.k.push_back(ups);
        }
    }
    enc.k.push_back(ups);
    return enc;
}

Path from_k_encoding(const KEncoding& enc) {
    require(static_cast<int>(enc.k.size()) == enc.downs + 1, "k-encoding",
            "k must have m+1 entries");
    require(enc.k.empty() || enc.k.front() >= 0, "k-encoding", "k entries must be nonnegative");
    require(std::is_sorted(enc.k.begin(), enc.k.end()), "k-encoding",
            "k must be weakly increasing");
    std::vector<Step> s;
    int prev = 0;
    for (int i = 0; i < enc.downs; ++i) {
        s.insert(s.end(), static_cast<size_t>(enc.k[static_cast<size_t>(i)] - prev), Step::up);
        s.push_back(Step::down);
        prev = enc.k[static_cast<size_t>(i)];
    }
    s.insert(s.end(), static_cast<size_t>(enc.k.back() - prev), Step::up);
    return Path(std::move(s));
}

ValleyPeakProfile valley_peak_profile(const Path& p) {
    ValleyPeakProfile out;
    int n = p.size();
    auto h = p.heights();
    for (int i = 1; i <= n; ++i) {
        bool last_of_run = i == n || p.step(i) != p.step(i + 1);
        if (!last_of_run) continue;
        PointHeight pt{i, h[static_cast<size_t>(i - 1)]};
        if (p.step(i) == Step::down) {
            out.valleys.push_back(pt);
        } else {
            out.peaks.push_back(pt);
        }
    }
    for (const auto& v : out.valleys) {
        if (!out.low_valley || v.height < *out.low_valley) out.low_valley = v.height;
        if (!out.high_valley || v.height > *out.high_valley) out.high_valley = v.height;
    }
    return out;
}

PathClass classify(const Path& p) {
    PathClass c;
    c.is_dyck_prefix = true;
    int cur = 0;
    for (int i = 1; i <= p.size(); ++i) {
        cur += p.step(i) == Step::up ? 1 : -1;
        if (cur < 0) c.is_dyck_prefix = false;
        if (cur == 0) c.return_points.push_back(i);
    }
    c.is_dyck_suffix = p.min_height() == p.final_height();
    c.is_dyck = c.is_dyck_prefix && p.final_height() == 0;
    if (!c.is_dyck_prefix) c.return_points.clear();
    return c;
}

bool is_dyck(const Path& p) { return classify(p).is_dyck; }
bool is_dyck_prefix(const Path& p) { return classify(p).is_dyck_prefix; }
bool is_dyck_suffix(const Path& p) { return p.min_height() == p.final_height(); }

std::vector<Path> decompose_prime(const Path& dyck) {
    require(is_dyck(dyck), "not-dyck", "decompose_prime expects a Dyck path");
    std::vector<Path> out;
    int depth = 0, start = 1;
    for (int i = 1; i <= dyck.size(); ++i) {
        depth += dyck.step(i) == Step::up ? 1 : -1;
        if (depth == 0) {
            out.push_back(dyck.subpath(start + 1, i - 1));
            start = i + 1;
        }
    }
    return out;
}

std::vector<Path> decompose_prefix(const Path& p) {
    require(is_dyck_prefix(p), "not-dyck-prefix", "decompose_prefix expects a Dyck prefix");
    auto h = p.heights();
    h.insert(h.begin(), 0);  // h[0] = 0
    int k = p.final_height();
    std::vector<Path> out;
    int pos = 0;  // index into points
    for (int level = 0; level <= k; ++level) {
        int last = 0;
        for (int i = 0; i < static_cast<int>(h.size()); ++i) {
            if (h[static_cast<size_t>(i)] == level) last = i;
        }
        out.push_back(pos + 1 <= last ? p.subpath(pos + 1, last) : Path{});
        pos = last + 1;  // skip the separating upstep
    }
    return out;
}

std::vector<Path> decompose_suffix(const Path& p) {
    require(is_dyck_suffix(p), "not-dyck-suffix", "decompose_suffix expects a Dyck suffix");
    auto h = p.heights();
    h.insert(h.begin(), 0);
    int k = -p.final_height();
    std::vector<Path> out;
    int pos = 0;
    for (int level = 1; level <= k; ++level) {
        int first = 0;
        for (int i = 0; i < static_cast<int>(h.size()); ++i) {
            if (h[static_cast<size_t>(i)] == -level) {
                first = i;
                break;
            }
        }
        out.push_back(pos + 1 <= first - 1 ? p.subpath(pos + 1, first - 1) : Path{});
        pos = first;  // the separating downstep ends here
    }
    out.push_back(pos + 1 <= p.size() ? p.subpath(pos + 1, p.size()) : Path{});
    return out;
}

Path strip_leading_ups(const Path& p) {
    int i = 1;
    while (i <= p.size() && p.step(i) == Step::up) ++i;
    return i > p.size() ? Path{} : p.subpath(i, p.size());
}

std::vector<Path> all_paths(int n) {
    std::vector<Path> out;
    out.reserve(static_cast<size_t>(1) << n);
    std::vector<Step> cur(static_cast<size_t>(n), Step::down);
    // lexicographic: 'd' < 'u', so count in binary with d=0, u=1
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        for (int i = 0; i < n; ++i)
            cur[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1 ? Step::up : Step::down;
        out.emplace_back(cur);
    }
    return out;
}

std::vector<Path> all_dyck_paths(int m) {
    std::vector<Path> out;
    std::vector<Step> cur;
    auto rec = [&](auto&& self, int ups_left, int downs_left, int depth) -> void {
        if (ups_left == 0 && downs_left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (downs_left > 0 && depth > 0) {
            cur.push_back(Step::down);
            self(self, ups_left, downs_left - 1, depth - 1);
            cur.pop_back();
        }
        if (ups_left > 0) {
            cur.push_back(Step::up);
            self(self, ups_left - 1, downs_left, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, m, m, 0);
    return out;
}

}  // namespace shc
