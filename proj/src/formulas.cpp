#include "shc/formulas.hpp"

#include <algorithm>
#include <map>

namespace shc {

namespace {

// All R with lo <= R <= hi, lexicographic word order ('d' < 'u').
void for_each_between(const Path& lo, const Path& hi, const std::function<void(const Path&)>& fn) {
    auto hl = lo.heights(), hh = hi.heights();
    int n = lo.size();
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int h) -> void {
        if (i == n) {
            fn(path_from_heights(cur));
            return;
        }
        for (int nh : {h - 1, h + 1}) {
            if (hl[static_cast<size_t>(i)] <= nh && nh <= hh[static_cast<size_t>(i)]) {
                cur[static_cast<size_t>(i)] = nh;
                self(self, i + 1, nh);
            }
        }
    };
    rec(rec, 0, 0);
}

bool same_valleys_up_to(const Path& x, const Path& y, int hmax) {
    auto keep = [hmax](const Path& p) {
        std::vector<PointHeight> out;
        for (const auto& pt : valley_peak_profile(p).valleys)
            if (pt.height <= hmax) out.push_back(pt);
        return out;
    };
    return keep(x) == keep(y);
}

void for_each_type_v(const Path& a, const std::function<void(const std::vector<Path>&)>& fn) {
    if (a.empty()) {
        std::vector<Path> trivial{a};
        fn(trivial);
        return;
    }
    int h = valley_peak_profile(a).high_valley.value();  // nonempty Dyck has a valley
    int m = a.downs();
    Path top = Path::runs(m, m);
    std::vector<Path> chain{a};
    auto rec = [&](auto&& self, int j) -> void {
        if (j > h) {
            fn(chain);
            return;
        }
        for_each_between(chain.back(), top, [&](const Path& q) {
            if (same_valleys_up_to(chain.back(), q, h - j)) {
                chain.push_back(q);
                self(self, j + 1);
                chain.pop_back();
            }
        });
    };
    rec(rec, 1);
}

}  // namespace

Int I_count(const Path& a) {
    require(is_dyck(a), "not-dyck", "I expects a Dyck path");
    int m = a.downs();
    return count_interval(a, Path::runs(m, m));
}

Int J_count(const Path& p) { return count_interval(p, Path::top(p.size())); }

Int V_count(const Path& a, const Path& b) {
    require(is_dyck(a) && is_dyck(b), "not-dyck", "V expects Dyck paths");
    require(a.size() == b.size(), "length-mismatch", "V expects equal-length paths");
    Int total = 0;
    for_each_type_v(a, [&](const std::vector<Path>& chain) {
        if (chain.back() == b) ++total;
    });
    return total;
}

std::vector<std::pair<Path, std::vector<Multichain>>> enumerate_type_v(const Path& a) {
    require(is_dyck(a), "not-dyck", "type-V enumeration expects a Dyck path");
    std::map<Path, std::vector<Multichain>> grouped;
    for_each_type_v(a, [&](const std::vector<Path>& chain) {
        grouped[chain.back()].emplace_back(chain);
    });
    std::vector<std::pair<Path, std::vector<Multichain>>> out;
    for (auto& [b, chains] : grouped) out.emplace_back(b, std::move(chains));
    return out;
}

Int f_by_tableaux(const Path& p) {
    Path q = strip_leading_ups(p);
    if (q.empty()) return 1;
    int delta = q.size() - 1 - valley_peak_profile(q).low_valley.value();
    return count_increasing(shape_of(q), delta, /*exact_max=*/true);
}

Int prop2_rhs(const Path& a) {
    require(is_dyck(a), "not-dyck", "the prime-Dyck sum expects a Dyck path");
    int m = a.downs();
    Path top = Path::runs(m, m);
    // group type-V chains by endpoint s, multiply by I(s)
    std::map<Path, Int> v_by_endpoint;
    for_each_type_v(a, [&](const std::vector<Path>& chain) { ++v_by_endpoint[chain.back()]; });
    Int total = 0;
    for (const auto& [s, v] : v_by_endpoint) total += v * I_count(s);
    return total;
}

Int prop3_rhs(const Path& p, int limit) {
    require(is_dyck_prefix(p), "not-dyck-prefix", "the Dyck-prefix sum expects a Dyck prefix");
    require(p.size() + 2 <= limit, "limit-exceeded",
            "the Dyck-prefix sum is capped at |duP| = " + std::to_string(limit));
    std::vector<Path> comps = decompose_prefix(p);
    int k = static_cast<int>(comps.size()) - 1;
    // endpoint-grouped V counts per component
    std::vector<std::vector<std::pair<Path, Int>>> choices;
    for (const Path& a : comps) {
        std::map<Path, Int> v_by_endpoint;
        for_each_type_v(a, [&](const std::vector<Path>& chain) { ++v_by_endpoint[chain.back()]; });
        choices.emplace_back(v_by_endpoint.begin(), v_by_endpoint.end());
    }
    Int total = 0;
    std::vector<const Path*> s(static_cast<size_t>(k) + 1, nullptr);
    // inner sum over (V_i), i in [k+1], V_{k+1} = eps, V_i >= u s_i V_{i+1}
    auto sum_v = [&](auto&& self, int i, const Path& v_next) -> Int {
        if (i == 0) return J_count(s[0]->concat(v_next));
        Path base = Path::runs(1, 0).concat(*s[static_cast<size_t>(i)]).concat(v_next);
        Int acc = 0;
        for_each_between(base, Path::top(base.size()),
                         [&](const Path& vi) { acc += self(self, i - 1, vi); });
        return acc;
    };
    auto rec = [&](auto&& self, int l, const Int& coeff) -> void {
        if (l > k) {
            total += coeff * sum_v(sum_v, k, Path{});
            return;
        }
        for (const auto& [endpoint, v] : choices[static_cast<size_t>(l)]) {
            s[static_cast<size_t>(l)] = &endpoint;
            self(self, l + 1, coeff * v);
        }
    };
    rec(rec, 0, Int(1));
    return total;
}

Int saturated_count(const Path& p) {
    require(p != Path::top(p.size()), "saturated-top",
            "u^n has an empty shape; no saturated chain to count");
    return count_standard_formula(shape_of(strip_leading_ups(p)));
}

Int multichain_count_exact(const Path& p, int k, int mu) {
    require(k >= 1, "parameter-range", "k must be at least 1");
    require(1 <= mu && mu <= k + 1, "parameter-range", "mu must lie in [1, k+1]");
    int exact_max = k - mu + 1;
    Path q = strip_leading_ups(p);
    if (q.empty()) return exact_max == 0 ? 1 : 0;
    if (exact_max <= 0) return 0;
    Shape shape = shape_of(q);
    return count_weak(shape, exact_max) - count_weak(shape, exact_max - 1);
}

// ---- the f recursion ----

namespace {

struct FRecursion {
    int prop3_limit;
    std::vector<std::string>* trace;

    void log(const std::string& step) { trace->push_back(step); }

    Int run(Path p) {
        Path stripped = strip_leading_ups(p);
        if (stripped.size() != p.size())
            log("strip u^" + std::to_string(p.size() - stripped.size()) + " [f(uP)=f(P)]: " +
                (stripped.empty() ? "eps" : stripped.word()));
        if (stripped.empty()) {
            log("base f(eps) = 1");
            return 1;
        }
        p = std::move(stripped);
        auto h = p.heights();
        int mn = *std::min_element(h.begin(), h.end());
        int last = 0;
        for (int i = 1; i <= p.size(); ++i)
            if (h[static_cast<size_t>(i - 1)] == mn) last = i;
        if (last < p.size()) {
            Path p1 = p.subpath(1, last), p2 = p.subpath(last + 1, p.size());
            log("split " + p1.word() + " | " + p2.word() + " [Prop 1(i)]");
            Int left = run(p1);
            return left * run_d(p2);
        }
        // ends at its minimum: u^t P is a Dyck word
        int t = -mn;
        log("prepend u^" + std::to_string(t) + " [f(P)=f(u^t P)]: Dyck " +
            Path::runs(t, 0).concat(p).word());
        return run_dyck(Path::runs(t, 0).concat(p));
    }

    // f(dB) for a nonempty Dyck prefix B
    Int run_d(const Path& b) {
        if (!classify(b).return_points.empty()) {
            log("strip d [Prop 1(ii)]: " + b.word());
            return run(b);
        }
        // no return point: B = u B'
        Path inner = b.subpath(2, b.size());
        log("closed sum [Prop 3] on du" + inner.word());
        return prop3_rhs(inner, prop3_limit);
    }

    Int run_dyck(const Path& w) {
        if (w.empty()) return 1;
        std::vector<Path> primes = decompose_prime(w);
        const Path& c = primes.front();
        log("closed sum [Prop 2] on u" + c.word() + "d");
        Int value = prop2_rhs(c);
        Path rest = w.subpath(c.size() + 3, w.size());
        if (!rest.empty()) {
            log("peel prime [Prop 1(i) + 1(ii)]: " + rest.word());
            value *= run_dyck(rest);
        }
        return value;
    }
};

}  // namespace

FResult f_recursive(const Path& p, int prop3_limit) {
    FResult out;
    out.route = "recursive";
    FRecursion rec{prop3_limit, &out.trace};
    out.value = rec.run(p);
    return out;
}

}  // namespace shc
