#include <algorithm>
#include <numeric>

#include "shc/bijections.hpp"

namespace shc {

namespace {

ShiftedTableau build_tableau(const Shape& shape, const std::function<int(int, int)>& f) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.rows(); ++i) {
        std::vector<int> row;
        for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) row.push_back(f(i, j));
        rows.push_back(std::move(row));
    }
    return ShiftedTableau(shape, std::move(rows));
}

void require_increasing(const ShiftedTableau& t, const std::string& who) {
    TableauClass c = tableau_class(t);
    require(c == TableauClass::increasing || c == TableauClass::standard, who + "-not-increasing",
            who + " expects an increasing shifted tableau");
}

int high_valley(const Path& p) {
    auto prof = valley_peak_profile(p);
    require(prof.high_valley.has_value(), "no-valley", "path has no valley");
    return *prof.high_valley;
}

bool same_valleys_up_to(const Path& x, const Path& y, int hmax) {
    auto vx = valley_peak_profile(x).valleys;
    auto vy = valley_peak_profile(y).valleys;
    auto keep = [hmax](const std::vector<PointHeight>& v) {
        std::vector<PointHeight> out;
        for (const auto& pt : v)
            if (pt.height <= hmax) out.push_back(pt);
        return out;
    };
    return keep(vx) == keep(vy);
}

}  // namespace

std::pair<ShiftedTableau, ShiftedTableau> split_product(const ShiftedTableau& t, int n2, int m1) {
    require_increasing(t, "split_product");
    Path p = path_of_shape(t.shape());
    int n = p.size();
    require(1 <= n2 && n2 < n, "split-range", "n2 must split the path properly");
    int n1 = n - n2;
    Path p1 = p.subpath(1, n1), p2 = p.subpath(n1 + 1, n);
    require(n1 >= 2, "split-p1-trivial", "P_1 = d is excluded");
    require(is_dyck_suffix(p1), "split-p1-class", "P_1 must be a Dyck suffix");
    require(p1.downs() == m1, "split-m1", "m1 does not match the downsteps of P_1");
    require(is_dyck_prefix(p2), "split-p2-class", "P_2 must be a Dyck prefix");
    require(t.max_entry() == 2 * m1 + n2 - 1, "split-max",
            "max(T) must equal 2 m_1 + n_2 - 1");
    // The region north-west of both translated blocks is pinned to i+j-1.
    for (int i = 1; i <= std::min(m1, t.shape().rows()); ++i)
        for (int j = t.shape().row_begin(i); j <= std::min(m1 + n2, t.shape().row_end(i)); ++j)
            require(t.at(i, j) == i + j - 1, "split-fixed-region",
                    "north-west region must satisfy t_ij = i + j - 1");
    ShiftedTableau t1 = build_tableau(shape_of(p1),
                                      [&](int i, int j) { return t.at(i, j + n2) - n2; });
    ShiftedTableau t2 =
        build_tableau(shape_of(Path::parse("d").concat(p2)),
                      [&](int i, int j) { return t.at(i + m1 - 1, j + m1 - 1) - 2 * (m1 - 1); });
    require_increasing(t1, "split_product-out1");
    require_increasing(t2, "split_product-out2");
    require(t1.max_entry() == 2 * m1 - 1, "split-out1-max", "max(T_1) must be 2 m_1 - 1");
    require(t2.max_entry() == n2 + 1, "split-out2-max", "max(T_2) must be n_2 + 1");
    return {std::move(t1), std::move(t2)};
}

ShiftedTableau merge_product(const ShiftedTableau& t1, const ShiftedTableau& t2) {
    require_increasing(t1, "merge_product");
    require_increasing(t2, "merge_product");
    Path p1 = path_of_shape(t1.shape());
    Path dp2 = path_of_shape(t2.shape());
    require(dp2.size() >= 2, "merge-p2-trivial", "P_2 must be nonempty");
    Path p2 = dp2.subpath(2, dp2.size());
    require(is_dyck_prefix(p2), "merge-p2-class", "P_2 must be a Dyck prefix");
    require(p1.size() >= 2 && is_dyck_suffix(p1), "merge-p1-class",
            "P_1 must be a Dyck suffix other than d");
    int m1 = p1.downs();
    int n2 = p2.size();
    require(t1.max_entry() == 2 * m1 - 1, "merge-max1", "max(T_1) must be 2 m_1 - 1");
    require(t2.max_entry() == n2 + 1, "merge-max2", "max(T_2) must be n_2 + 1");
    Shape shape = shape_of(p1.concat(p2));
    ShiftedTableau out = build_tableau(shape, [&](int i, int j) {
        if (i >= m1 && t2.shape().contains(i - m1 + 1, j - m1 + 1))
            return t2.at(i - m1 + 1, j - m1 + 1) + 2 * (m1 - 1);
        if (i <= m1 && j >= i + n2) return t1.at(i, j - n2) + n2;
        return i + j - 1;
    });
    // the overlap cell (m1, m1+n2) must agree from both blocks
    require(out.at(m1, m1 + n2) == 2 * m1 + n2 - 1, "merge-overlap",
            "inconsistent overlap between T_1 and T_2");
    require(t1.at(m1, m1) == 2 * m1 - 1 && t2.at(1, n2 + 1) == n2 + 1, "merge-overlap",
            "inconsistent overlap between T_1 and T_2");
    require_increasing(out, "merge_product-out");
    require(out.max_entry() == 2 * m1 + n2 - 1, "merge-out-max",
            "max of merged tableau must be 2 m_1 + n_2 - 1");
    return out;
}

ShiftedTableau strip_first_row(const ShiftedTableau& t) {
    require_increasing(t, "strip_first_row");
    Path r = path_of_shape(t.shape());
    require(r.size() >= 2 && r.step(2) == Step::up, "strip-shape",
            "shape must be lambda(dP) with P starting with u");
    Path p = r.subpath(2, r.size());
    require(is_dyck_prefix(p), "strip-p-class", "P must be a Dyck prefix");
    require(!classify(p).return_points.empty(), "strip-no-return",
            "P must have at least one return point");
    int np = p.size();
    require(t.max_entry() == np + 1, "strip-max", "max(T) must equal |P| + 1");
    for (int j = 1; j <= np + 1; ++j)
        require(t.at(1, j) == j, "strip-first-row", "first row must equal 1..|P|+1");
    Path q = strip_leading_ups(p);
    ShiftedTableau out =
        build_tableau(shape_of(q), [&](int i, int j) { return t.at(i + 1, j + 1) - 2; });
    require_increasing(out, "strip_first_row-out");
    require(out.max_entry() == np - 1, "strip-out-max", "max of stripped tableau must be |P| - 1");
    return out;
}

ShiftedTableau unstrip_first_row(const ShiftedTableau& tq, int leading_ups) {
    require_increasing(tq, "unstrip_first_row");
    require(leading_ups >= 1, "unstrip-ups", "P = u^k Q needs k >= 1");
    Path q = path_of_shape(tq.shape());
    require(!q.empty(), "unstrip-q", "Q must be nonempty");
    Path p = Path::runs(leading_ups, 0).concat(q);
    require(is_dyck_prefix(p), "unstrip-p-class", "u^k Q must be a Dyck prefix");
    int np = p.size();
    require(tq.max_entry() == np - 1, "unstrip-max", "max(T') must equal |P| - 1");
    Shape shape = shape_of(Path::parse("d").concat(p));
    ShiftedTableau out = build_tableau(shape, [&](int i, int j) {
        return i == 1 ? j : tq.at(i - 1, j - 1) + 2;
    });
    require_increasing(out, "unstrip_first_row-out");
    return out;
}

namespace {

// Shared context of the prime-Dyck bijection: shapes lambda(Pd) and lambda(P)
// for a = u^{k1} P.
struct PrimeContext {
    Path a;
    Path p;
    int k1 = 0;
    int m = 0;
};

PrimeContext prime_context_from_p(const Path& p) {
    require(!p.empty() && p.step(1) == Step::down, "prime-shape",
            "P must be nonempty and start with d");
    PrimeContext ctx;
    ctx.p = p;
    ctx.k1 = -p.final_height();
    require(ctx.k1 >= 0, "prime-final", "P must end weakly below its start");
    ctx.a = Path::runs(ctx.k1, 0).concat(p);
    require(is_dyck(ctx.a), "prime-not-dyck", "u^{k1} P must be a Dyck path");
    ctx.m = ctx.a.downs();
    return ctx;
}

void check_v_bounds(const ShiftedTableau& v, const PrimeContext& ctx) {
    TableauClass cls = tableau_class(v);
    require(cls != TableauClass::invalid, "v-not-weak", "V must be a weak shifted tableau");
    for (int i = 1; i <= v.shape().rows(); ++i)
        for (int j = v.shape().row_begin(i); j <= v.shape().row_end(i); ++j) {
            int val = v.at(i, j);
            if (j <= ctx.m)
                require(val == 1, "bound-vij-lower", "v_ij = 1 required for j <= m");
            else
                require(val >= 2, "bound-vij-lower", "v_ij >= 2 required for j > m");
            require(val <= 2 * ctx.m + 3 - i - j, "bound-vij-upper",
                    "v_ij <= 2m + 3 - i - j violated");
        }
}

}  // namespace

PrimeImage prime_map(const ShiftedTableau& t) {
    require_increasing(t, "prime_map");
    Path s = path_of_shape(t.shape());
    require(s.size() >= 2 && s.step(s.size()) == Step::down, "prime-shape",
            "shape must be lambda(Pd)");
    PrimeContext ctx = prime_context_from_p(s.subpath(1, s.size() - 1));
    require(t.max_entry() == 2 * ctx.m + 1, "prime-max", "max(T) must equal 2m + 1");
    for (int i = 1; i <= t.shape().rows(); ++i)
        for (int j = t.shape().row_begin(i); j <= std::min(ctx.m + 1, t.shape().row_end(i)); ++j)
            require(t.at(i, j) == i + j - 1, "bound-tij-fixed",
                    "t_ij = i + j - 1 required for j <= m + 1");
    int hv_a = high_valley(ctx.a);
    for (int i = 1; i <= t.shape().rows(); ++i)
        for (int j = t.shape().row_begin(i); j <= t.shape().row_end(i); ++j)
            require(t.at(i, j) <= i + j + hv_a, "bound-tij-upper",
                    "t_ij <= i + j + hv(a) violated");
    ShiftedTableau v = build_tableau(shape_of(ctx.p), [&](int i, int j) {
        return j <= ctx.m ? 1 : t.at(i, j + 1) + 2 - i - j;
    });
    check_v_bounds(v, ctx);
    require(v.max_entry() <= hv_a + 3, "bound-v-max", "max(V) must be at most hv(a) + 3");
    return PrimeImage{ctx.a, std::move(v)};
}

ShiftedTableau prime_map_inv(const ShiftedTableau& v) {
    PrimeContext ctx = prime_context_from_p(path_of_shape(v.shape()));
    check_v_bounds(v, ctx);
    Shape shape = shape_of(ctx.p.concat(Path::parse("d")));
    ShiftedTableau out = build_tableau(shape, [&](int i, int j) {
        return j <= ctx.m + 1 ? i + j - 1 : v.at(i, j - 1) + i + j - 3;
    });
    require_increasing(out, "prime_map_inv-out");
    require(out.max_entry() == 2 * ctx.m + 1, "prime-out-max",
            "max of rebuilt tableau must be 2m + 1");
    return out;
}

namespace {

void check_type_v(const std::vector<Path>& sigma, int h) {
    for (int j = 1; j <= h; ++j)
        require(same_valleys_up_to(sigma[static_cast<size_t>(j - 1)],
                                   sigma[static_cast<size_t>(j)], h - j),
                "type-v", "consecutive paths must share valleys up to height h - j");
}

}  // namespace

Multichain type_v_chain_from_tableau(const ShiftedTableau& v, const Path& a) {
    PrimeContext ctx = prime_context_from_p(strip_leading_ups(a));
    require(ctx.a == a, "prime-a-mismatch", "a must equal u^{k1} P for the shape of V");
    require(path_of_shape(v.shape()) == ctx.p, "prime-a-mismatch",
            "shape of V must be lambda(P) for a = u^{k1} P");
    check_v_bounds(v, ctx);
    int k = high_valley(a) + 3;
    require(v.max_entry() <= k, "bound-v-max", "max(V) must be at most hv(a) + 3");
    Multichain s_chain = theta_inv(v, k);
    std::vector<Path> sigma;
    sigma.reserve(s_chain.paths().size());
    for (const Path& s : s_chain.paths()) sigma.push_back(Path::runs(ctx.k1, 0).concat(s));
    require(sigma[static_cast<size_t>(k - 1)] == Path::runs(ctx.m, ctx.m), "sigma-top",
            "sigma_{k-1} must equal u^m d^m");
    std::vector<Path> prefix(sigma.begin(), sigma.begin() + (k - 2));
    check_type_v(prefix, k - 3);
    return Multichain(std::move(sigma));
}

ShiftedTableau type_v_chain_to_tableau(const Multichain& sigma) {
    const Path& a = sigma.paths().front();
    require(is_dyck(a) && !a.empty(), "sigma-base", "sigma_0 must be a nonempty Dyck path");
    int k = sigma.length();
    require(k == high_valley(a) + 3, "sigma-length", "the multichain must have length hv(a) + 3");
    PrimeContext ctx = prime_context_from_p(strip_leading_ups(a));
    require(sigma.at(k - 1) == Path::runs(ctx.m, ctx.m), "sigma-top",
            "sigma_{k-1} must equal u^m d^m");
    require(sigma.at(k) == Path::top(2 * ctx.m), "sigma-top", "sigma_k must equal u^{2m}");
    std::vector<Path> prefix(sigma.paths().begin(), sigma.paths().begin() + (k - 2));
    check_type_v(prefix, k - 3);
    std::vector<Path> s_paths;
    s_paths.reserve(sigma.paths().size());
    for (const Path& q : sigma.paths()) {
        for (int i = 1; i <= ctx.k1; ++i)
            require(q.step(i) == Step::up, "sigma-prefix",
                    "every sigma_i must start with u^{k1}");
        s_paths.push_back(q.subpath(ctx.k1 + 1, q.size()));
    }
    ShiftedTableau v = theta(Multichain(std::move(s_paths)));
    check_v_bounds(v, ctx);
    return v;
}

// ---- Dyck-prefix bijection ----

namespace {

struct PrefixContext {
    Path p;                     // the Dyck prefix
    int n = 0;                  // |duP|
    std::vector<Path> comps;    // a_0..a_k
    std::vector<int> hv_comp;   // hv(a_l), 0 for the empty component
    int k = 0;
    int h = 0;
    std::vector<int> band;      // band l per column j (index 1..n)

    explicit PrefixContext(const Path& prefix) : p(prefix) {
        require(is_dyck_prefix(p), "prefix-class", "P must be a Dyck prefix");
        n = p.size() + 2;
        comps = decompose_prefix(p);
        k = static_cast<int>(comps.size()) - 1;
        for (const Path& a : comps) {
            auto prof = valley_peak_profile(a);
            hv_comp.push_back(prof.high_valley.value_or(0));
        }
        h = *std::max_element(hv_comp.begin(), hv_comp.end());
        // anchor columns j_l, l in [-1, k]; j_{-1} = n, j_{k+1} = 1
        std::vector<int> js(static_cast<size_t>(k) + 2);  // js[l+1] = j_l
        js[0] = n;
        int acc = 0;
        for (int l = 0; l <= k; ++l) {
            acc += comps[static_cast<size_t>(l)].size();
            js[static_cast<size_t>(l) + 1] = n - 1 - l - acc / 2;
        }
        band.assign(static_cast<size_t>(n) + 1, k);
        for (int j = 1; j <= n; ++j) {
            if (j == n) {
                band[static_cast<size_t>(j)] = -1;
            } else {
                for (int nu = 0; nu <= k; ++nu) {
                    if (js[static_cast<size_t>(nu) + 1] <= j && j < js[static_cast<size_t>(nu)]) {
                        band[static_cast<size_t>(j)] = nu;
                        break;
                    }
                }
                // columns left of j_k keep band = k
            }
        }
    }

    int b(int j, int r) const {
        int l = band[static_cast<size_t>(j)];
        return std::min(h - r + k, l) + (r <= h ? h - r : 0);
    }
};

// Path of the subdiagram with row-prefix lengths p_len inside lambda_1 = n.
Path path_of_prefix_lengths(const std::vector<int>& p_len, int n) {
    KEncoding enc;
    for (int i = 1; i <= static_cast<int>(p_len.size()); ++i) {
        int len = p_len[static_cast<size_t>(i - 1)];
        if (len == 0) break;
        enc.k.push_back(n - i + 1 - len);
    }
    enc.downs = static_cast<int>(enc.k.size());
    enc.k.push_back(n - enc.downs);
    return from_k_encoding(enc);
}

}  // namespace

std::vector<Path> prefix_map(const ShiftedTableau& t) {
    require_increasing(t, "prefix_map");
    Path r = path_of_shape(t.shape());
    require(r.size() >= 2 && r.step(2) == Step::up, "prefix-shape",
            "shape must be lambda(duP)");
    PrefixContext ctx(r.subpath(3, r.size()));
    require(t.max_entry() == ctx.n, "prefix-max", "max(T) must equal |duP|");
    const Shape& shape = t.shape();
    std::vector<Path> ws;
    for (int rr = 0; rr <= ctx.h + ctx.k + 1; ++rr) {
        std::vector<int> p_len(static_cast<size_t>(shape.rows()), 0);
        for (int i = 1; i <= shape.rows(); ++i) {
            int len = 0;
            bool ended = false;
            for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) {
                bool in = t.at(i, j) <= i + j + ctx.b(j, rr);
                if (in) {
                    require(!ended, "prefix-malformed",
                            "level set is not a row prefix (malformed tableau)");
                    ++len;
                } else {
                    ended = true;
                }
            }
            p_len[static_cast<size_t>(i - 1)] = len;
        }
        for (int i = 1; i < shape.rows(); ++i)
            require(p_len[static_cast<size_t>(i)] == 0 ||
                        p_len[static_cast<size_t>(i)] < p_len[static_cast<size_t>(i - 1)],
                    "prefix-malformed", "level set is not a subdiagram (malformed tableau)");
        Path dr = path_of_prefix_lengths(p_len, ctx.n);
        require(dr.size() == ctx.n && dr.step(1) == Step::down && dr.step(2) == Step::up,
                "prefix-malformed", "level set does not describe a d u W_r path");
        ws.push_back(dr.subpath(3, dr.size()));
    }
    require(ws.front() == ctx.p, "prefix-malformed", "W_0 must equal P");
    for (size_t i = 1; i < ws.size(); ++i)
        require(below_or_equal(ws[i - 1], ws[i]), "prefix-malformed",
                "(W_r) must be a multichain");
    check_prefix_family(ws);
    return ws;
}

ShiftedTableau prefix_map_inv(const std::vector<Path>& ws) {
    require(!ws.empty(), "prefix-empty", "a (W_r) family is nonempty");
    PrefixContext ctx(ws.front());
    require(static_cast<int>(ws.size()) == ctx.h + ctx.k + 2, "prefix-family-size",
            "(W_r) must have h + k + 2 members");
    for (size_t i = 1; i < ws.size(); ++i)
        require(below_or_equal(ws[i - 1], ws[i]), "prefix-order", "(W_r) must be a multichain");
    check_prefix_family(ws);
    Path du = Path::parse("du");
    Shape shape = shape_of(du.concat(ctx.p));
    std::vector<Shape> fr;
    for (const Path& w : ws) fr.push_back(shape_of(du.concat(w)));
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.rows(); ++i)
        rows.emplace_back(static_cast<size_t>(shape.part(i)), 0);
    for (int rr = 0; rr <= ctx.h + ctx.k + 1; ++rr) {
        const Shape& cur = fr[static_cast<size_t>(rr)];
        const Shape* nxt = rr + 1 < static_cast<int>(fr.size()) ? &fr[static_cast<size_t>(rr) + 1]
                                                                : nullptr;
        for (int i = 1; i <= cur.rows(); ++i)
            for (int j = cur.row_begin(i); j <= cur.row_end(i); ++j) {
                if (nxt && nxt->contains(i, j)) continue;
                rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)] =
                    i + j + ctx.b(j, rr);
            }
    }
    ShiftedTableau out(shape, std::move(rows));
    require_increasing(out, "prefix_map_inv-out");
    require(out.max_entry() == ctx.n, "prefix-out-max", "max of rebuilt tableau must be |duP|");
    return out;
}

void check_prefix_family(const std::vector<Path>& ws) {
    PrefixContext ctx(ws.front());
    require(static_cast<int>(ws.size()) == ctx.h + ctx.k + 2, "prefix-family-size",
            "(W_r) must have h + k + 2 members");
    // component spans inside P: a_l occupies steps [start+1, start+|a_l|]
    std::vector<std::pair<int, int>> span;  // (first point, last point) of a_l
    int pos = 0;
    for (int l = 0; l <= ctx.k; ++l) {
        int len = ctx.comps[static_cast<size_t>(l)].size();
        span.emplace_back(pos, pos + len);
        pos += len + 1;  // separating upstep
    }
    auto hp = ctx.p.heights();
    hp.insert(hp.begin(), 0);
    // (i): decomposition, frozen components, and type-V component chains
    std::vector<std::vector<Path>> comp_of_w(static_cast<size_t>(ctx.h) + 1);
    for (int rr = 0; rr <= ctx.h; ++rr) {
        const Path& w = ws[static_cast<size_t>(rr)];
        auto hw = w.heights();
        hw.insert(hw.begin(), 0);
        for (int l = 0; l <= ctx.k; ++l) {
            auto [s, e] = span[static_cast<size_t>(l)];
            require(hw[static_cast<size_t>(s)] == hp[static_cast<size_t>(s)] &&
                        hw[static_cast<size_t>(e)] == hp[static_cast<size_t>(e)],
                    "prefix-prop-i", "W_r must pass through the component endpoints");
            Path seg = s + 1 <= e ? w.subpath(s + 1, e) : Path{};
            require(is_dyck(seg), "prefix-prop-i", "components of W_r must be Dyck paths");
            if (rr <= ctx.h - ctx.hv_comp[static_cast<size_t>(l)])
                require(seg == ctx.comps[static_cast<size_t>(l)], "prefix-prop-i",
                        "w_{rl} must equal a_l for r <= h - hv(a_l)");
            comp_of_w[static_cast<size_t>(rr)].push_back(std::move(seg));
        }
    }
    for (int l = 0; l <= ctx.k; ++l) {
        int hl = ctx.hv_comp[static_cast<size_t>(l)];
        for (int rr = ctx.h - hl + 1; rr <= ctx.h; ++rr) {
            int step = rr - (ctx.h - hl);
            require(same_valleys_up_to(comp_of_w[static_cast<size_t>(rr - 1)][static_cast<size_t>(l)],
                                       comp_of_w[static_cast<size_t>(rr)][static_cast<size_t>(l)],
                                       hl - step),
                    "prefix-prop-i", "component chains must be of type V");
        }
    }
    // (ii): w_{h0} u w_{h1} ... u w_{h,h+k-r} is a prefix of W_r for r in [h, h+k]
    const auto& wh = comp_of_w[static_cast<size_t>(ctx.h)];
    for (int rr = ctx.h; rr <= ctx.h + ctx.k; ++rr) {
        Path prefix;
        for (int l = 0; l <= ctx.h + ctx.k - rr; ++l) {
            if (l > 0) prefix = prefix.concat(Path::runs(1, 0));
            prefix = prefix.concat(wh[static_cast<size_t>(l)]);
        }
        const Path& w = ws[static_cast<size_t>(rr)];
        require(prefix.size() <= w.size() &&
                    w.subpath(1, prefix.size()) == prefix,
                "prefix-prop-ii", "w_{h0} u ... u w_{h,h+k-r} must be a prefix of W_r");
    }
}

}  // namespace shc
