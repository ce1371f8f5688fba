#include "shc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "shc/bijections.hpp"
#include "shc/formulas.hpp"
#include <nlohmann/json.hpp>

#include "shc/io.hpp"
#include "shc/oracles.hpp"
#include "shc/render.hpp"

namespace shc {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void record_failure(SuiteReport& r, const std::string& what) {
    if (!r.ok) return;  // keep the first (minimal) counterexample
    r.ok = false;
    r.counterexample = what;
}

std::string word_or_eps(const Path& p) { return p.empty() ? "eps" : p.word(); }

int delta_formula(const Path& p) {
    auto prof = valley_peak_profile(p);
    if (!prof.low_valley) return 0;  // u^n
    return p.size() - 1 - *prof.low_valley;
}

std::vector<PointHeight> low_valleys(const Path& p) {
    auto prof = valley_peak_profile(p);
    std::vector<PointHeight> out;
    if (!prof.low_valley) return out;
    for (const auto& v : prof.valleys)
        if (v.height == *prof.low_valley) out.push_back(v);
    return out;
}

}  // namespace

SuiteReport verify_f_threeway(int max_n) {
    Timer timer;
    SuiteReport r;
    r.name = "f-threeway";
    for (int n = 0; n <= max_n && r.ok; ++n) {
        for (const Path& p : all_paths(n)) {
            Int brute = oracle::f_bruteforce(p);
            Int tab = f_by_tableaux(p);
            Int rec = f_recursive(p, std::max(12, n + 2)).value;
            ++r.instances;
            if (brute != tab || brute != rec) {
                std::ostringstream msg;
                msg << "f mismatch at " << word_or_eps(p) << ": brute=" << brute
                    << " tableaux=" << tab << " recursive=" << rec;
                record_failure(r, msg.str());
                break;
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_prop2(int max_a_len) {
    Timer timer;
    SuiteReport r;
    r.name = "prop2";
    for (int m = 0; 2 * m <= max_a_len && r.ok; ++m) {
        for (const Path& a : all_dyck_paths(m)) {
            Int rhs = prop2_rhs(a);
            Int lhs = f_by_tableaux(Path::runs(1, 0).concat(a).concat(Path::runs(0, 1)));
            ++r.instances;
            if (lhs != rhs) {
                std::ostringstream msg;
                msg << "f(uad) != sum V*I at a=" << word_or_eps(a) << ": f=" << lhs
                    << " sum=" << rhs;
                record_failure(r, msg.str());
                break;
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_prop3(int max_dup_len) {
    Timer timer;
    SuiteReport r;
    r.name = "prop3";
    const Path du = Path::parse("du");
    for (int n = 0; n + 2 <= max_dup_len && r.ok; ++n) {
        for (const Path& p : all_paths(n)) {
            if (!is_dyck_prefix(p)) continue;
            Int rhs = prop3_rhs(p, max_dup_len);
            Int lhs = f_by_tableaux(du.concat(p));
            ++r.instances;
            if (lhs != rhs) {
                std::ostringstream msg;
                msg << "f(duP) != nested sum at P=" << word_or_eps(p) << ": f=" << lhs
                    << " sum=" << rhs;
                record_failure(r, msg.str());
                break;
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_hook(int max_n, int literal_max_n) {
    Timer timer;
    SuiteReport r;
    r.name = "hook";
    for (int n = 1; n <= max_n && r.ok; ++n) {
        for (const Path& p : all_paths(n)) {
            if (p.step(1) != Step::down) continue;
            Shape shape = shape_of(p);
            Int formula = count_standard_formula(shape);
            Int peel = oracle::count_standard_peel(shape);
            ++r.instances;
            if (formula != peel) {
                std::ostringstream msg;
                msg << "hook formula != peel count at P=" << p.word() << ": formula=" << formula
                    << " peel=" << peel;
                record_failure(r, msg.str());
                break;
            }
            if (n <= literal_max_n) {
                long long count = 0;
                oracle::for_each_tableau(shape, static_cast<int>(shape.size()),
                                         oracle::TabKind::standard,
                                         [&](const ShiftedTableau&) { ++count; });
                if (formula != count) {
                    std::ostringstream msg;
                    msg << "hook formula != enumerated count at P=" << p.word()
                        << ": formula=" << formula << " enumerated=" << count;
                    record_failure(r, msg.str());
                    break;
                }
            }
            if (saturated_count(p) != formula) {
                record_failure(r, "saturated_count disagrees with formula at P=" + p.word());
                break;
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

namespace {

bool check_theta_instance(const Multichain& c, int k, SuiteReport& r) {
    ShiftedTableau t = theta(c);
    if (!(theta_inv(t, k) == c)) {
        record_failure(r, "theta round-trip failed at base=" + c.paths().front().word() +
                              " k=" + std::to_string(k));
        return false;
    }
    MultichainClass via_t = classify_via_theta(t, k);
    MultichainClass direct = classify_multichain(c, /*top_required=*/true);
    if (via_t.is_chain != direct.is_chain || via_t.small_intervals != direct.small_intervals ||
        via_t.is_saturated != direct.is_saturated) {
        record_failure(r, "classification mismatch at base=" + c.paths().front().word() +
                              " k=" + std::to_string(k) + " chain=" + multichain_to_text(c));
        return false;
    }
    int repeats = 0;
    while (repeats < static_cast<int>(c.paths().size()) && c.at(repeats) == c.at(0)) ++repeats;
    if (k - t.max_entry() + 1 != repeats) {
        record_failure(r, "repeated-bottom identity failed at base=" + c.paths().front().word() +
                              " k=" + std::to_string(k));
        return false;
    }
    return true;
}

// Deterministic pseudorandom multichain p = P_0 <= ... <= P_k = u^n.
Multichain sample_multichain(const Path& p, int k, std::mt19937_64& rng) {
    int n = p.size();
    std::vector<Path> chain{p};
    Path top = Path::top(n);
    for (int step = 1; step < k; ++step) {
        auto hlo = chain.back().heights();
        auto hhi = top.heights();
        std::vector<int> h(static_cast<size_t>(n));
        int prev = 0;
        for (int i = 0; i < n; ++i) {
            std::vector<int> options;
            for (int nh : {prev - 1, prev + 1}) {
                if (nh < hlo[static_cast<size_t>(i)] || nh > hhi[static_cast<size_t>(i)]) continue;
                // walking upward from nh must still clear every later floor
                bool feasible = true;
                for (int j = i + 1; j < n && feasible; ++j)
                    if (hlo[static_cast<size_t>(j)] > nh + (j - i)) feasible = false;
                if (feasible) options.push_back(nh);
            }
            prev = options.size() == 1
                       ? options[0]
                       : options[static_cast<size_t>(rng() % options.size())];
            h[static_cast<size_t>(i)] = prev;
        }
        chain.push_back(path_from_heights(h));
    }
    if (k >= 1) chain.push_back(top);
    return Multichain(std::move(chain));
}

}  // namespace

SuiteReport verify_theta(int max_n, long long enumeration_cap, int samples) {
    Timer timer;
    SuiteReport r;
    r.name = "theta";
    for (int n = 1; n <= max_n && r.ok; ++n) {
        for (const Path& p : all_paths(n)) {
            if (p.step(1) != Step::down || !r.ok) continue;
            Shape shape = shape_of(p);
            for (int k = 1; k <= n + 2 && r.ok; ++k) {
                Int dp_paths = oracle::count_multichains(p, k);
                Int dp_tabs = count_weak(shape, k);
                if (dp_paths != dp_tabs) {
                    std::ostringstream msg;
                    msg << "count identity failed at P=" << p.word() << " k=" << k
                        << ": multichains=" << dp_paths << " weak tableaux=" << dp_tabs;
                    record_failure(r, msg.str());
                    break;
                }
                if (dp_paths <= enumeration_cap) {
                    long long enumerated = 0;
                    oracle::for_each_multichain(p, k, [&](const Multichain& c) {
                        ++enumerated;
                        if (!r.ok) return;
                        ++r.instances;
                        check_theta_instance(c, k, r);
                    });
                    if (r.ok && dp_paths != enumerated) {
                        std::ostringstream msg;
                        msg << "multichain DP disagrees with enumeration at P=" << p.word()
                            << " k=" << k << ": dp=" << dp_paths
                            << " enumerated=" << enumerated;
                        record_failure(r, msg.str());
                        break;
                    }
                    // tableau-side round trip over the same (bijective) set
                    oracle::for_each_tableau(shape, k, oracle::TabKind::weak,
                                             [&](const ShiftedTableau& t) {
                                                 if (!r.ok) return;
                                                 ++r.instances;
                                                 if (!(theta(theta_inv(t, k)) == t))
                                                     record_failure(
                                                         r, "tableau round-trip failed at P=" +
                                                                p.word() + " k=" + std::to_string(k));
                                             });
                } else {
                    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(n) * 1000 +
                                        static_cast<unsigned long long>(k));
                    for (int s = 0; s < samples && r.ok; ++s) {
                        Multichain c = sample_multichain(p, k, rng);
                        ++r.instances;
                        ++r.sampled;
                        check_theta_instance(c, k, r);
                    }
                }
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_bijections(int split_max, int strip_max, int prime_max, int prefix_max) {
    Timer timer;
    SuiteReport r;
    r.name = "bijections";
    // product split
    for (int n = 3; n <= split_max && r.ok; ++n) {
        for (const Path& p : all_paths(n)) {
            if (p.step(1) != Step::down || !r.ok) continue;
            for (int n1 = 2; n1 < n && r.ok; ++n1) {
                Path p1 = p.subpath(1, n1), p2 = p.subpath(n1 + 1, n);
                if (!is_dyck_suffix(p1) || !is_dyck_prefix(p2)) continue;
                int m1 = p1.downs(), n2 = p2.size();
                int maxv = 2 * m1 + n2 - 1;
                Int total = count_increasing(shape_of(p), maxv, true);
                Int left = count_increasing(shape_of(p1), 2 * m1 - 1, true);
                Int right =
                    count_increasing(shape_of(Path::runs(0, 1).concat(p2)), n2 + 1, true);
                if (total != left * right) {
                    record_failure(r, "split_product count mismatch at P=" + p.word() +
                                          " n1=" + std::to_string(n1));
                    break;
                }
                for_each_increasing(shape_of(p), maxv, true, [&](const ShiftedTableau& t) {
                    if (!r.ok) return;
                    ++r.instances;
                    auto [t1, t2] = split_product(t, n2, m1);
                    if (!(merge_product(t1, t2) == t))
                        record_failure(r, "split_product round-trip failed at P=" + p.word() +
                                              " n1=" + std::to_string(n1));
                });
            }
        }
    }
    // first-row strip
    for (int np = 2; np + 1 <= strip_max && r.ok; ++np) {
        for (const Path& p : all_paths(np)) {
            if (!r.ok) break;
            if (!is_dyck_prefix(p) || p.step(1) != Step::up) continue;
            if (classify(p).return_points.empty()) continue;
            Path q = strip_leading_ups(p);
            if (q.empty()) continue;
            int ups = np - q.size();
            Shape big = shape_of(Path::runs(0, 1).concat(p));
            Int lhs = count_increasing(big, np + 1, true);
            Int rhs = count_increasing(shape_of(q), np - 1, true);
            if (lhs != rhs) {
                record_failure(r, "strip_first_row count mismatch at P=" + p.word());
                break;
            }
            for_each_increasing(big, np + 1, true, [&](const ShiftedTableau& t) {
                if (!r.ok) return;
                ++r.instances;
                ShiftedTableau tq = strip_first_row(t);
                if (tq.max_entry() != np - 1 || !(unstrip_first_row(tq, ups) == t))
                    record_failure(r, "strip_first_row round-trip failed at P=" + p.word());
            });
        }
    }
    // prime-Dyck map
    for (int m = 1; 2 * m <= prime_max && r.ok; ++m) {
        for (const Path& a : all_dyck_paths(m)) {
            if (!r.ok) break;
            Path p = strip_leading_ups(a);
            if (p.empty()) continue;
            Shape shape = shape_of(p.concat(Path::runs(0, 1)));
            Int combinatorial = prop2_rhs(a);
            Int tabs = count_increasing(shape, 2 * m + 1, true);
            if (combinatorial != tabs) {
                record_failure(r, "prime_map count mismatch at a=" + a.word());
                break;
            }
            for_each_increasing(shape, 2 * m + 1, true, [&](const ShiftedTableau& t) {
                if (!r.ok) return;
                ++r.instances;
                PrimeImage img = prime_map(t);
                if (!(img.a == a)) {
                    record_failure(r, "prime_map recovered wrong Dyck path at a=" + a.word());
                    return;
                }
                if (!(prime_map_inv(img.v) == t)) {
                    record_failure(r, "prime_map round-trip failed at a=" + a.word());
                    return;
                }
                Multichain sigma = type_v_chain_from_tableau(img.v, a);
                if (!(type_v_chain_to_tableau(sigma) == img.v))
                    record_failure(r, "type-V chain round-trip failed at a=" + a.word());
            });
        }
    }
    // Dyck-prefix map
    const Path du = Path::parse("du");
    for (int np = 0; np + 2 <= prefix_max && r.ok; ++np) {
        for (const Path& p : all_paths(std::max(np, 0))) {
            if (!r.ok) break;
            if (!is_dyck_prefix(p)) continue;
            Shape shape = shape_of(du.concat(p));
            Int tabs = count_increasing(shape, np + 2, true);
            if (tabs != f_by_tableaux(du.concat(p))) {
                record_failure(r, "prefix_map count mismatch at P=" + word_or_eps(p));
                break;
            }
            for_each_increasing(shape, np + 2, true, [&](const ShiftedTableau& t) {
                if (!r.ok) return;
                ++r.instances;
                std::vector<Path> ws = prefix_map(t);
                if (!(ws.front() == p)) {
                    record_failure(r, "prefix_map W_0 != P at P=" + word_or_eps(p));
                    return;
                }
                if (!(prefix_map_inv(ws) == t))
                    record_failure(r, "prefix_map round-trip failed at P=" + word_or_eps(p));
            });
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_type_v(int max_a_len) {
    Timer timer;
    SuiteReport r;
    r.name = "typeV";
    for (int m = 0; 2 * m <= max_a_len && r.ok; ++m) {
        std::vector<Path> dycks = all_dyck_paths(m);
        std::sort(dycks.begin(), dycks.end());
        for (const Path& a : dycks) {
            if (!r.ok) break;
            // grouped enumeration vs brute oracle
            auto fast = enumerate_type_v(a);
            auto brute = oracle::enumerate_type_v_brute(a);
            if (fast.size() != brute.size()) {
                record_failure(r, "type-V group count mismatch at a=" + word_or_eps(a));
                break;
            }
            for (size_t g = 0; g < fast.size(); ++g) {
                if (!(fast[g].first == brute[g].first) ||
                    fast[g].second.size() != brute[g].second.size()) {
                    record_failure(r, "type-V group mismatch at a=" + word_or_eps(a));
                    break;
                }
            }
            for (const Path& b : dycks) {
                if (!below_or_equal(a, b)) continue;  // V is defined for a <= b
                ++r.instances;
                bool nonzero = V_count(a, b) != 0;
                bool same_low = low_valleys(a) == low_valleys(b);
                if (nonzero != same_low) {
                    record_failure(r, "low-valley criterion failed at a=" + word_or_eps(a) +
                                          " b=" + word_or_eps(b));
                    break;
                }
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_degree(int max_n) {
    Timer timer;
    SuiteReport r;
    r.name = "degree";
    for (int n = 0; n <= max_n && r.ok; ++n) {
        for (const Path& p : all_paths(n)) {
            ++r.instances;
            if (degree(p) != delta_formula(p)) {
                record_failure(r, "degree formula mismatch at P=" + word_or_eps(p));
                break;
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteReport verify_determinism() {
    Timer timer;
    SuiteReport r;
    r.name = "determinism";
    const Path p = Path::parse("duduud");
    std::vector<std::string> words{"duduud", "duudud", "uduudd", "uuuudu", "uuuuud", "uuuuuu"};
    std::vector<Path> paths;
    for (const auto& w : words) paths.emplace_back(Path::parse(w));
    Multichain fixed(paths);
    ShiftedTableau tab = theta(fixed);
    auto run_once = [&]() {
        std::string blob;
        blob += render_path(p, FigureFormat::svg);
        blob += render_path(p, FigureFormat::tikz);
        blob += render_tableau(tab, FigureFormat::svg);
        blob += render_tableau(tab, FigureFormat::tikz);
        blob += render_multichain(fixed, FigureFormat::svg);
        blob += render_multichain(fixed, FigureFormat::tikz);
        for (const auto& c : oracle::enumerate_min_chains(p)) blob += multichain_to_text(c);
        for (const auto& q : oracle::enumerate_interval(Path::bottom(4), Path::top(4)))
            blob += q.word() + "\n";
        for (const auto& tt :
             oracle::enumerate_tableaux(Shape({4, 2, 1}), 7, oracle::TabKind::increasing))
            blob += tableau_to_json(tt).dump() + "\n";
        for (const auto& [b, cs] : oracle::enumerate_type_v_brute(Path::parse("uduudd"))) {
            blob += b.word() + ":" + std::to_string(cs.size()) + "\n";
        }
        return blob;
    };
    std::string first = run_once(), second = run_once();
    r.instances = 2;
    if (first != second) record_failure(r, "outputs differ between two runs");
    r.seconds = timer.elapsed();
    return r;
}

std::vector<std::string> suite_names() {
    return {"f-threeway", "prop2", "prop3", "hook", "theta", "bijections", "typeV", "degree",
            "determinism"};
}

SuiteReport run_suite(const std::string& name, int max_n) {
    if (name == "f-threeway") return verify_f_threeway(max_n);
    if (name == "prop2") return verify_prop2(max_n - (max_n % 2));
    if (name == "prop3") return verify_prop3(max_n);
    if (name == "hook") return verify_hook(max_n, std::min(max_n, 6));
    if (name == "theta") return verify_theta(std::min(max_n, 7), 20000, 200);
    if (name == "bijections")
        return verify_bijections(std::min(max_n, 8), std::min(max_n, 8), std::min(max_n, 8),
                                 std::min(max_n, 10));
    if (name == "typeV") return verify_type_v(max_n - (max_n % 2));
    if (name == "degree") return verify_degree(max_n);
    if (name == "determinism") return verify_determinism();
    fail("unknown-suite", "unknown verification suite: " + name);
}

}  // namespace shc
