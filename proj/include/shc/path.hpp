#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shc {

// Error thrown by every precondition / bound check in the library. `code` is a
// short stable identifier ("parse", "not-dyck", "bound-vij-upper", ...).
struct check_error : std::runtime_error {
    std::string code;
    check_error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw check_error(code, msg);
}

inline void require(bool ok, const std::string& code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

enum class Step : unsigned char { up, down };

// A binary path: a word over {u,d}. Immutable after construction.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // Canonical text form, lowercase 'u'/'d'. Uppercase accepted on input.
    static Path parse(std::string_view word);

    std::string word() const;

    int size() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }
    Step step(int i) const { return steps_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<Step>& steps() const { return steps_; }

    int ups() const;
    int downs() const { return size() - ups(); }

    // Heights h_1..h_n of the path's points (h_0 = 0 implicit).
    std::vector<int> heights() const;

    // h_i for i in [0, n].
    int height(int i) const;

    int final_height() const { return empty() ? 0 : height(size()); }
    int min_height() const;  // min over h_0..h_n, the origin included

    Path subpath(int from, int to) const;  // steps from..to inclusive, 1-based
    Path concat(const Path& other) const;

    static Path runs(int n_up, int n_down);  // u^a d^b
    static Path bottom(int n) { return runs(0, n); }  // d^n
    static Path top(int n) { return runs(n, 0); }     // u^n

    bool operator==(const Path&) const = default;
    // Lexicographic on the word ('d' < 'u'); used for canonical orderings.
    bool operator<(const Path& o) const { return word() < o.word(); }

private:
    std::vector<Step> steps_;
};

Path path_from_heights(const std::vector<int>& h);

// k-encoding: k[i] = number of upsteps before the (i+1)-th downstep,
// k[m] = total upsteps, where m = number of downsteps.
struct KEncoding {
    int downs = 0;
    std::vector<int> k;  // size downs + 1, weakly increasing
};

KEncoding k_encoding(const Path& p);
Path from_k_encoding(const KEncoding& enc);

struct PointHeight {
    int position = 0;  // 1-based point index
    int height = 0;
    bool operator==(const PointHeight&) const = default;
};

// Valleys are last points of maximal d-runs, peaks last points of maximal
// u-runs. low/high are absent when the path has no valley (u^n and the empty
// path).
struct ValleyPeakProfile {
    std::vector<PointHeight> valleys;
    std::vector<PointHeight> peaks;
    std::optional<int> low_valley;
    std::optional<int> high_valley;
};

ValleyPeakProfile valley_peak_profile(const Path& p);

struct PathClass {
    bool is_dyck = false;
    bool is_dyck_prefix = false;
    bool is_dyck_suffix = false;
    std::vector<int> return_points;  // non-initial points at height zero
};

PathClass classify(const Path& p);

bool is_dyck(const Path& p);
bool is_dyck_prefix(const Path& p);  // all heights >= 0
bool is_dyck_suffix(const Path& p);  // min height = final height

// a = u a_1 d u a_2 d ... u a_k d; returns the inner components a_i.
std::vector<Path> decompose_prime(const Path& dyck);

// P = a_0 u a_1 ... u a_k with a_i Dyck, k = final height; returns a_0..a_k.
std::vector<Path> decompose_prefix(const Path& dyck_prefix);

// P = a_0 d a_1 ... d a_k with a_i Dyck, k = -min height; returns a_0..a_k.
std::vector<Path> decompose_suffix(const Path& dyck_suffix);

// P without its leading ascent.
Path strip_leading_ups(const Path& p);

// All 2^n paths of length n, in lexicographic word order.
std::vector<Path> all_paths(int n);
// All Dyck paths of length 2m, lexicographic.
std::vector<Path> all_dyck_paths(int half_length);

}  // namespace shc
