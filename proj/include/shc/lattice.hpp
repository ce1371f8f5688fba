#pragma once

#include "shc/bigint.hpp"
#include "shc/path.hpp"

namespace shc {

enum class Order { equal, less, greater, incomparable };

// Pointwise comparison of height profiles. Paths must have equal length.
Order compare(const Path& p, const Path& q);

bool below_or_equal(const Path& p, const Path& q);  // p <= q

Path join(const Path& p, const Path& q);  // heightwise max
Path meet(const Path& p, const Path& q);  // heightwise min

// l(P,Q) = 1/2 sum (h_i(Q) - h_i(P)); the length of every saturated P-Q chain.
long long chain_length(const Path& p, const Path& q);

// One cover per valley of p: that valley turned into a peak.
std::vector<Path> covers(const Path& p);

// Join of all covers: every valley turned into a peak. filling(u^n) = u^n.
Path filling(const Path& p);

// Number of filling iterations until u^n.
int degree(const Path& p);

// |{R : p <= R <= q}| by dynamic programming over positions.
Int count_interval(const Path& p, const Path& q);

// A weakly increasing sequence of equal-length paths.
class Multichain {
public:
    Multichain() = default;
    explicit Multichain(std::vector<Path> paths);  // validates order

    const std::vector<Path>& paths() const { return paths_; }
    const Path& at(int i) const { return paths_[static_cast<size_t>(i)]; }
    int length() const { return static_cast<int>(paths_.size()) - 1; }  // k
    int base_length() const { return paths_.empty() ? 0 : paths_.front().size(); }

    bool operator==(const Multichain&) const = default;

private:
    std::vector<Path> paths_;
};

struct MultichainClass {
    bool is_chain = false;        // all steps strict
    bool small_intervals = false; // every step flips a (possibly empty) valley set
    bool is_saturated = false;    // chain of length l(P_0, P_k)
};

// If top_required, P_k must be u^n.
MultichainClass classify_multichain(const Multichain& c, bool top_required);

// Single multichain step: x <= y <= filling(x), i.e. y flips a valley set of x.
bool is_small_step(const Path& x, const Path& y);

}  // namespace shc
