#ifndef RECTADD_PARTITION_HPP
#define RECTADD_PARTITION_HPP

#include "rectadd/rational.hpp"

#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

namespace rectadd {

// Weakly decreasing tuple of nonnegative integers; trailing zeros are
// stripped so that equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;   // |lambda|
    bool empty() const { return parts_.empty(); }
    bool is_even() const;

    Partition conjugate() const;

    // Number of boxes in column j (1-based).
    int column_length(int j) const;

    // arm a(s) and leg l(s) of the box s = (i, j), 1-based coordinates.
    int arm(int i, int j) const;
    int leg(int i, int j) const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on the padded part vectors; a total order usable as a
    // map key, and the usual lexicographic order when |lambda| = |mu|.
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string str() const;

private:
    std::vector<int> parts_;
};

// All partitions of n with length <= max_len, in decreasing
// lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int max_len);

// H(mu) = prod (a(s)+1+theta l(s)), H'(mu) = prod (a(s)+theta+theta l(s)).
std::pair<Rat, Rat> hook_products(const Partition& mu, const Rat& theta);

// (t)_mu = prod over boxes (i,j) of (t + j - 1 - theta (i-1)).
Rat gen_pochhammer(const Rat& t, const Partition& mu, const Rat& theta);

} // namespace rectadd

#endif
