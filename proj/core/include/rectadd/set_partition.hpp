#ifndef RECTADD_SET_PARTITION_HPP
#define RECTADD_SET_PARTITION_HPP

#include "rectadd/rational.hpp"

#include <vector>

namespace rectadd {

// Partition of {1..n} into disjoint blocks, stored sorted by minimum.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }

    bool is_noncrossing() const;         // stack scan, O(n)
    bool is_noncrossing_brute() const;   // O(n^4) oracle over pairs
    bool is_even() const;

    bool operator==(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_; // each sorted; ordered by min
};

// P_i = #{elements of B_1..B_i above min(B_i)},
// Q_i = #{elements of B_1..B_i above max(B_i)}; P_i - Q_i = |B_i| - 1.
struct WeightData {
    std::vector<int> P;
    std::vector<int> Q;
};

WeightData weight_data(const SetPartition& pi);

enum class SetPartitionFilter {
    all,
    noncrossing,
    noncrossing_even,
    nc_perfect_matchings,
};

std::vector<SetPartition> enumerate_set_partitions(int n, SetPartitionFilter filter);

// The alternating constant sequence C_1 = 2 q gamma, C_2 = 2 gamma + 2,
// C_3 = 2 q gamma + 2, C_4 = 2 gamma + 4, ...
Rat weight_constant(int index, const Rat& q, const Rat& gamma);

// W(pi) = prod_i C_{Q_i+1} ... C_{P_i}; rejects crossing pi.
Rat weight_W(const SetPartition& pi, const Rat& q, const Rat& gamma);

// Same product with a caller-supplied C-sequence (used by the
// gamma-cumulant specialization C_j = gamma + j).
template <typename ConstFn>
Rat weight_W_generic(const WeightData& wd, ConstFn c) {
    Rat w = 1;
    for (size_t i = 0; i < wd.P.size(); ++i)
        for (int j = wd.Q[i] + 1; j <= wd.P[i]; ++j) w *= c(j);
    return w;
}

// Number of blocks whose minimum is even.
int even_min_count(const SetPartition& pi);

} // namespace rectadd

#endif
