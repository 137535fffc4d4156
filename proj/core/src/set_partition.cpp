#include "rectadd/set_partition.hpp"

#include "rectadd/errors.hpp"

#include <algorithm>
#include <functional>

namespace rectadd {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    std::vector<char> seen(n_ + 1, 0);
    for (auto& b : blocks_) {
        RECTADD_CHECK(!b.empty(), "empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            RECTADD_CHECK(e >= 1 && e <= n_ && !seen[e], "blocks must partition {1..n}");
            seen[e] = 1;
        }
    }
    for (int e = 1; e <= n_; ++e) RECTADD_CHECK(seen[e], "blocks must cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool SetPartition::is_noncrossing() const {
    std::vector<int> block_of(n_ + 1, -1), max_of(num_blocks());
    for (int bi = 0; bi < num_blocks(); ++bi) {
        for (int e : blocks_[bi]) block_of[e] = bi;
        max_of[bi] = blocks_[bi].back();
    }
    std::vector<int> stack;
    for (int e = 1; e <= n_; ++e) {
        int b = block_of[e];
        if (e == blocks_[b].front()) stack.push_back(b);
        if (stack.empty() || stack.back() != b) return false;
        if (e == max_of[b]) stack.pop_back();
    }
    return true;
}

bool SetPartition::is_noncrossing_brute() const {
    // a < c < b < d with {a,b} in one block, {c,d} in another
    for (int i = 0; i < num_blocks(); ++i)
        for (int j = 0; j < num_blocks(); ++j) {
            if (i == j) continue;
            for (int a : blocks_[i])
                for (int b : blocks_[i])
                    for (int c : blocks_[j])
                        for (int d : blocks_[j])
                            if (a < c && c < b && b < d) return false;
        }
    return true;
}

bool SetPartition::is_even() const {
    for (const auto& b : blocks_)
        if (b.size() % 2 != 0) return false;
    return true;
}

WeightData weight_data(const SetPartition& pi) {
    WeightData wd;
    const auto& blocks = pi.blocks();
    for (size_t i = 0; i < blocks.size(); ++i) {
        int mn = blocks[i].front(), mx = blocks[i].back();
        int p = 0, q = 0;
        for (size_t j = 0; j <= i; ++j)
            for (int e : blocks[j]) {
                if (e > mn) ++p;
                if (e > mx) ++q;
            }
        RECTADD_CHECK(p - q == static_cast<int>(blocks[i].size()) - 1,
                      "P_i - Q_i must equal |B_i| - 1");
        wd.P.push_back(p);
        wd.Q.push_back(q);
    }
    return wd;
}

namespace {

// All set partitions via restricted growth strings.
void rec_all(int n, int pos, int max_used, std::vector<int>& label,
             std::vector<SetPartition>& out) {
    if (pos > n) {
        std::vector<std::vector<int>> blocks(max_used + 1);
        for (int e = 1; e <= n; ++e) blocks[label[e]].push_back(e);
        out.emplace_back(n, std::move(blocks));
        return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
        label[pos] = b;
        rec_all(n, pos + 1, std::max(max_used, b), label, out);
    }
}

// Non-crossing partitions by gap recursion: the block of the minimum of a
// contiguous segment splits the remainder into independent sub-segments.
struct NcGen {
    int n;
    std::function<bool(int)> size_ok;
    std::vector<std::vector<int>> acc;
    std::vector<SetPartition>* out;

    void segments(std::vector<std::pair<int, int>>& pending) {
        if (pending.empty()) {
            out->emplace_back(n, acc);
            return;
        }
        auto [l, r] = pending.back();
        pending.pop_back();
        std::vector<int> block{l};
        grow_block(l, r, l, block, pending);
        pending.emplace_back(l, r);
    }

    void grow_block(int l, int r, int prev, std::vector<int>& block,
                    std::vector<std::pair<int, int>>& pending) {
        if (size_ok(static_cast<int>(block.size()))) {
            bool tail = prev + 1 <= r;
            if (tail) pending.emplace_back(prev + 1, r);
            acc.push_back(block);
            segments(pending);
            acc.pop_back();
            if (tail) pending.pop_back();
        }
        for (int s = prev + 1; s <= r; ++s) {
            bool gap = prev + 1 <= s - 1;
            if (gap) pending.emplace_back(prev + 1, s - 1);
            block.push_back(s);
            grow_block(l, r, s, block, pending);
            block.pop_back();
            if (gap) pending.pop_back();
        }
    }
};

} // namespace

std::vector<SetPartition> enumerate_set_partitions(int n, SetPartitionFilter filter) {
    RECTADD_CHECK(n >= 1, "enumerate_set_partitions wants n >= 1");
    std::vector<SetPartition> out;
    switch (filter) {
    case SetPartitionFilter::all: {
        std::vector<int> label(n + 1, 0);
        rec_all(n, 2, 0, label, out); // element 1 always labeled 0
        break;
    }
    case SetPartitionFilter::noncrossing:
    case SetPartitionFilter::noncrossing_even:
    case SetPartitionFilter::nc_perfect_matchings: {
        NcGen gen;
        gen.n = n;
        gen.out = &out;
        if (filter == SetPartitionFilter::noncrossing)
            gen.size_ok = [](int) { return true; };
        else if (filter == SetPartitionFilter::noncrossing_even)
            gen.size_ok = [](int s) { return s % 2 == 0; };
        else
            gen.size_ok = [](int s) { return s == 2; };
        if (filter != SetPartitionFilter::noncrossing)
            RECTADD_CHECK(n % 2 == 0, "even filters want even n");
        std::vector<std::pair<int, int>> pending{{1, n}};
        gen.segments(pending);
        break;
    }
    }
    return out;
}

Rat weight_constant(int index, const Rat& q, const Rat& gamma) {
    RECTADD_CHECK(index >= 1, "weight constants are 1-indexed");
    if (index % 2 == 1) return 2 * q * gamma + (index - 1); // 2qg, 2qg+2, ...
    return 2 * gamma + index;                               // 2g+2, 2g+4, ...
}

Rat weight_W(const SetPartition& pi, const Rat& q, const Rat& gamma) {
    if (!pi.is_noncrossing())
        throw validation_error("weight_W is defined for non-crossing partitions only");
    WeightData wd = weight_data(pi);
    return weight_W_generic(wd, [&](int j) { return weight_constant(j, q, gamma); });
}

int even_min_count(const SetPartition& pi) {
    int c = 0;
    for (const auto& b : pi.blocks())
        if (b.front() % 2 == 0) ++c;
    return c;
}

} // namespace rectadd
