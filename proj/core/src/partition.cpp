#include "rectadd/partition.hpp"

#include "rectadd/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rectadd {

namespace {
void normalize(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (size_t i = 0; i < p.size(); ++i) {
        RECTADD_CHECK(p[i] >= 0, "negative part");
        if (i + 1 < p.size()) RECTADD_CHECK(p[i] >= p[i + 1], "parts not weakly decreasing");
    }
}
} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    normalize(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    normalize(parts_);
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::is_even() const {
    for (int p : parts_)
        if (p % 2 != 0) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int j = 0; j < parts_[0]; ++j) c[j] = column_length(j + 1);
    return Partition(std::move(c));
}

int Partition::column_length(int j) const {
    int n = 0;
    for (int p : parts_)
        if (p >= j) ++n;
    return n;
}

int Partition::arm(int i, int j) const {
    return parts_[i - 1] - j;
}

int Partition::leg(int i, int j) const {
    return column_length(j) - i;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    int n = std::max(length(), o.length());
    for (int i = 0; i < n; ++i) {
        if (part(i) != o.part(i)) return part(i) <=> o.part(i);
    }
    return std::strong_ordering::equal;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {
void rec_partitions(int n, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        rec_partitions(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> enumerate_partitions(int n, int max_len) {
    RECTADD_CHECK(n >= 0 && max_len >= 0, "enumerate_partitions wants n, max_len >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    rec_partitions(n, n, max_len, cur, out);
    return out; // first parts chosen largest-first => decreasing lex order
}

std::pair<Rat, Rat> hook_products(const Partition& mu, const Rat& theta) {
    Rat h = 1, hp = 1;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu.parts()[i - 1]; ++j) {
            Rat a = mu.arm(i, j);
            Rat l = mu.leg(i, j);
            h *= a + 1 + theta * l;
            hp *= a + theta + theta * l;
        }
    }
    return {h, hp};
}

Rat gen_pochhammer(const Rat& t, const Partition& mu, const Rat& theta) {
    Rat r = 1;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.parts()[i - 1]; ++j)
            r *= t + (j - 1) - theta * (i - 1);
    return r;
}

} // namespace rectadd
