#include "fintop/preorder.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

void check_size(int n) {
    if (n < 0 || n > Preorder::max_size)
        throw Unsupported("ground set size " + std::to_string(n) +
                          " outside supported range [0, 64]");
}

}  // namespace

Preorder::Preorder(int n) : n_(n), rows_(n) {
    check_size(n);
    for (int i = 0; i < n; ++i) rows_[i] = 1ull << i;
}

Preorder Preorder::from_rows(int n, std::vector<std::uint64_t> rows) {
    check_size(n);
    Preorder p;
    p.n_ = n;
    p.rows_ = std::move(rows);
    std::uint64_t ground = p.ground_mask();
    for (int i = 0; i < n; ++i) {
        if (p.rows_[i] & ~ground)
            throw IndexOutOfRange("relation row mentions an element outside the ground set");
        if (!p.leq(i, i))
            throw Error("relation is not reflexive at element " + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j) && (p.rows_[j] & ~p.rows_[i]))
                throw Error("relation is not transitive through element " +
                            std::to_string(j + 1));
    return p;
}

Preorder Preorder::closure_of(int n, std::vector<std::uint64_t> rows) {
    check_size(n);
    rows.resize(n);
    for (int i = 0; i < n; ++i) rows[i] |= 1ull << i;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
    Preorder p;
    p.n_ = n;
    p.rows_ = std::move(rows);
    return p;
}

std::uint64_t Preorder::ground_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

std::uint64_t Preorder::minimal_open(int x) const {
    if (x < 0 || x >= n_)
        throw IndexOutOfRange("element " + std::to_string(x + 1) +
                              " outside ground set of size " + std::to_string(n_));
    return rows_[x];
}

bool Preorder::is_open(std::uint64_t subset) const {
    for (int i = 0; i < n_; ++i)
        if ((subset >> i) & 1u)
            if (rows_[i] & ~subset) return false;
    return true;
}

std::string subset_string(std::uint64_t subset, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((subset >> i) & 1u) s[i] = '1';
    return s;
}

std::vector<std::uint64_t> Preorder::open_set_masks() const {
    // Opens are unions of equivalence classes, so enumerate up-sets of the
    // class poset rather than subsets of the ground set.
    std::vector<std::uint64_t> class_masks;
    std::vector<int> class_of(n_, -1);
    for (int i = 0; i < n_; ++i) {
        if (class_of[i] >= 0) continue;
        std::uint64_t mask = 0;
        for (int j = i; j < n_; ++j)
            if (equivalent(i, j)) {
                mask |= 1ull << j;
                class_of[j] = static_cast<int>(class_masks.size());
            }
        class_masks.push_back(mask);
    }
    int k = static_cast<int>(class_masks.size());
    if (k > 30)
        throw Unsupported("too many equivalence classes for open set enumeration");

    // class_up[c] bit d set <=> class c <= class d
    std::vector<std::uint32_t> class_up(k, 0);
    for (int c = 0; c < k; ++c) {
        int rep = 0;
        while (class_of[rep] != c) ++rep;
        for (int d = 0; d < k; ++d) {
            int rep2 = 0;
            while (class_of[rep2] != d) ++rep2;
            if (leq(rep, rep2)) class_up[c] |= 1u << d;
        }
    }

    std::vector<std::uint64_t> opens;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        bool up = true;
        for (int c = 0; c < k && up; ++c)
            if ((s >> c) & 1u)
                if (class_up[c] & ~s) up = false;
        if (!up) continue;
        std::uint64_t mask = 0;
        for (int c = 0; c < k; ++c)
            if ((s >> c) & 1u) mask |= class_masks[c];
        opens.push_back(mask);
    }
    std::sort(opens.begin(), opens.end(), [this](std::uint64_t a, std::uint64_t b) {
        return subset_string(a, n_) < subset_string(b, n_);
    });
    return opens;
}

Preorder Preorder::restrict(std::uint64_t subset) const {
    if (subset & ~ground_mask())
        throw IndexOutOfRange("restriction subset outside ground set");
    std::vector<int> kept;
    for (int i = 0; i < n_; ++i)
        if ((subset >> i) & 1u) kept.push_back(i);
    int m = static_cast<int>(kept.size());
    Preorder out;
    out.n_ = m;
    out.rows_.assign(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (leq(kept[a], kept[b])) out.rows_[a] |= 1ull << b;
    return out;
}

Preorder Preorder::dual() const {
    Preorder out;
    out.n_ = n_;
    out.rows_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (leq(j, i)) out.rows_[i] |= 1ull << j;
    return out;
}

Preorder from_open_sets(int n, const std::vector<std::uint64_t>& family) {
    check_size(n);
    std::uint64_t ground = n == 64 ? ~0ull : (1ull << n) - 1;
    std::set<std::uint64_t> fam(family.begin(), family.end());
    for (std::uint64_t s : fam)
        if (s & ~ground) throw IndexOutOfRange("family member outside ground set");
    if (!fam.count(0))
        throw NotATopology("empty set missing from the family");
    if (!fam.count(ground))
        throw NotATopology("full set missing from the family");
    for (std::uint64_t a : fam)
        for (std::uint64_t b : fam) {
            if (!fam.count(a | b))
                throw NotATopology("union of " + subset_string(a, n) + " and " +
                                   subset_string(b, n) + " escapes the family");
            if (!fam.count(a & b))
                throw NotATopology("intersection of " + subset_string(a, n) + " and " +
                                   subset_string(b, n) + " escapes the family");
        }
    // i <= j iff every member containing i also contains j.
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t common = ground;
        for (std::uint64_t s : fam)
            if ((s >> i) & 1u) common &= s;
        rows[i] = common;
    }
    Preorder p = Preorder::from_rows(n, std::move(rows));
    // A valid topology reproduces exactly; anything else already threw above.
    return p;
}

}  // namespace fintop
