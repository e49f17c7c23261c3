#include "fintop/space_algebra.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

FVector FVector::monomial(const FiniteSpace& x, const Scalar& c) {
    FVector v;
    v.add(x, c);
    return v;
}

Scalar FVector::coeff(const FiniteSpace& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Scalar() : it->second;
}

void FVector::add(const FiniteSpace& x, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FVector FVector::operator-() const {
    FVector out;
    for (const auto& [x, c] : terms_) out.terms_.emplace(x, -c);
    return out;
}

FVector& FVector::operator+=(const FVector& rhs) {
    for (const auto& [x, c] : rhs.terms_) add(x, c);
    return *this;
}

FVector& FVector::operator-=(const FVector& rhs) {
    for (const auto& [x, c] : rhs.terms_) add(x, -c);
    return *this;
}

FVector FVector::scaled(const Scalar& c) const {
    FVector out;
    if (c.is_zero()) return out;
    for (const auto& [x, t] : terms_) out.add(x, t * c);
    return out;
}

FTensor FTensor::basis(const FiniteSpace& a, const FiniteSpace& b) {
    FTensor t;
    t.add(a, b, Scalar(1));
    return t;
}

void FTensor::add(const FiniteSpace& a, const FiniteSpace& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FTensor& FTensor::operator+=(const FTensor& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
    return *this;
}

FTensor& FTensor::operator-=(const FTensor& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, -c);
    return *this;
}

FiniteSpace space_product(const FiniteSpace& x, const FiniteSpace& y) {
    Preorder px = expand(x);
    Preorder py = expand(y);
    int n = px.size(), m = py.size();
    std::vector<std::uint64_t> rows(n + m, 0);
    for (int i = 0; i < n; ++i) rows[i] = px.up_row(i);
    for (int i = 0; i < m; ++i) rows[n + i] = py.up_row(i) << n;
    return canonicalize(Preorder::from_rows(n + m, std::move(rows)));
}

FiniteSpace space_join(const FiniteSpace& x, const FiniteSpace& y) {
    Preorder px = expand(x);
    Preorder py = expand(y);
    int n = px.size(), m = py.size();
    std::uint64_t top = ((m == 0 ? 0 : (m == 64 ? ~0ull : (1ull << m) - 1)) << n);
    std::vector<std::uint64_t> rows(n + m, 0);
    for (int i = 0; i < n; ++i) rows[i] = px.up_row(i) | top;
    for (int i = 0; i < m; ++i) rows[n + i] = py.up_row(i) << n;
    return canonicalize(Preorder::from_rows(n + m, std::move(rows)));
}

FVector product_sum(const FVector& a, const FVector& b) {
    FVector out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) out.add(space_product(x, y), cx * cy);
    return out;
}

FVector product_join(const FVector& a, const FVector& b) {
    FVector out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) out.add(space_join(x, y), cx * cy);
    return out;
}

namespace {

// Up-sets of the class order, as class masks. Each open set of the
// underlying topology is a union of classes, so these index the coproduct.
std::vector<std::uint64_t> class_up_sets(const FiniteSpace& x) {
    int k = x.klass_count();
    if (k > 30) throw Unsupported("too many classes for open set enumeration");
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (1ull << k); ++s) {
        bool up = true;
        for (int c = 0; c < k && up; ++c)
            if ((s >> c) & 1u)
                if (x.upper_set(c) & ~s) up = false;
        if (up) out.push_back(s);
    }
    return out;
}

}  // namespace

FTensor coproduct_basis(const FiniteSpace& x) {
    FTensor out;
    std::uint64_t all = x.klass_count() == 0 ? 0 : (1ull << x.klass_count()) - 1;
    for (std::uint64_t open : class_up_sets(x))
        out.add(x.restrict_classes(all & ~open), x.restrict_classes(open), Scalar(1));
    return out;
}

FTensor coproduct(const FVector& a) {
    FTensor out;
    for (const auto& [x, c] : a.terms()) {
        FTensor dx = coproduct_basis(x);
        for (const auto& [k, t] : dx.terms()) out.add(k.first, k.second, t * c);
    }
    return out;
}

Scalar counit(const FVector& a) { return a.coeff(FiniteSpace()); }

namespace {

const FVector& antipode_basis(const FiniteSpace& x) {
    thread_local std::map<FiniteSpace, FVector> cache;
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    FVector s;
    if (x.empty()) {
        s = FVector::unit();
    } else {
        s = -FVector::basis(x);
        FTensor dx = coproduct_basis(x);
        for (const auto& [k, c] : dx.terms()) {
            if (k.first.empty() || k.second.empty()) continue;
            s -= product_sum(antipode_basis(k.first), FVector::basis(k.second)).scaled(c);
        }
    }
    return cache.emplace(x, std::move(s)).first->second;
}

}  // namespace

FVector antipode(const FVector& a) {
    FVector out;
    for (const auto& [x, c] : a.terms()) out += antipode_basis(x).scaled(c);
    return out;
}

Scalar zeta_q(const FVector& a) {
    Scalar out;
    for (const auto& [x, c] : a.terms())
        out += c * Scalar::q_pow(static_cast<int>(x.strict_pair_count()));
    return out;
}

std::vector<FiniteSpace> decompose_connected(const FiniteSpace& x) {
    if (x.empty()) throw EmptySpace("cannot decompose the empty space");
    int k = x.klass_count();
    std::vector<std::uint64_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (x.less(i, j) || x.less(j, i)) adj[i] |= 1ull << j;
    std::vector<FiniteSpace> out;
    std::uint64_t seen = 0;
    for (int i = 0; i < k; ++i) {
        if ((seen >> i) & 1u) continue;
        std::uint64_t comp = 1ull << i;
        for (;;) {
            std::uint64_t grow = comp;
            for (int j = 0; j < k; ++j)
                if ((comp >> j) & 1u) grow |= adj[j];
            if (grow == comp) break;
            comp = grow;
        }
        seen |= comp;
        out.push_back(x.restrict_classes(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteSpace> join_factors(const FiniteSpace& x) {
    if (x.empty()) throw EmptySpace("cannot factor the empty space");
    int k = x.klass_count();
    // In a valid split (lower, upper) every lower class lies strictly below
    // every upper class, so the counts |upper_set| separate the two sides.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    auto above_count = [&](int c) { return __builtin_popcountll(x.upper_set(c)); };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return above_count(a) > above_count(b); });

    std::vector<int> split_positions;
    for (int m = 1; m < k; ++m) {
        if (above_count(order[m - 1]) <= above_count(order[m])) continue;
        bool valid = true;
        for (int a = 0; a < m && valid; ++a)
            for (int b = m; b < k && valid; ++b)
                if (!x.less(order[a], order[b])) valid = false;
        if (valid) split_positions.push_back(m);
    }

    std::vector<FiniteSpace> out;
    int begin = 0;
    split_positions.push_back(k);
    for (int end : split_positions) {
        std::uint64_t mask = 0;
        for (int t = begin; t < end; ++t) mask |= 1ull << order[t];
        out.push_back(x.restrict_classes(mask));
        begin = end;
    }
    return out;
}

FTensor tensor_product_sum(const FTensor& a, const FTensor& b) {
    FTensor out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(space_product(ka.first, kb.first), space_product(ka.second, kb.second),
                    ca * cb);
    return out;
}

FTensor tensor_product_join(const FTensor& a, const FTensor& b) {
    FTensor out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(space_join(ka.first, kb.first), space_join(ka.second, kb.second),
                    ca * cb);
    return out;
}

FTensor3 coproduct_left(const FTensor& t) {
    FTensor3 out;
    for (const auto& [k, c] : t.terms()) {
        FTensor dk = coproduct_basis(k.first);
        for (const auto& [kk, cc] : dk.terms()) {
            auto key = std::make_tuple(kk.first, kk.second, k.second);
            Scalar v = (out[key] += cc * c);
            if (v.is_zero()) out.erase(key);
        }
    }
    return out;
}

FTensor3 coproduct_right(const FTensor& t) {
    FTensor3 out;
    for (const auto& [k, c] : t.terms()) {
        FTensor dk = coproduct_basis(k.second);
        for (const auto& [kk, cc] : dk.terms()) {
            auto key = std::make_tuple(k.first, kk.first, kk.second);
            Scalar v = (out[key] += cc * c);
            if (v.is_zero()) out.erase(key);
        }
    }
    return out;
}

}  // namespace fintop
