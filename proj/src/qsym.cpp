#include "fintop/qsym.hpp"

#include <algorithm>
#include <numeric>

#include "fintop/errors.hpp"

namespace fintop {

int composition_degree(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool CompositionOrder::operator()(const Composition& a, const Composition& b) const {
    int da = composition_degree(a), db = composition_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

QSymElement QSymElement::monomial(const Composition& a, const Scalar& c) {
    QSymElement e;
    e.add(a, c);
    return e;
}

Scalar QSymElement::coeff(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Scalar() : it->second;
}

void QSymElement::add(const Composition& a, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSymElement QSymElement::operator-() const {
    QSymElement out;
    for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
    return out;
}

QSymElement& QSymElement::operator+=(const QSymElement& rhs) {
    for (const auto& [a, c] : rhs.terms_) add(a, c);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& rhs) {
    for (const auto& [a, c] : rhs.terms_) add(a, -c);
    return *this;
}

QSymElement QSymElement::scaled(const Scalar& c) const {
    QSymElement out;
    if (c.is_zero()) return out;
    for (const auto& [a, t] : terms_) out.add(a, t * c);
    return out;
}

namespace {

// Peels nonempty down-sets off the front. `below(c)` must give the strict
// lower set of c restricted to the remaining mask.
template <typename BelowFn, typename Sink>
void peel(std::uint64_t remaining, int k, BelowFn below, std::vector<std::uint64_t>& acc,
          Sink sink) {
    if (remaining == 0) {
        sink(acc);
        return;
    }
    // enumerate nonempty subsets of `remaining` that are down-sets within it
    std::vector<int> elems;
    for (int c = 0; c < k; ++c)
        if ((remaining >> c) & 1u) elems.push_back(c);
    int m = static_cast<int>(elems.size());
    for (std::uint64_t s = 1; s < (1ull << m); ++s) {
        std::uint64_t level = 0;
        for (int t = 0; t < m; ++t)
            if ((s >> t) & 1u) level |= 1ull << elems[t];
        bool down = true;
        for (int t = 0; t < m && down; ++t)
            if ((level >> elems[t]) & 1u)
                if (below(elems[t]) & remaining & ~level) down = false;
        if (!down) continue;
        acc.push_back(level);
        peel(remaining & ~level, k, below, acc, sink);
        acc.pop_back();
    }
}

}  // namespace

std::vector<LevelPartition> standard_linear_extensions(const FiniteSpace& x) {
    if (x.empty()) throw EmptySpace("the empty space has no linear extensions");
    int k = x.klass_count();
    if (k > 20) throw Unsupported("too many classes for extension enumeration");
    std::uint64_t all = (k == 64 ? ~0ull : (1ull << k) - 1);
    std::vector<LevelPartition> out;
    std::vector<std::uint64_t> acc;
    peel(
        all, k, [&](int c) { return x.lower_set(c); }, acc,
        [&](const std::vector<std::uint64_t>& levels) { out.push_back({levels}); });
    return out;
}

std::vector<std::vector<std::uint64_t>> standard_linear_extensions(const Preorder& p) {
    int n = p.size();
    if (n > 20) throw Unsupported("too many points for extension enumeration");
    // non-strict lower sets: a down-set holding one member of an
    // equivalence class must hold the whole class
    std::vector<std::uint64_t> lower(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && p.leq(j, i)) lower[i] |= 1ull << j;
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> acc;
    peel(
        p.ground_mask(), n, [&](int c) { return lower[c]; }, acc,
        [&](const std::vector<std::uint64_t>& levels) { out.push_back(levels); });
    return out;
}

namespace {

void validate_extension(const FiniteSpace& x, const LevelPartition& f) {
    int k = x.klass_count();
    std::uint64_t all = (k == 0 ? 0 : (k == 64 ? ~0ull : (1ull << k) - 1));
    std::uint64_t seen = 0;
    for (std::uint64_t level : f.levels) {
        if (level == 0) throw InvalidExtension("empty level");
        if (level & ~all) throw InvalidExtension("level mentions unknown class");
        if (level & seen) throw InvalidExtension("levels overlap");
        seen |= level;
        for (int c = 0; c < k; ++c)
            if ((level >> c) & 1u)
                if (x.lower_set(c) & ~seen)
                    throw InvalidExtension("level prefix is not a down-set");
    }
    if (seen != all) throw InvalidExtension("levels do not cover all classes");
}

}  // namespace

Int alpha(const FiniteSpace& x, const LevelPartition& f) {
    validate_extension(x, f);
    Int out = 0;
    for (std::uint64_t level : f.levels)
        for (int c = 0; c < x.klass_count(); ++c)
            if ((level >> c) & 1u) {
                std::uint64_t above_in_level = x.upper_set(c) & level;
                for (int d = 0; d < x.klass_count(); ++d)
                    if ((above_in_level >> d) & 1u)
                        out += static_cast<Int>(x.weight(c)) * x.weight(d);
            }
    return out;
}

Composition packing(const FiniteSpace& x, const LevelPartition& f) {
    validate_extension(x, f);
    Composition out;
    for (std::uint64_t level : f.levels) {
        int total = 0;
        for (int c = 0; c < x.klass_count(); ++c)
            if ((level >> c) & 1u) total += x.weight(c);
        out.push_back(total);
    }
    return out;
}

QSymElement phi_q_basis(const FiniteSpace& x) {
    if (x.empty()) return QSymElement::unit();
    QSymElement out;
    for (const LevelPartition& f : standard_linear_extensions(x))
        out.add(packing(x, f), Scalar::q_pow(static_cast<int>(alpha(x, f))));
    return out;
}

QSymElement phi_q(const FVector& a) {
    QSymElement out;
    for (const auto& [x, c] : a.terms()) out += phi_q_basis(x).scaled(c);
    return out;
}

namespace {

void quasi_shuffle(const Composition& a, std::size_t ia, const Composition& b,
                   std::size_t ib, Composition& acc, QSymElement& out) {
    if (ia == a.size() && ib == b.size()) {
        out.add(acc, Scalar(1));
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        quasi_shuffle(a, ia + 1, b, ib, acc, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        quasi_shuffle(a, ia, b, ib + 1, acc, out);
        acc.pop_back();
    }
    if (ia < a.size() && ib < b.size()) {
        acc.push_back(a[ia] + b[ib]);
        quasi_shuffle(a, ia + 1, b, ib + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

QSymElement qsym_product(const QSymElement& a, const QSymElement& b) {
    QSymElement out;
    for (const auto& [ca, sa] : a.terms())
        for (const auto& [cb, sb] : b.terms()) {
            QSymElement part;
            Composition acc;
            quasi_shuffle(ca, 0, cb, 0, acc, part);
            out += part.scaled(sa * sb);
        }
    return out;
}

QSymTensor qsym_coproduct(const QSymElement& a) {
    QSymTensor out;
    for (const auto& [comp, c] : a.terms())
        for (std::size_t i = 0; i <= comp.size(); ++i) {
            Composition left(comp.begin(), comp.begin() + i);
            Composition right(comp.begin() + i, comp.end());
            auto key = std::make_pair(std::move(left), std::move(right));
            Scalar v = (out[key] += c);
            if (v.is_zero()) out.erase(key);
        }
    return out;
}

QSymElement succ_q(const QSymElement& a, const QSymElement& b) {
    QSymElement out;
    for (const auto& [ca, sa] : a.terms())
        for (const auto& [cb, sb] : b.terms()) {
            Scalar c = sa * sb;
            if (ca.empty()) {
                out.add(cb, c);
                continue;
            }
            if (cb.empty()) {
                out.add(ca, c);
                continue;
            }
            Composition concat = ca;
            concat.insert(concat.end(), cb.begin(), cb.end());
            out.add(concat, c);
            Composition merged = ca;
            merged.back() += cb.front();
            merged.insert(merged.end(), cb.begin() + 1, cb.end());
            out.add(merged, c * Scalar::q_pow(ca.back() * cb.front()));
        }
    return out;
}

TruncatedPoly expand_polynomial(const QSymElement& a, int m) {
    if (m < 1) throw Unsupported("need at least one variable");
    TruncatedPoly out;
    auto add = [&out](const std::vector<int>& expo, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar v = (out[expo] += c);
        if (v.is_zero()) out.erase(expo);
    };
    for (const auto& [comp, c] : a.terms()) {
        int len = static_cast<int>(comp.size());
        if (len > m) continue;  // truncated away
        // choose variable indices i_1 < ... < i_len in [0, m)
        std::vector<int> idx(len);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<int> expo(m, 0);
            for (int t = 0; t < len; ++t) expo[idx[t]] = comp[t];
            add(expo, c);
            int t = len - 1;
            while (t >= 0 && idx[t] == m - len + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < len; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return out;
}

TruncatedPoly poly_multiply(const TruncatedPoly& a, const TruncatedPoly& b) {
    TruncatedPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (std::size_t i = 0; i < e.size() && i < eb.size(); ++i) e[i] += eb[i];
            Scalar v = (out[e] += ca * cb);
            if (v.is_zero()) out.erase(e);
        }
    return out;
}

Scalar zeta_qsym(const QSymElement& a) {
    Scalar out;
    for (const auto& [comp, c] : a.terms())
        if (comp.size() <= 1) out += c;
    return out;
}

}  // namespace fintop
