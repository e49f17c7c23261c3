#include "fintop/tensor_words.hpp"

#include <sstream>

#include "fintop/errors.hpp"

namespace fintop {

int word_degree(const GradedWord& w) {
    int d = 0;
    for (const Letter& l : w) d += l.degree;
    return d;
}

std::string word_string(const GradedWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i].id << ':' << w[i].degree;
    }
    return os.str();
}

TensorElement TensorElement::monomial(const GradedWord& w, const Scalar& c) {
    TensorElement e;
    e.add(w, c);
    return e;
}

Scalar TensorElement::coeff(const GradedWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void TensorElement::add(const GradedWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, -c);
    return *this;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement out;
    if (c.is_zero()) return out;
    for (const auto& [w, t] : terms_) out.add(w, t * c);
    return out;
}

void tensor2_add(WordTensor2& t, const GradedWord& a, const GradedWord& b,
                 const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    Scalar v = (t[key] += c);
    if (v.is_zero()) t.erase(key);
}

WordTensor2 tensor2_switch(const WordTensor2& t) {
    WordTensor2 out;
    for (const auto& [k, c] : t) tensor2_add(out, k.second, k.first, c);
    return out;
}

TensorElement concat(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            GradedWord w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, cu * cv);
        }
    return out;
}

WordTensor2 deconcat(const TensorElement& a) {
    WordTensor2 out;
    for (const auto& [w, c] : a.terms())
        for (std::size_t i = 0; i <= w.size(); ++i)
            tensor2_add(out, GradedWord(w.begin(), w.begin() + i),
                        GradedWord(w.begin() + i, w.end()), c);
    return out;
}

namespace {

void shuffle_words(const GradedWord& u, std::size_t iu, const GradedWord& v,
                   std::size_t iv, GradedWord& acc, TensorElement& out) {
    if (iu == u.size() && iv == v.size()) {
        out.add(acc, Scalar(1));
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_words(u, iu + 1, v, iv, acc, out);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_words(u, iu, v, iv + 1, acc, out);
        acc.pop_back();
    }
}

TensorElement shuffle_basis(const GradedWord& u, const GradedWord& v) {
    TensorElement out;
    GradedWord acc;
    shuffle_words(u, 0, v, 0, acc, out);
    return out;
}

}  // namespace

TensorElement shuffle(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out += shuffle_basis(u, v).scaled(cu * cv);
    return out;
}

TensorElement half_shuffle_left(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            if (u.empty() && v.empty())
                throw UnitNotAllowed("half shuffle of two unit terms is undefined");
            if (u.empty()) continue;  // 1 < x = 0
            if (v.empty()) {          // x < 1 = x
                out.add(u, cu * cv);
                continue;
            }
            GradedWord rest(u.begin() + 1, u.end());
            TensorElement tail = shuffle_basis(rest, v);
            for (const auto& [w, cw] : tail.terms()) {
                GradedWord full;
                full.push_back(u.front());
                full.insert(full.end(), w.begin(), w.end());
                out.add(full, cw * cu * cv);
            }
        }
    return out;
}

TensorElement half_shuffle_right(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            if (u.empty() && v.empty())
                throw UnitNotAllowed("half shuffle of two unit terms is undefined");
            if (v.empty()) continue;  // x > 1 = 0
            if (u.empty()) {          // 1 > x = x
                out.add(v, cu * cv);
                continue;
            }
            GradedWord rest(v.begin() + 1, v.end());
            TensorElement tail = shuffle_basis(u, rest);
            for (const auto& [w, cw] : tail.terms()) {
                GradedWord full;
                full.push_back(v.front());
                full.insert(full.end(), w.begin(), w.end());
                out.add(full, cw * cu * cv);
            }
        }
    return out;
}

WordTensor2 unshuffle(const TensorElement& a) {
    WordTensor2 out;
    for (const auto& [w, c] : a.terms()) {
        std::size_t n = w.size();
        for (std::uint64_t s = 0; s < (1ull << n); ++s) {
            GradedWord left, right;
            for (std::size_t i = 0; i < n; ++i)
                ((s >> i) & 1u ? left : right).push_back(w[i]);
            tensor2_add(out, left, right, c);
        }
    }
    return out;
}

WordTensor2 half_unshuffle_left(const TensorElement& a) {
    WordTensor2 out;
    for (const auto& [w, c] : a.terms()) {
        if (w.empty()) throw EmptyWord("half unshuffle needs a nonempty word");
        std::size_t n = w.size();
        // the first letter stays on the left leg
        for (std::uint64_t s = 0; s < (1ull << (n - 1)); ++s) {
            GradedWord left{w[0]}, right;
            for (std::size_t i = 1; i < n; ++i)
                (((s >> (i - 1)) & 1u) ? left : right).push_back(w[i]);
            tensor2_add(out, left, right, c);
        }
    }
    return out;
}

WordTensor2 half_unshuffle_right(const TensorElement& a) {
    WordTensor2 out;
    for (const auto& [w, c] : a.terms()) {
        if (w.empty()) throw EmptyWord("half unshuffle needs a nonempty word");
        std::size_t n = w.size();
        for (std::uint64_t s = 0; s < (1ull << (n - 1)); ++s) {
            GradedWord left, right{w[0]};
            for (std::size_t i = 1; i < n; ++i)
                (((s >> (i - 1)) & 1u) ? right : left).push_back(w[i]);
            tensor2_add(out, left, right, c);
        }
    }
    return out;
}

TensorElement apply_graded_perm(const GradedPermutation& p, const TensorElement& a) {
    TensorElement out;
    int k = p.k();
    for (const auto& [w, c] : a.terms()) {
        if (static_cast<int>(w.size()) != k) continue;
        GradedWord image(k, Letter{});
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            image[i] = w[p.sigma[i]];
            if (image[i].degree != p.degrees[i]) ok = false;
        }
        if (ok) out.add(image, c);
    }
    return out;
}

std::optional<GradedPermutation> compose_graded_perms(const GradedPermutation& p,
                                                      const GradedPermutation& r) {
    if (p.k() != r.k()) return std::nullopt;
    int k = p.k();
    for (int i = 0; i < k; ++i)
        if (p.degrees[i] != r.degrees[p.sigma[i]]) return std::nullopt;
    GradedPermutation out;
    out.sigma.resize(k);
    out.degrees = p.degrees;
    for (int i = 0; i < k; ++i) out.sigma[i] = r.sigma[p.sigma[i]];
    return out;
}

TensorElement apply_endo(const WordEndo& f, const TensorElement& a) {
    TensorElement out;
    for (const auto& [w, c] : a.terms()) out += f(w).scaled(c);
    return out;
}

WordEndo endo_identity() {
    return [](const GradedWord& w) { return TensorElement::basis(w); };
}

WordEndo endo_counit() {
    return [](const GradedWord& w) {
        return w.empty() ? TensorElement::unit() : TensorElement();
    };
}

WordEndo endo_letter_projection() {
    return [](const GradedWord& w) {
        return w.size() == 1 ? TensorElement::basis(w) : TensorElement();
    };
}

namespace {

WordEndo endo_half(const WordEndo& f, const WordEndo& g, bool left) {
    return [f, g, left](const GradedWord& w) {
        if (w.empty()) return TensorElement();
        WordTensor2 split = left ? half_unshuffle_left(TensorElement::basis(w))
                                 : half_unshuffle_right(TensorElement::basis(w));
        TensorElement out;
        for (const auto& [k, c] : split)
            out += concat(f(k.first), g(k.second)).scaled(c);
        return out;
    };
}

}  // namespace

WordEndo endo_half_prec(const WordEndo& f, const WordEndo& g) {
    return endo_half(f, g, true);
}

WordEndo endo_half_succ(const WordEndo& f, const WordEndo& g) {
    return endo_half(f, g, false);
}

WordEndo endo_shuffle_of(const WordEndo& f, const WordEndo& g) {
    WordEndo a = endo_half_prec(f, g);
    WordEndo b = endo_half_succ(f, g);
    // on the empty word the full unshuffle still splits as 1 (x) 1
    return [f, g, a, b](const GradedWord& w) {
        if (w.empty()) return concat(f(w), g(w));
        return a(w) + b(w);
    };
}

}  // namespace fintop
