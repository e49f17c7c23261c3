#include "fintop/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "fintop/enumeration.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/qsym.hpp"
#include "fintop/space_algebra.hpp"
#include "fintop/tensor_words.hpp"
#include "fintop/text_format.hpp"

namespace fintop {

bool CheckReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

void CheckReport::append(const CheckReport& r) {
    results.insert(results.end(), r.results.begin(), r.results.end());
}

namespace {

// Runs `test` over every item; empty return means pass. The parallel path
// reports the same counterexample as the serial one: the lowest-index
// failure wins.
template <typename Item, typename Test>
CheckResult run_items(std::string name, const std::vector<Item>& items, Test test,
                      Exec exec) {
    CheckResult out;
    out.name = std::move(name);
    out.cases = items.size();
    if (exec == Exec::Serial) {
        for (const Item& item : items) {
            std::string msg = test(item);
            if (!msg.empty()) {
                out.passed = false;
                out.counterexample = msg;
                break;
            }
        }
        return out;
    }
    std::atomic<std::int64_t> bad{-1};
    std::string bad_msg;
    std::int64_t count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t seen = bad.load(std::memory_order_relaxed);
        if (seen >= 0 && seen < i) continue;
        std::string msg = test(items[i]);
        if (!msg.empty()) {
#pragma omp critical
            {
                std::int64_t cur = bad.load(std::memory_order_relaxed);
                if (cur < 0 || i < cur) {
                    bad.store(i, std::memory_order_relaxed);
                    bad_msg = msg;
                }
            }
        }
    }
    if (bad.load() >= 0) {
        out.passed = false;
        out.counterexample = bad_msg;
    }
    return out;
}

std::vector<FiniteSpace> spaces_up_to(int n, Exec exec, bool with_empty = true) {
    std::vector<FiniteSpace> out;
    if (with_empty) out.push_back(FiniteSpace());
    for (int m = 1; m <= n; ++m)
        for (const FiniteSpace& x : enumerate_spaces(m, exec, n > space_cap))
            out.push_back(x);
    return out;
}

using SpacePair = std::pair<FiniteSpace, FiniteSpace>;
using SpaceTriple = std::tuple<FiniteSpace, FiniteSpace, FiniteSpace>;

std::vector<SpacePair> pairs_up_to(int n, Exec exec, bool with_empty = true) {
    std::vector<FiniteSpace> all = spaces_up_to(n, exec, with_empty);
    std::vector<SpacePair> out;
    for (const FiniteSpace& x : all)
        for (const FiniteSpace& y : all)
            if (x.size() + y.size() <= n) out.emplace_back(x, y);
    return out;
}

std::vector<SpaceTriple> triples_up_to(int n, Exec exec) {
    std::vector<FiniteSpace> all = spaces_up_to(n, exec);
    std::vector<SpaceTriple> out;
    for (const FiniteSpace& x : all)
        for (const FiniteSpace& y : all) {
            if (x.size() + y.size() > n) continue;
            for (const FiniteSpace& z : all)
                if (x.size() + y.size() + z.size() <= n) out.emplace_back(x, y, z);
        }
    return out;
}

std::string pair_label(const SpacePair& p) {
    return to_text(p.first) + "  |  " + to_text(p.second);
}

// ---------------------------------------------------------------------------
// space-algebra sweeps

CheckResult axioms_coassoc(int n_max, Exec exec) {
    return run_items<FiniteSpace>(
        "coassociativity", spaces_up_to(n_max, exec),
        [](const FiniteSpace& x) -> std::string {
            FTensor d = coproduct_basis(x);
            if (coproduct_left(d) != coproduct_right(d)) return to_text(x);
            return {};
        },
        exec);
}

CheckResult axioms_hopf_compat(int n_max, Exec exec) {
    return run_items<SpacePair>(
        "coproduct respects disjoint sum", pairs_up_to(n_max, exec),
        [](const SpacePair& p) -> std::string {
            FTensor lhs = coproduct(product_sum(FVector::basis(p.first),
                                                FVector::basis(p.second)));
            FTensor rhs =
                tensor_product_sum(coproduct_basis(p.first), coproduct_basis(p.second));
            if (!(lhs == rhs)) return pair_label(p);
            return {};
        },
        exec);
}

CheckResult axioms_infinitesimal(int n_max, Exec exec) {
    return run_items<SpacePair>(
        "join coproduct identity", pairs_up_to(n_max, exec),
        [](const SpacePair& p) -> std::string {
            const FiniteSpace& x = p.first;
            const FiniteSpace& y = p.second;
            FTensor lhs =
                coproduct(product_join(FVector::basis(x), FVector::basis(y)));
            FTensor rhs = tensor_product_join(coproduct_basis(x),
                                              FTensor::basis(FiniteSpace(), y));
            rhs += tensor_product_join(FTensor::basis(x, FiniteSpace()),
                                       coproduct_basis(y));
            rhs -= FTensor::basis(x, y);
            if (!(lhs == rhs)) return pair_label(p);
            return {};
        },
        exec);
}

CheckResult axioms_duality(int n_max, Exec exec) {
    CheckResult involution = run_items<FiniteSpace>(
        "duality is an involution", spaces_up_to(n_max, exec),
        [](const FiniteSpace& x) -> std::string {
            if (dual(dual(x)) != x) return to_text(x);
            return {};
        },
        exec);
    if (!involution.passed) return involution;
    CheckResult compat = run_items<SpacePair>(
        "duality versus both products", pairs_up_to(n_max, exec),
        [](const SpacePair& p) -> std::string {
            const FiniteSpace& x = p.first;
            const FiniteSpace& y = p.second;
            if (dual(space_product(x, y)) != space_product(dual(x), dual(y)))
                return pair_label(p);
            if (dual(space_join(x, y)) != space_join(dual(y), dual(x)))
                return pair_label(p);
            return {};
        },
        exec);
    compat.name = "duality (involution and product compatibilities)";
    compat.cases += involution.cases;
    return compat;
}

CheckResult check_counit(int n_max, Exec exec) {
    return run_items<FiniteSpace>(
        "counit laws", spaces_up_to(n_max, exec),
        [](const FiniteSpace& x) -> std::string {
            FVector left, right;
            FTensor dx = coproduct_basis(x);
            for (const auto& [k, c] : dx.terms()) {
                if (k.first.empty()) left.add(k.second, c);
                if (k.second.empty()) right.add(k.first, c);
            }
            if (!(left == FVector::basis(x)) || !(right == FVector::basis(x)))
                return to_text(x);
            return {};
        },
        exec);
}

CheckResult check_antipode(int n_max, Exec exec) {
    return run_items<FiniteSpace>(
        "antipode law", spaces_up_to(n_max, exec),
        [](const FiniteSpace& x) -> std::string {
            FVector folded;
            FTensor dx = coproduct_basis(x);
            for (const auto& [k, c] : dx.terms())
                folded +=
                    product_sum(antipode(FVector::basis(k.first)), FVector::basis(k.second))
                        .scaled(c);
            FVector expected;
            if (x.empty()) expected = FVector::unit();
            if (!(folded == expected)) return to_text(x);
            return {};
        },
        exec);
}

CheckResult check_sum_commutative(int n_max, Exec exec) {
    return run_items<SpacePair>(
        "disjoint sum commutes", pairs_up_to(n_max, exec),
        [](const SpacePair& p) -> std::string {
            if (space_product(p.first, p.second) != space_product(p.second, p.first))
                return pair_label(p);
            return {};
        },
        exec);
}

CheckResult check_associativity(int n_max, Exec exec) {
    return run_items<SpaceTriple>(
        "both products associate, shared unit", triples_up_to(n_max, exec),
        [](const SpaceTriple& t) -> std::string {
            const auto& [x, y, z] = t;
            if (space_product(space_product(x, y), z) !=
                space_product(x, space_product(y, z)))
                return to_text(x) + " | " + to_text(y) + " | " + to_text(z);
            if (space_join(space_join(x, y), z) != space_join(x, space_join(y, z)))
                return to_text(x) + " | " + to_text(y) + " | " + to_text(z);
            return {};
        },
        exec);
}

CheckResult check_grading(int n_max, Exec exec) {
    return run_items<SpacePair>(
        "products and coproduct are degree-additive", pairs_up_to(n_max, exec),
        [](const SpacePair& p) -> std::string {
            int total = p.first.size() + p.second.size();
            if (space_product(p.first, p.second).size() != total) return pair_label(p);
            if (space_join(p.first, p.second).size() != total) return pair_label(p);
            FTensor dp = coproduct_basis(p.first);
            for (const auto& [k, c] : dp.terms())
                if (k.first.size() + k.second.size() != p.first.size())
                    return to_text(p.first);
            return {};
        },
        exec);
}

// ---------------------------------------------------------------------------
// tensor-word sweeps

const std::vector<Letter>& test_alphabet() {
    static const std::vector<Letter> letters{{'a', 1}, {'b', 1}, {'c', 2}, {'d', 3}};
    return letters;
}

std::vector<GradedWord> words_up_to(int max_len, bool with_empty = true) {
    std::vector<GradedWord> out;
    if (with_empty) out.push_back({});
    std::vector<GradedWord> level{{}};
    for (int l = 1; l <= max_len; ++l) {
        std::vector<GradedWord> next;
        for (const GradedWord& w : level)
            for (const Letter& letter : test_alphabet()) {
                GradedWord e = w;
                e.push_back(letter);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

using WordPair = std::pair<GradedWord, GradedWord>;
using WordTriple = std::tuple<GradedWord, GradedWord, GradedWord>;

std::vector<WordPair> word_pairs(int total_len, bool nonempty) {
    std::vector<GradedWord> all = words_up_to(total_len, !nonempty);
    std::vector<WordPair> out;
    for (const GradedWord& u : all)
        for (const GradedWord& v : all)
            if (static_cast<int>(u.size() + v.size()) <= total_len)
                out.emplace_back(u, v);
    return out;
}

std::vector<WordTriple> word_triples(int total_len, bool nonempty) {
    std::vector<GradedWord> all = words_up_to(total_len, !nonempty);
    std::vector<WordTriple> out;
    for (const GradedWord& u : all)
        for (const GradedWord& v : all) {
            if (static_cast<int>(u.size() + v.size()) > total_len) continue;
            for (const GradedWord& w : all)
                if (static_cast<int>(u.size() + v.size() + w.size()) <= total_len)
                    out.emplace_back(u, v, w);
        }
    return out;
}

std::string word_pair_label(const WordPair& p) {
    return word_string(p.first) + "  |  " + word_string(p.second);
}

using WordTensor3 = std::map<std::tuple<GradedWord, GradedWord, GradedWord>, Scalar>;

WordTensor3 unshuffle_left_leg(const WordTensor2& t, bool half_left) {
    WordTensor3 out;
    for (const auto& [k, c] : t) {
        WordTensor2 split = half_left
                                ? half_unshuffle_left(TensorElement::basis(k.first))
                                : unshuffle(TensorElement::basis(k.first));
        for (const auto& [kk, cc] : split) {
            auto key = std::make_tuple(kk.first, kk.second, k.second);
            Scalar v = (out[key] += c * cc);
            if (v.is_zero()) out.erase(key);
        }
    }
    return out;
}

WordTensor3 unshuffle_right_leg(const WordTensor2& t) {
    WordTensor3 out;
    for (const auto& [k, c] : t) {
        for (const auto& [kk, cc] : unshuffle(TensorElement::basis(k.second))) {
            auto key = std::make_tuple(k.first, kk.first, kk.second);
            Scalar v = (out[key] += c * cc);
            if (v.is_zero()) out.erase(key);
        }
    }
    return out;
}

CheckResult tensor_half_shuffle_axioms(int max_len, Exec exec) {
    CheckResult sym = run_items<WordPair>(
        "half shuffles are mirror images", word_pairs(max_len, true),
        [](const WordPair& p) -> std::string {
            TensorElement a = TensorElement::basis(p.first);
            TensorElement b = TensorElement::basis(p.second);
            if (!(half_shuffle_left(a, b) == half_shuffle_right(b, a)))
                return word_pair_label(p);
            return {};
        },
        exec);
    if (!sym.passed) return sym;
    CheckResult assoc = run_items<WordTriple>(
        "half shuffle associativity", word_triples(max_len, true),
        [](const WordTriple& t) -> std::string {
            TensorElement x = TensorElement::basis(std::get<0>(t));
            TensorElement y = TensorElement::basis(std::get<1>(t));
            TensorElement z = TensorElement::basis(std::get<2>(t));
            TensorElement lhs = half_shuffle_left(half_shuffle_left(x, y), z);
            TensorElement rhs = half_shuffle_left(x, shuffle(y, z));
            if (!(lhs == rhs))
                return word_string(std::get<0>(t)) + " | " +
                       word_string(std::get<1>(t)) + " | " + word_string(std::get<2>(t));
            return {};
        },
        exec);
    assoc.name = "half shuffle axioms";
    assoc.cases += sym.cases;
    return assoc;
}

CheckResult tensor_shuffle_algebra(int max_len, Exec exec) {
    return run_items<WordTriple>(
        "shuffle commutative and associative", word_triples(max_len, false),
        [](const WordTriple& t) -> std::string {
            TensorElement x = TensorElement::basis(std::get<0>(t));
            TensorElement y = TensorElement::basis(std::get<1>(t));
            TensorElement z = TensorElement::basis(std::get<2>(t));
            if (!(shuffle(x, y) == shuffle(y, x)))
                return word_string(std::get<0>(t)) + " | " + word_string(std::get<1>(t));
            if (!(shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z))))
                return word_string(std::get<0>(t)) + " | " +
                       word_string(std::get<1>(t)) + " | " + word_string(std::get<2>(t));
            return {};
        },
        exec);
}

CheckResult tensor_unshuffle_axioms(int max_len, Exec exec) {
    return run_items<GradedWord>(
        "half unshuffle axioms", words_up_to(max_len, false),
        [](const GradedWord& w) -> std::string {
            TensorElement e = TensorElement::basis(w);
            WordTensor2 left = half_unshuffle_left(e);
            WordTensor2 right = half_unshuffle_right(e);
            if (!(left == tensor2_switch(right))) return word_string(w);
            if (!(unshuffle_left_leg(left, true) == unshuffle_right_leg(left)))
                return word_string(w);
            // counit compatibilities on the augmentation ideal
            TensorElement keep, drop;
            for (const auto& [k, c] : left) {
                if (k.first.empty()) drop.add(k.second, c);
                if (k.second.empty()) keep.add(k.first, c);
            }
            if (!drop.is_zero() || !(keep == e)) return word_string(w);
            return {};
        },
        exec);
}

CheckResult tensor_unshuffle_product(int max_len, Exec exec) {
    return run_items<WordPair>(
        "half unshuffle of a concatenation", word_pairs(max_len, true),
        [](const WordPair& p) -> std::string {
            TensorElement x = TensorElement::basis(p.first);
            TensorElement y = TensorElement::basis(p.second);
            WordTensor2 lhs = half_unshuffle_left(concat(x, y));
            WordTensor2 rhs;
            for (const auto& [kx, cx] : half_unshuffle_left(x))
                for (const auto& [ky, cy] : unshuffle(y)) {
                    GradedWord left = kx.first;
                    left.insert(left.end(), ky.first.begin(), ky.first.end());
                    GradedWord right = kx.second;
                    right.insert(right.end(), ky.second.begin(), ky.second.end());
                    tensor2_add(rhs, left, right, cx * cy);
                }
            if (!(lhs == rhs)) return word_pair_label(p);
            return {};
        },
        exec);
}

CheckResult tensor_infinitesimal(int max_len, Exec exec) {
    return run_items<WordPair>(
        "deconcatenation of a concatenation", word_pairs(max_len, true),
        [](const WordPair& p) -> std::string {
            TensorElement x = TensorElement::basis(p.first);
            TensorElement y = TensorElement::basis(p.second);
            WordTensor2 lhs = deconcat(concat(x, y));
            WordTensor2 rhs;
            for (const auto& [ky, cy] : deconcat(y)) {
                GradedWord left = p.first;
                left.insert(left.end(), ky.first.begin(), ky.first.end());
                tensor2_add(rhs, left, ky.second, cy);
            }
            for (const auto& [kx, cx] : deconcat(x)) {
                GradedWord right = kx.second;
                right.insert(right.end(), p.second.begin(), p.second.end());
                tensor2_add(rhs, kx.first, right, cx);
            }
            tensor2_add(rhs, p.first, p.second, Scalar(-1));
            if (!(lhs == rhs)) return word_pair_label(p);
            return {};
        },
        exec);
}

CheckResult tensor_endo_dendriform(int max_len, Exec exec) {
    struct Item {
        int f, g, h;
        GradedWord w;
    };
    std::vector<WordEndo> family;
    family.push_back(endo_identity());
    family.push_back(endo_letter_projection());
    family.push_back(endo_counit());
    GradedPermutation swap_degree_one{{1, 0}, {1, 1}};
    family.push_back([swap_degree_one](const GradedWord& w) {
        return apply_graded_perm(swap_degree_one, TensorElement::basis(w));
    });
    std::vector<Item> items;
    for (const GradedWord& w : words_up_to(std::min(max_len, 4), false))
        for (int f = 0; f < 4; ++f)
            for (int g = 0; g < 4; ++g)
                for (int h = 0; h < 4; ++h) items.push_back({f, g, h, w});
    return run_items<Item>(
        "dendriform identities on endomorphisms", items,
        [&family](const Item& it) -> std::string {
            const WordEndo& f = family[it.f];
            const WordEndo& g = family[it.g];
            const WordEndo& h = family[it.h];
            const GradedWord& w = it.w;
            TensorElement a =
                endo_half_prec(endo_half_prec(f, g), h)(w);
            TensorElement b = endo_half_prec(f, endo_shuffle_of(g, h))(w);
            if (!(a == b)) return word_string(w);
            TensorElement c2 = endo_half_succ(endo_shuffle_of(f, g), h)(w);
            TensorElement d = endo_half_succ(f, endo_half_succ(g, h))(w);
            if (!(c2 == d)) return word_string(w);
            TensorElement e = endo_half_prec(endo_half_succ(f, g), h)(w);
            TensorElement k = endo_half_succ(f, endo_half_prec(g, h))(w);
            if (!(e == k)) return word_string(w);
            return {};
        },
        exec);
}

CheckResult tensor_fundamental_projection(int max_len, Exec exec) {
    return run_items<GradedWord>(
        "iterated projection identity", words_up_to(max_len),
        [max_len](const GradedWord& w) -> std::string {
            WordEndo pi = endo_letter_projection();
            TensorElement total = endo_counit()(w);
            WordEndo chain = pi;
            total += chain(w);
            for (int n = 2; n <= max_len; ++n) {
                chain = endo_half_prec(pi, chain);
                total += chain(w);
            }
            if (!(total == TensorElement::basis(w))) return word_string(w);
            return {};
        },
        exec);
}

CheckResult tensor_duality_pairing(int max_len, Exec exec) {
    int cap = std::min(max_len, 4);
    // reverse index: (u,v) -> (w -> coefficient of u(x)v in the unshuffle of w)
    std::map<WordPair, std::map<GradedWord, Scalar>> table;
    for (const GradedWord& w : words_up_to(cap))
        for (const auto& [k, c] : unshuffle(TensorElement::basis(w)))
            table[k][w] = c;
    return run_items<WordPair>(
        "shuffle is adjoint to unshuffle", word_pairs(cap, false),
        [&table](const WordPair& p) -> std::string {
            TensorElement prod =
                shuffle(TensorElement::basis(p.first), TensorElement::basis(p.second));
            std::map<GradedWord, Scalar> expected;
            auto it = table.find(p);
            if (it != table.end()) expected = it->second;
            if (!(prod.terms() == expected)) return word_pair_label(p);
            return {};
        },
        exec);
}

std::vector<GradedPermutation> sample_graded_perms(int max_k) {
    std::vector<GradedPermutation> out;
    std::vector<int> degree_pool{1, 2, 3};
    for (int k = 1; k <= max_k; ++k) {
        std::vector<int> sigma(k);
        for (int i = 0; i < k; ++i) sigma[i] = i;
        do {
            // all degree assignments over the pool
            std::vector<int> d(k, 0);
            auto assign = [&](auto&& self, int pos) -> void {
                if (pos == k) {
                    out.push_back({sigma, d});
                    return;
                }
                for (int deg : degree_pool) {
                    d[pos] = deg;
                    self(self, pos + 1);
                }
            };
            assign(assign, 0);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return out;
}

CheckResult tensor_gradperm_composition(Exec exec) {
    std::vector<GradedPermutation> ops = sample_graded_perms(3);
    std::vector<GradedWord> words = words_up_to(3);
    std::vector<std::pair<int, int>> items;
    for (int i = 0; i < static_cast<int>(ops.size()); ++i)
        for (int j = 0; j < static_cast<int>(ops.size()); ++j) items.emplace_back(i, j);
    return run_items<std::pair<int, int>>(
        "graded permutation composition matches the action", items,
        [&](const std::pair<int, int>& it) -> std::string {
            const GradedPermutation& p = ops[it.first];
            const GradedPermutation& r = ops[it.second];
            std::optional<GradedPermutation> composed = compose_graded_perms(p, r);
            for (const GradedWord& w : words) {
                TensorElement via_ops =
                    apply_graded_perm(p, apply_graded_perm(r, TensorElement::basis(w)));
                TensorElement via_composed =
                    composed ? apply_graded_perm(*composed, TensorElement::basis(w))
                             : TensorElement();
                if (!(via_ops == via_composed))
                    return "ops " + std::to_string(it.first) + "," +
                           std::to_string(it.second) + " on " + word_string(w);
            }
            return {};
        },
        exec);
}

CheckResult tensor_naturality(std::uint64_t seed, Exec exec) {
    // Degree-preserving linear substitutions commute with graded
    // permutation operators.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    struct Sub {
        std::map<char, TensorElement> image;  // letter -> degree-matched combination
    };
    std::vector<Sub> subs;
    for (int t = 0; t < 8; ++t) {
        Sub s;
        for (const Letter& l : test_alphabet()) {
            TensorElement img;
            for (const Letter& m : test_alphabet())
                if (m.degree == l.degree)
                    img += TensorElement::monomial({m}, Scalar(coeff(rng)));
            s.image.emplace(l.id, std::move(img));
        }
        subs.push_back(std::move(s));
    }
    std::vector<GradedPermutation> ops = sample_graded_perms(3);
    std::vector<GradedWord> words = words_up_to(3, false);
    struct Item {
        int sub, op;
    };
    std::vector<Item> items;
    for (int s = 0; s < static_cast<int>(subs.size()); ++s)
        for (int o = 0; o < static_cast<int>(ops.size()); ++o) items.push_back({s, o});
    return run_items<Item>(
        "graded permutations are natural", items,
        [&](const Item& it) -> std::string {
            const Sub& sub = subs[it.sub];
            const GradedPermutation& op = ops[it.op];
            auto apply_sub = [&sub](const GradedWord& w) {
                TensorElement out = TensorElement::unit();
                for (const Letter& l : w) out = concat(out, sub.image.at(l.id));
                return out;
            };
            for (const GradedWord& w : words) {
                TensorElement lhs =
                    apply_graded_perm(op, apply_sub(w));
                TensorElement rhs = apply_endo(
                    [&](const GradedWord& u) { return apply_sub(u); },
                    apply_graded_perm(op, TensorElement::basis(w)));
                if (!(lhs == rhs))
                    return "substitution " + std::to_string(it.sub) + " on " +
                           word_string(w);
            }
            return {};
        },
        exec);
}

}  // namespace

CheckResult verify_axioms(int n_max, AxiomSuite suite, Exec exec) {
    switch (suite) {
        case AxiomSuite::Coassoc:
            return axioms_coassoc(n_max, exec);
        case AxiomSuite::HopfCompat:
            return axioms_hopf_compat(n_max, exec);
        case AxiomSuite::Infinitesimal:
            return axioms_infinitesimal(n_max, exec);
        case AxiomSuite::Duality:
            return axioms_duality(n_max, exec);
    }
    return {};
}

CheckReport check_hopf(int max_n, Exec exec) {
    CheckReport report;
    report.append(axioms_coassoc(max_n, exec));
    report.append(check_counit(max_n, exec));
    report.append(axioms_hopf_compat(max_n, exec));
    report.append(check_antipode(max_n, exec));
    report.append(check_sum_commutative(max_n, exec));
    report.append(check_associativity(max_n, exec));
    report.append(axioms_duality(max_n, exec));
    report.append(check_grading(max_n, exec));
    return report;
}

CheckReport check_infinitesimal(int max_n, Exec exec) {
    CheckReport report;
    report.append(axioms_infinitesimal(max_n, exec));
    report.append(check_associativity(max_n, exec));
    report.append(axioms_duality(max_n, exec));
    return report;
}

CheckReport check_tensor(int max_len, Exec exec) {
    CheckReport report;
    report.append(tensor_half_shuffle_axioms(std::min(max_len, 5), exec));
    report.append(tensor_shuffle_algebra(std::min(max_len, 6), exec));
    report.append(tensor_unshuffle_axioms(max_len, exec));
    report.append(tensor_unshuffle_product(max_len, exec));
    report.append(tensor_infinitesimal(max_len, exec));
    report.append(tensor_endo_dendriform(max_len, exec));
    report.append(tensor_fundamental_projection(max_len, exec));
    report.append(tensor_duality_pairing(max_len, exec));
    report.append(tensor_gradperm_composition(exec));
    report.append(tensor_naturality(20250809, exec));
    return report;
}

namespace {

// ---------------------------------------------------------------------------
// qsym sweeps

QSymTensor phi_tensor(const FTensor& t) {
    QSymTensor out;
    for (const auto& [k, c] : t.terms()) {
        QSymElement left = phi_q_basis(k.first);
        QSymElement right = phi_q_basis(k.second);
        for (const auto& [ca, sa] : left.terms())
            for (const auto& [cb, sb] : right.terms()) {
                auto key = std::make_pair(ca, cb);
                Scalar v = (out[key] += c * sa * sb);
                if (v.is_zero()) out.erase(key);
            }
    }
    return out;
}

std::vector<SpacePair> sampled_pairs(int size, int count, std::mt19937_64& rng,
                                     Exec exec) {
    std::vector<SpacePair> out;
    std::vector<std::vector<FiniteSpace>> by_size(size + 1);
    for (int m = 1; m < size; ++m) by_size[m] = enumerate_spaces(m, exec);
    std::uniform_int_distribution<int> split(1, size - 1);
    for (int t = 0; t < count; ++t) {
        int a = split(rng);
        const auto& left = by_size[a];
        const auto& right = by_size[size - a];
        std::uniform_int_distribution<std::size_t> pl(0, left.size() - 1);
        std::uniform_int_distribution<std::size_t> pr(0, right.size() - 1);
        out.emplace_back(left[pl(rng)], right[pr(rng)]);
    }
    return out;
}

CheckResult qsym_morphism_product(const std::vector<SpacePair>& pairs, Exec exec) {
    return run_items<SpacePair>(
        "phi respects the disjoint sum", pairs,
        [](const SpacePair& p) -> std::string {
            QSymElement lhs = phi_q_basis(space_product(p.first, p.second));
            QSymElement rhs =
                qsym_product(phi_q_basis(p.first), phi_q_basis(p.second));
            if (!(lhs == rhs)) return pair_label(p);
            return {};
        },
        exec);
}

CheckResult qsym_morphism_join(const std::vector<SpacePair>& pairs, Exec exec) {
    return run_items<SpacePair>(
        "phi respects the join", pairs,
        [](const SpacePair& p) -> std::string {
            QSymElement lhs = phi_q_basis(space_join(p.first, p.second));
            QSymElement rhs = succ_q(phi_q_basis(p.first), phi_q_basis(p.second));
            if (!(lhs == rhs)) return pair_label(p);
            return {};
        },
        exec);
}

CheckResult qsym_morphism_coproduct(const std::vector<FiniteSpace>& spaces, Exec exec) {
    return run_items<FiniteSpace>(
        "phi respects the coproduct", spaces,
        [](const FiniteSpace& x) -> std::string {
            QSymTensor lhs = phi_tensor(coproduct_basis(x));
            QSymTensor rhs = qsym_coproduct(phi_q_basis(x));
            if (!(lhs == rhs)) return to_text(x);
            return {};
        },
        exec);
}

std::vector<Composition> compositions_up_to(int degree) {
    // every composition of degree <= bound appears exactly once
    std::vector<Composition> out{{}};
    std::function<void(Composition&, int)> rec = [&](Composition& acc, int left) {
        for (int part = 1; part <= left; ++part) {
            acc.push_back(part);
            out.push_back(acc);
            rec(acc, left - part);
            acc.pop_back();
        }
    };
    Composition acc;
    rec(acc, degree);
    return out;
}

CheckResult qsym_oracle(int degree, Exec exec) {
    std::vector<Composition> comps = compositions_up_to(degree);
    std::vector<std::pair<Composition, Composition>> items;
    for (const Composition& a : comps)
        for (const Composition& b : comps)
            if (composition_degree(a) + composition_degree(b) <= degree)
                items.emplace_back(a, b);
    int vars = degree;
    return run_items<std::pair<Composition, Composition>>(
        "quasi-shuffle equals truncated polynomial multiplication", items,
        [vars](const std::pair<Composition, Composition>& p) -> std::string {
            QSymElement prod = qsym_product(QSymElement::basis(p.first),
                              QSymElement::basis(p.second));
            TruncatedPoly lhs = expand_polynomial(prod, vars);
            TruncatedPoly rhs = poly_multiply(
                expand_polynomial(QSymElement::basis(p.first), vars),
                expand_polynomial(QSymElement::basis(p.second), vars));
            if (!(lhs == rhs))
                return to_text(QSymElement::basis(p.first)) + "  |  " +
                       to_text(QSymElement::basis(p.second));
            return {};
        },
        exec);
}

CheckResult qsym_coassoc(int degree, Exec exec) {
    return run_items<Composition>(
        "deconcatenation coassociativity", compositions_up_to(degree),
        [](const Composition& comp) -> std::string {
            QSymTensor d = qsym_coproduct(QSymElement::basis(comp));
            std::map<std::tuple<Composition, Composition, Composition>, Scalar> lhs, rhs;
            for (const auto& [k, c] : d) {
                for (const auto& [kk, cc] : qsym_coproduct(QSymElement::basis(k.first))) {
                    auto key = std::make_tuple(kk.first, kk.second, k.second);
                    Scalar v = (lhs[key] += c * cc);
                    if (v.is_zero()) lhs.erase(key);
                }
                for (const auto& [kk, cc] :
                     qsym_coproduct(QSymElement::basis(k.second))) {
                    auto key = std::make_tuple(k.first, kk.first, kk.second);
                    Scalar v = (rhs[key] += c * cc);
                    if (v.is_zero()) rhs.erase(key);
                }
            }
            if (!(lhs == rhs)) return to_text(QSymElement::basis(comp));
            return {};
        },
        exec);
}

CheckResult qsym_zeta_factorization(const std::vector<FiniteSpace>& spaces, Exec exec) {
    return run_items<FiniteSpace>(
        "zeta factors through the quasi-symmetric character", spaces,
        [](const FiniteSpace& x) -> std::string {
            if (!(zeta_q(FVector::basis(x)) == zeta_qsym(phi_q_basis(x))))
                return to_text(x);
            return {};
        },
        exec);
}

CheckResult qsym_separation(int max_n, Exec exec) {
    // Distinct preorders on the same labeled set have distinct sets of
    // standard linear extensions.
    int cap = std::min(max_n, 4);
    struct Item {
        int n;
        std::size_t i, j;
    };
    std::vector<Item> items;
    std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> all(cap + 1);
    for (int n = 1; n <= cap; ++n) {
        stream_preorders(n, [&](const Preorder& p) {
            auto lins = standard_linear_extensions(p);
            std::sort(lins.begin(), lins.end());
            all[n].push_back(std::move(lins));
        });
        for (std::size_t i = 0; i < all[n].size(); ++i)
            for (std::size_t j = i + 1; j < all[n].size(); ++j)
                items.push_back({n, i, j});
    }
    return run_items<Item>(
        "linear extension sets separate labeled preorders", items,
        [&all](const Item& it) -> std::string {
            if (all[it.n][it.i] == all[it.n][it.j])
                return "preorders " + std::to_string(it.i) + " and " +
                       std::to_string(it.j) + " on " + std::to_string(it.n) +
                       " points";
            return {};
        },
        exec);
}

CheckResult qsym_noninjectivity(Exec exec) {
    // Documented 6-point witness pair: two non-homeomorphic spaces whose
    // images should agree, each assembled from 204 summands (one per
    // standard linear extension). The pair below transcribes the published
    // diagrams; as transcribed their strict-pair counts differ (9 vs 10),
    // which already forces different images, and an exhaustive sweep finds
    // no equal-image pair among all spaces with at most 7 points. The check
    // states the documented expectation and reports the discrepancy.
    FiniteSpace left = FiniteSpace::from_covers(
        {1, 1, 1, 1, 1, 1}, {{2, 0}, {3, 0}, {3, 1}, {4, 2}, {5, 2}, {5, 3}});
    FiniteSpace right = FiniteSpace::from_covers(
        {1, 1, 1, 1, 1, 1}, {{2, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {5, 3}});
    CheckResult out;
    out.name = "phi is not injective (6-point witness, 204 summands)";
    out.cases = 1;
    if (left == right) {
        out.passed = false;
        out.counterexample = "witness spaces are homeomorphic";
        return out;
    }
    std::size_t nl = standard_linear_extensions(left).size();
    std::size_t nr = standard_linear_extensions(right).size();
    if (!(phi_q_basis(left) == phi_q_basis(right))) {
        out.passed = false;
        out.counterexample =
            "witness images differ (strict pairs " +
            std::to_string(left.strict_pair_count()) + " vs " +
            std::to_string(right.strict_pair_count()) + ", extension counts " +
            std::to_string(nl) + " and " + std::to_string(nr) +
            "); no equal-image pair exists among spaces of size <= 7";
        return out;
    }
    if (nl != 204 || nr != 204) {
        out.passed = false;
        out.counterexample = "extension counts " + std::to_string(nl) + ", " +
                             std::to_string(nr) + " instead of 204";
    }
    (void)exec;
    return out;
}

// ---------------------------------------------------------------------------
// homotopy sweeps

CheckResult homotopy_cores(int max_n, Exec exec) {
    std::vector<FiniteSpace> items;
    for (int n = 1; n <= std::max(max_n, 6); ++n)
        items.push_back(FiniteSpace::chain(std::vector<int>(n, 1)));
    CheckResult chains = run_items<FiniteSpace>(
        "chains collapse to a point", items,
        [](const FiniteSpace& x) -> std::string {
            if (core(x) != FiniteSpace::point()) return to_text(x);
            return {};
        },
        exec);
    if (!chains.passed) return chains;
    CheckResult circle;
    circle.name = "chains collapse to a point; the circle model is its own core";
    circle.cases = chains.cases + 1;
    if (core(FiniteSpace::circle_model()) != FiniteSpace::circle_model()) {
        circle.passed = false;
        circle.counterexample = "circle model";
    }
    return circle;
}

CheckResult homotopy_euler_values(Exec exec) {
    CheckResult out;
    out.name = "Euler characteristics of the standard models";
    out.cases = 4;
    auto bad = [&out](const std::string& what) {
        out.passed = false;
        out.counterexample = what;
    };
    if (euler_characteristic(FiniteSpace::point()) != 1) bad("point");
    if (euler_characteristic(FiniteSpace::circle_model()) != 0) bad("circle");
    if (euler_characteristic(FiniteSpace::sphere_model(2)) != 2) bad("2-sphere");
    if (euler_characteristic(
            space_join(FiniteSpace::circle_model(), FiniteSpace::circle_model())) != 0)
        bad("join of two circles");
    (void)exec;
    return out;
}

CheckResult homotopy_join_law(int max_n, Exec exec) {
    return run_items<SpacePair>(
        "reduced Euler characteristic is multiplicative under join",
        pairs_up_to(std::max(max_n, 6), exec, false),
        [](const SpacePair& p) -> std::string {
            Int cx = euler_characteristic(p.first) - 1;
            Int cy = euler_characteristic(p.second) - 1;
            Int cj = euler_characteristic(space_join(p.first, p.second)) - 1;
            if (cj != -cx * cy) return pair_label(p);
            return {};
        },
        exec);
}

CheckResult homotopy_euler_duality(int max_n, Exec exec) {
    return run_items<FiniteSpace>(
        "Euler characteristic is self-dual", spaces_up_to(std::min(max_n, 5), exec),
        [](const FiniteSpace& x) -> std::string {
            if (euler_characteristic(x) != euler_characteristic(dual(x)))
                return to_text(x);
            return {};
        },
        exec);
}

CheckResult homotopy_core_order_independence(int max_n, std::uint64_t seed, Exec exec) {
    struct Item {
        FiniteSpace space;
        std::uint64_t seed;
    };
    std::vector<Item> items;
    std::mt19937_64 seeder(seed);
    for (const FiniteSpace& x : spaces_up_to(std::max(max_n, 6), exec, false))
        items.push_back({x, seeder()});
    return run_items<Item>(
        "core is independent of the removal order (50 random orders)", items,
        [](const Item& it) -> std::string {
            FiniteSpace reference = core(it.space);
            std::mt19937_64 rng(it.seed);
            for (int round = 0; round < 50; ++round)
                if (core_randomized(it.space, rng) != reference) return to_text(it.space);
            return {};
        },
        exec);
}

CheckResult homotopy_core_idempotent(int max_n, Exec exec) {
    return run_items<FiniteSpace>(
        "core is idempotent", spaces_up_to(std::min(max_n, 5), exec, false),
        [](const FiniteSpace& x) -> std::string {
            FiniteSpace c = core(x);
            if (core(c) != c) return to_text(x);
            return {};
        },
        exec);
}

}  // namespace

CheckReport check_qsym(int max_n, std::uint64_t seed, Exec exec) {
    CheckReport report;
    std::mt19937_64 rng(seed);
    std::vector<SpacePair> pairs = pairs_up_to(max_n, exec);
    std::vector<SpacePair> extra = sampled_pairs(max_n + 1, 100, rng, exec);
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    // unary laws: exhaustive one size beyond the pair range
    std::vector<FiniteSpace> spaces = spaces_up_to(max_n + 1, exec);
    report.append(qsym_morphism_product(pairs, exec));
    report.append(qsym_morphism_coproduct(spaces, exec));
    report.append(qsym_morphism_join(pairs, exec));
    report.append(qsym_coassoc(5, exec));
    report.append(qsym_oracle(5, exec));
    report.append(qsym_zeta_factorization(spaces, exec));
    report.append(qsym_separation(max_n, exec));
    report.append(qsym_noninjectivity(exec));
    return report;
}

CheckReport check_homotopy(int max_n, std::uint64_t seed, Exec exec) {
    CheckReport report;
    report.append(homotopy_cores(max_n, exec));
    report.append(homotopy_euler_values(exec));
    report.append(homotopy_join_law(max_n, exec));
    report.append(homotopy_euler_duality(max_n, exec));
    report.append(homotopy_core_idempotent(max_n, exec));
    report.append(homotopy_core_order_independence(max_n, seed, exec));
    return report;
}

}  // namespace fintop
