#include "fintop/text_format.hpp"

#include <cctype>
#include <sstream>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

// Single-line cursor with 1-based error positions.
struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, 1, pos + 1);
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void skip_spaces() {
        while (!done() && text[pos] == ' ') ++pos;
    }

    bool try_literal(const std::string& lit) {
        if (text.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }

    void literal(const std::string& lit) {
        if (!try_literal(lit)) fail("expected \"" + lit + "\"");
    }

    Int integer() {
        std::size_t start = pos;
        if (!done() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stoll(text.substr(start, pos - start));
    }

    void expect_end() {
        skip_spaces();
        if (!done()) fail("trailing input");
    }
};

std::string scalar_text(const Scalar& s) { return s.to_string(); }

Scalar parse_scalar_at(Cursor& c) {
    // sum of signed terms: [sign] coeff ['*' q ['^' exp]] | [sign] q ['^' exp]
    Scalar out;
    bool first = true;
    for (;;) {
        c.skip_spaces();
        int sign = 1;
        if (c.try_literal("-")) {
            sign = -1;
        } else if (!c.try_literal("+") && !first) {
            break;
        }
        c.skip_spaces();
        Int coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = c.integer();
            saw_coeff = true;
        }
        int exp = 0;
        if ((saw_coeff && c.try_literal("*q")) || (!saw_coeff && c.try_literal("q"))) {
            exp = 1;
            if (c.try_literal("^")) exp = static_cast<int>(c.integer());
        } else if (!saw_coeff) {
            c.fail("expected a coefficient or q");
        }
        out += Scalar::monomial(sign * coeff, exp);
        first = false;
        c.skip_spaces();
        if (c.peek() != '+' && c.peek() != '-') break;
    }
    return out;
}

FiniteSpace parse_space_at(Cursor& c) {
    c.literal("FS k=");
    Int k = c.integer();
    if (k < 0 || k > 64) c.fail("class count outside [0,64]");
    c.literal(" w=");
    std::vector<int> weights;
    for (Int i = 0; i < k; ++i) {
        if (i) c.literal(",");
        weights.push_back(static_cast<int>(c.integer()));
    }
    c.literal(" cov=");
    std::vector<std::pair<int, int>> covers;
    bool first = true;
    while (c.peek() == '(' || (!first && c.peek() == ';')) {
        if (!first) c.literal(";");
        c.literal("(");
        Int lo = c.integer();
        c.literal(",");
        Int hi = c.integer();
        c.literal(")");
        if (lo < 1 || lo > k || hi < 1 || hi > k) c.fail("cover index outside 1..k");
        covers.emplace_back(static_cast<int>(lo - 1), static_cast<int>(hi - 1));
        first = false;
    }
    try {
        return FiniteSpace::from_covers(std::move(weights), covers);
    } catch (const Error& e) {
        c.fail(e.what());
    }
}

Preorder parse_preorder_at(Cursor& c) {
    c.literal("PRE n=");
    Int n = c.integer();
    if (n < 0 || n > 64) c.fail("ground set size outside [0,64]");
    c.literal(" rel=");
    std::vector<std::uint64_t> rows(n, 0);
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j) {
            char ch = c.peek();
            if (ch != '0' && ch != '1') c.fail("expected 0/1 relation digit");
            ++c.pos;
            if (ch == '1') rows[i] |= 1ull << j;
        }
    try {
        return Preorder::from_rows(static_cast<int>(n), std::move(rows));
    } catch (const Error& e) {
        c.fail(e.what());
    }
}

}  // namespace

std::string to_text(const Preorder& p) {
    std::ostringstream os;
    os << "PRE n=" << p.size() << " rel=";
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) os << (p.leq(i, j) ? '1' : '0');
    return os.str();
}

std::string to_text(const FiniteSpace& x) {
    std::ostringstream os;
    os << "FS k=" << x.klass_count() << " w=";
    for (int i = 0; i < x.klass_count(); ++i) {
        if (i) os << ',';
        os << x.weight(i);
    }
    os << " cov=";
    bool first = true;
    for (auto [lo, hi] : x.covers()) {
        if (!first) os << ';';
        os << '(' << lo + 1 << ',' << hi + 1 << ')';
        first = false;
    }
    return os.str();
}

std::string to_text(const Scalar& s) { return scalar_text(s); }

std::string to_text(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

std::string to_text(const FVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : v.terms()) {
        if (!first) os << " + ";
        os << '(' << scalar_text(c) << ") * " << to_text(x);
        first = false;
    }
    return os.str();
}

std::string to_text(const FTensor& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        if (!first) os << " + ";
        os << '(' << scalar_text(c) << ") * " << to_text(key.first) << " (x) "
           << to_text(key.second);
        first = false;
    }
    return os.str();
}

std::string to_text(const QSymElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [comp, c] : e.terms()) {
        if (!first) os << " + ";
        os << '(' << scalar_text(c) << ")*M[";
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) os << ',';
            os << comp[i];
        }
        os << ']';
        first = false;
    }
    return os.str();
}

std::string to_text_eval(const QSymElement& e, const Rational& q) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [comp, c] : e.terms()) {
        Rational v = c.eval(q);
        if (v == Rational(0)) continue;
        if (!first) os << " + ";
        os << '(' << to_text(v) << ")*M[";
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) os << ',';
            os << comp[i];
        }
        os << ']';
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::string to_text(const SimplicialComplex& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& facet : c.facets) {
        if (!first) os << '\n';
        for (std::size_t i = 0; i < facet.size(); ++i) {
            if (i) os << ' ';
            os << facet[i] + 1;
        }
        first = false;
    }
    return os.str();
}

Preorder parse_preorder(const std::string& text) {
    Cursor c{text};
    Preorder p = parse_preorder_at(c);
    c.expect_end();
    return p;
}

FiniteSpace parse_space(const std::string& text) {
    Cursor c{text};
    FiniteSpace x = parse_space_at(c);
    c.expect_end();
    return x;
}

FiniteSpace parse_space_or_preorder(const std::string& text) {
    Cursor probe{text};
    probe.skip_spaces();
    if (probe.try_literal("PRE")) return canonicalize(parse_preorder(text));
    return parse_space(text);
}

Scalar parse_scalar(const std::string& text) {
    Cursor c{text};
    Scalar s = parse_scalar_at(c);
    c.expect_end();
    return s;
}

FVector parse_fvector(const std::string& text) {
    Cursor c{text};
    c.skip_spaces();
    FVector out;
    if (c.try_literal("0")) {
        c.expect_end();
        return out;
    }
    for (;;) {
        c.skip_spaces();
        c.literal("(");
        Scalar coeff = parse_scalar_at(c);
        c.literal(")");
        c.skip_spaces();
        c.literal("*");
        c.skip_spaces();
        out.add(parse_space_at(c), coeff);
        c.skip_spaces();
        if (!c.try_literal("+")) break;
    }
    c.expect_end();
    return out;
}

QSymElement parse_qsym(const std::string& text) {
    Cursor c{text};
    c.skip_spaces();
    QSymElement out;
    if (c.try_literal("0")) {
        c.expect_end();
        return out;
    }
    for (;;) {
        c.skip_spaces();
        c.literal("(");
        Scalar coeff = parse_scalar_at(c);
        c.literal(")*M[");
        Composition comp;
        if (c.peek() != ']') {
            for (;;) {
                Int part = c.integer();
                if (part < 1) c.fail("composition parts must be positive");
                comp.push_back(static_cast<int>(part));
                if (!c.try_literal(",")) break;
            }
        }
        c.literal("]");
        out.add(comp, coeff);
        c.skip_spaces();
        if (!c.try_literal("+")) break;
    }
    c.expect_end();
    return out;
}

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    c.skip_spaces();
    Int num = c.integer();
    Int den = 1;
    if (c.try_literal("/")) den = c.integer();
    c.expect_end();
    if (den == 0) c.fail("zero denominator");
    return Rational(num, den);
}

}  // namespace fintop
