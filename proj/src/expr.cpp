#include "invkit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace invkit {

Word Word::of(std::initializer_list<int> ks) {
    Word w;
    w.letters.reserve(ks.size());
    for (int k : ks)
        w.letters.push_back({k, false});
    return w;
}

int Word::max_letter() const {
    int m = 0;
    for (const auto& l : letters)
        m = std::max(m, l.k);
    return m;
}

std::vector<int> Word::content(int d) const {
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    for (const auto& l : letters) {
        if (l.k < 1 || l.k > d)
            throw DomainError("word letter " + std::to_string(l.k) + " outside 1.." +
                              std::to_string(d));
        ++c[static_cast<std::size_t>(l.k - 1)];
    }
    return c;
}

bool Word::has_transpose() const {
    for (const auto& l : letters)
        if (l.transpose)
            return true;
    return false;
}

InvariantExpr InvariantExpr::sigma(int t, Word w) {
    if (t < 1)
        throw DomainError("sigma index must be at least 1");
    return InvariantExpr(t, std::move(w));
}

int InvariantExpr::resolve_t(int n) const {
    int t = is_det() ? n : t_;
    if (t < 1 || t > n)
        throw DomainError("sigma index " + std::to_string(t) + " out of range for n = " +
                          std::to_string(n));
    return t;
}

InvariantExpr InvariantExpr::parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(what + " at position " + std::to_string(pos) + " in '" + text + "'",
                          pos);
    };

    skip_ws();
    int t;
    if (text.compare(pos, 2, "tr") == 0) {
        t = 1;
        pos += 2;
    } else if (text.compare(pos, 3, "det") == 0) {
        t = kDet;
        pos += 3;
    } else if (text.compare(pos, 6, "sigma_") == 0) {
        pos += 6;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw fail("expected sigma index");
        t = std::stoi(text.substr(start, pos - start));
        if (t < 1)
            throw fail("sigma index must be positive");
    } else {
        throw fail("expected 'tr', 'det' or 'sigma_<t>'");
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
        throw fail("expected '('");
    ++pos;
    Word w;
    while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw fail("expected generator index");
        WordLetter l;
        l.k = std::stoi(text.substr(start, pos - start));
        if (l.k < 1)
            throw fail("generator index must be positive");
        if (pos < text.size() && text[pos] == '\'') {
            l.transpose = true;
            ++pos;
        }
        w.letters.push_back(l);
    }
    skip_ws();
    if (pos != text.size())
        throw fail("trailing characters");
    if (w.letters.empty())
        throw ParseError("empty word in '" + text + "'");
    return InvariantExpr(t, std::move(w));
}

std::string InvariantExpr::str() const {
    std::ostringstream os;
    if (t_ == 1)
        os << "tr";
    else if (is_det())
        os << "det";
    else
        os << "sigma_" << t_;
    os << "(";
    bool first = true;
    for (const auto& l : word_.letters) {
        if (!first)
            os << " ";
        os << l.k;
        if (l.transpose)
            os << "'";
        first = false;
    }
    os << ")";
    return os.str();
}

Scalar evaluate(const InvariantExpr& expr, const std::vector<ConcreteMatrix>& tuple) {
    if (tuple.empty())
        throw DomainError("empty tuple");
    const ConcreteMatrix& first = tuple.front();
    for (const auto& m : tuple) {
        if (m.n() != first.n())
            throw DomainError("tuple matrices have inconsistent sizes");
        if (m.field() != first.field())
            throw FieldMismatchError("tuple matrices have inconsistent fields");
    }
    ConcreteMatrix prod = word_value(expr.word().letters, tuple);
    return prod.sigma(expr.resolve_t(first.n()));
}

namespace {

// direct closed-walk expansion of tr(w): sum over index cycles of the product
// of the designated generic entries; one monomial with sign per cycle
Polynomial trace_walk_expansion(const Word& w, MatrixKind kind, int n,
                                const FieldDescriptor& field) {
    const int len = w.length();
    std::vector<int> idx(static_cast<std::size_t>(len), 1);
    std::unordered_map<MonoId, std::int64_t> acc;
    std::vector<std::pair<VarId, std::uint32_t>> factors;
    while (true) {
        factors.clear();
        int sign = 1;
        bool dead = false;
        for (int pos = 0; pos < len && !dead; ++pos) {
            const WordLetter& l = w.letters[static_cast<std::size_t>(pos)];
            int row = idx[static_cast<std::size_t>(pos)];
            int col = idx[static_cast<std::size_t>((pos + 1) % len)];
            if (l.transpose)
                std::swap(row, col);
            switch (kind) {
            case MatrixKind::General:
                factors.emplace_back(make_var(row, col, l.k), 1);
                break;
            case MatrixKind::Symmetric:
                factors.emplace_back(
                    make_var(std::max(row, col), std::min(row, col), l.k), 1);
                break;
            case MatrixKind::SkewSymmetric:
                if (row == col)
                    dead = true;
                else if (row > col)
                    factors.emplace_back(make_var(row, col, l.k), 1);
                else {
                    factors.emplace_back(make_var(col, row, l.k), 1);
                    sign = -sign;
                }
                break;
            }
        }
        if (!dead)
            acc[MonoTable::instance().intern(factors)] += sign;
        int pos = len - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < len; ++q)
            idx[static_cast<std::size_t>(q)] = 1;
    }
    std::vector<Polynomial::Term> terms;
    terms.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c != 0)
            terms.emplace_back(m, sv::from_int(field, c));
    return Polynomial::from_terms(field, std::move(terms));
}

} // namespace

Polynomial expand(const InvariantExpr& expr, MatrixKind kind, int n, int d,
                  const FieldDescriptor& field) {
    if (expr.word().max_letter() > d)
        throw DomainError("expression uses generator index above d = " + std::to_string(d));
    Polynomial result = Polynomial::zero(field);
    if (expr.resolve_t(n) == 1) {
        result = trace_walk_expansion(expr.word(), kind, n, field);
    } else {
        std::vector<GenericMatrix> tuple;
        tuple.reserve(static_cast<std::size_t>(d));
        for (int k = 1; k <= d; ++k)
            tuple.push_back(GenericMatrix::generic(kind, n, k, field));
        GenericMatrix prod = word_value(expr.word().letters, tuple);
        result = prod.sigma(expr.resolve_t(n));
    }

    MultiDegree expected = expr_multidegree(expr, n, d);
    for (const auto& [m, c] : result.terms()) {
        if (!(MonoTable::instance().multidegree(m, d) == expected))
            throw Error("expansion of " + expr.str() + " is not multihomogeneous of " +
                        expected.str());
    }
    return result;
}

MultiDegree expr_multidegree(const InvariantExpr& expr, int n, int d) {
    int t = expr.resolve_t(n);
    std::vector<int> c = expr.word().content(d);
    MultiDegree md;
    md.t.reserve(c.size());
    for (int x : c)
        md.t.push_back(t * x);
    return md;
}

int expr_degree(const InvariantExpr& expr, int n) {
    return expr.resolve_t(n) * expr.word().length();
}

Word canonical_cyclic_reversal(const Word& w) {
    if (w.has_transpose())
        throw DomainError("canonical form is only defined for transpose-free words");
    auto key = [](const Word& x) {
        std::vector<int> v;
        v.reserve(x.letters.size());
        for (const auto& l : x.letters)
            v.push_back(l.k);
        return v;
    };
    Word best = w;
    std::vector<int> best_key = key(w);
    Word fwd = w;
    Word rev = w;
    std::reverse(rev.letters.begin(), rev.letters.end());
    for (Word* base : {&fwd, &rev}) {
        Word rot = *base;
        for (int s = 0; s < rot.length(); ++s) {
            std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
            std::vector<int> k = key(rot);
            if (k < best_key) {
                best_key = std::move(k);
                best = rot;
            }
        }
    }
    return best;
}

} // namespace invkit
