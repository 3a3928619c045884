#include "invkit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace invkit {

namespace {

MonoTable& table() { return MonoTable::instance(); }

void sort_terms(std::vector<Polynomial::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return table().less(a.first, b.first);
    });
}

void require_same_field(const Polynomial& f, const Polynomial& g) {
    if (f.field() != g.field())
        throw FieldMismatchError("polynomial fields differ: " + f.field().name() + " vs " +
                                 g.field().name());
}

} // namespace

Polynomial Polynomial::constant(const FieldDescriptor& f, std::int64_t c) {
    return from_terms(f, {{table().one(), sv::from_int(f, c)}});
}

Polynomial Polynomial::constant(const Scalar& c) {
    return from_terms(c.field(), {{table().one(), c.value()}});
}

Polynomial Polynomial::variable(const FieldDescriptor& f, VarId v) {
    return from_terms(f, {{table().var(v), sv::from_int(f, 1)}});
}

Polynomial Polynomial::from_terms(const FieldDescriptor& f, std::vector<Term> terms) {
    std::unordered_map<MonoId, ScalarValue> acc;
    acc.reserve(terms.size());
    for (auto& [m, c] : terms) {
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(m, std::move(c));
        else
            it->second = sv::add(f, it->second, c);
    }
    Polynomial r(f);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!sv::is_zero(f, c))
            r.terms_.emplace_back(m, std::move(c));
    sort_terms(r.terms_);
    return r;
}

Polynomial Polynomial::linear_combination(
    const FieldDescriptor& f, const std::vector<std::pair<Scalar, const Polynomial*>>& parts) {
    std::unordered_map<MonoId, ScalarValue> acc;
    for (const auto& [c, poly] : parts) {
        if (c.field() != f || poly->field() != f)
            throw FieldMismatchError("linear combination field mismatch");
        if (c.is_zero())
            continue;
        for (const auto& [m, x] : poly->terms_) {
            ScalarValue contrib = sv::mul(f, x, c.value());
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, std::move(contrib));
            else
                it->second = sv::add(f, it->second, contrib);
        }
    }
    Polynomial r(f);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!sv::is_zero(f, c))
            r.terms_.emplace_back(m, std::move(c));
    sort_terms(r.terms_);
    return r;
}

Scalar Polynomial::coeff(MonoId m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m)
            return {field_, c};
    return Scalar::zero(field_);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<int>(table().degree(m)));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_field(*this, o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    merged.insert(merged.end(), terms_.begin(), terms_.end());
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(field_, std::move(merged));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
        r.terms_.emplace_back(m, sv::neg(field_, c));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_field(*this, o);
    std::unordered_map<MonoId, ScalarValue> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 1);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            MonoId m = table().mul(ma, mb);
            ScalarValue c = sv::mul(field_, ca, cb);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, std::move(c));
            else
                it->second = sv::add(field_, it->second, c);
        }
    }
    Polynomial r(field_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!sv::is_zero(field_, c))
            r.terms_.emplace_back(m, std::move(c));
    sort_terms(r.terms_);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.field() != field_)
        throw FieldMismatchError("scale coefficient field differs");
    Polynomial r(field_);
    if (c.is_zero())
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, cc] : terms_) {
        ScalarValue v = sv::mul(field_, cc, c.value());
        if (!sv::is_zero(field_, v))
            r.terms_.emplace_back(m, std::move(v));
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (field_ != o.field_ || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first ||
            !sv::equal(field_, terms_[i].second, o.terms_[i].second))
            return false;
    return true;
}

Polynomial Polynomial::graded_component(const MultiDegree& t) const {
    int d = static_cast<int>(t.t.size());
    Polynomial r(field_);
    for (const auto& [m, c] : terms_)
        if (table().multidegree(m, d) == t)
            r.terms_.emplace_back(m, c);
    return r;
}

std::vector<MultiDegree> Polynomial::occurring_multidegrees(int d) const {
    std::map<MultiDegree, bool> seen;
    for (const auto& [m, c] : terms_)
        seen[table().multidegree(m, d)] = true;
    std::vector<MultiDegree> r;
    r.reserve(seen.size());
    for (auto& [t, _] : seen)
        r.push_back(t);
    return r;
}

std::optional<MultiDegree> Polynomial::homogeneous_multidegree(int d) const {
    auto all = occurring_multidegrees(d);
    if (all.size() == 1)
        return all.front();
    return std::nullopt;
}

Polynomial Polynomial::psi_image() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial mono = table().get(m);
        std::vector<std::pair<VarId, std::uint32_t>> mapped;
        mapped.reserve(mono.factors.size());
        for (auto [v, e] : mono.factors) {
            int i = var_i(v), j = var_j(v), k = var_k(v);
            mapped.emplace_back(i < j ? make_var(j, i, k) : v, e);
        }
        out.emplace_back(table().intern(std::move(mapped)), c);
    }
    return from_terms(field_, std::move(out));
}

Scalar Polynomial::evaluate(const std::function<Scalar(VarId)>& at) const {
    ScalarValue acc = sv::zero(field_);
    for (const auto& [m, c] : terms_) {
        ScalarValue term = c;
        for (auto [v, e] : table().get(m).factors) {
            Scalar s = at(v);
            if (s.field() != field_)
                throw FieldMismatchError("evaluation point lives in a different field");
            term = sv::mul(field_, term, sv::pow(field_, s.value(), e));
        }
        acc = sv::add(field_, acc, term);
    }
    return {field_, acc};
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest terms first reads better
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = sv::to_string(field_, c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (negative)
            cs = cs.substr(1);
        bool unit_coeff = (cs == "1");
        bool is_one_mono = table().degree(m) == 0;
        if (!unit_coeff || is_one_mono)
            os << cs;
        if (!is_one_mono) {
            if (!unit_coeff)
                os << "\u00b7";
            os << table().str(m);
        }
        first = false;
    }
    return os.str();
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
    case PolyOp::Scale:
        if (g.degree() > 0)
            throw DomainError("scale expects a constant right operand");
        return f.scaled(g.coeff(MonoTable::instance().one()));
    }
    throw DomainError("bad poly op");
}

MultiDegree mdeg_of(MonoId m, int d) { return MonoTable::instance().multidegree(m, d); }

std::vector<VarId> ring_variables(RingVars kind, int n, int k) {
    std::vector<VarId> vars;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            bool keep = kind == RingVars::General ? true
                        : kind == RingVars::Symmetric ? i >= j
                                                      : i > j;
            if (keep)
                vars.push_back(make_var(i, j, k));
        }
    }
    return vars;
}

namespace {

mpz_class binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// exponent vectors of total degree deg over nvars variables, lex order
void enumerate_exponents(int nvars, int deg, std::vector<std::uint32_t>& cur,
                         const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (static_cast<int>(cur.size()) == nvars - 1) {
        cur.push_back(static_cast<std::uint32_t>(deg));
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur.push_back(static_cast<std::uint32_t>(e));
        enumerate_exponents(nvars, deg - e, cur, emit);
        cur.pop_back();
    }
}

} // namespace

mpz_class count_monomials_of_multidegree(RingVars kind, int n, const MultiDegree& t) {
    std::int64_t nvars = kind == RingVars::General ? std::int64_t{n} * n
                         : kind == RingVars::Symmetric
                             ? std::int64_t{n} * (n + 1) / 2
                             : std::int64_t{n} * (n - 1) / 2;
    mpz_class total = 1;
    for (int tk : t.t)
        total *= binom(nvars + tk - 1, tk);
    return total;
}

std::vector<MonoId> monomials_of_multidegree(RingVars kind, int n, const MultiDegree& t) {
    if (n < 2)
        throw DomainError("matrix size must be at least 2");
    int d = static_cast<int>(t.t.size());
    std::vector<std::vector<MonoId>> per_k;
    per_k.reserve(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        std::vector<VarId> vars = ring_variables(kind, n, k);
        std::vector<MonoId> monos;
        std::vector<std::uint32_t> cur;
        enumerate_exponents(static_cast<int>(vars.size()), t.t[static_cast<std::size_t>(k - 1)],
                            cur, [&](const std::vector<std::uint32_t>& exps) {
                                std::vector<std::pair<VarId, std::uint32_t>> factors;
                                for (std::size_t v = 0; v < vars.size(); ++v)
                                    if (exps[v])
                                        factors.emplace_back(vars[v], exps[v]);
                                monos.push_back(MonoTable::instance().intern(std::move(factors)));
                            });
        per_k.push_back(std::move(monos));
    }
    std::vector<MonoId> result{MonoTable::instance().one()};
    for (const auto& layer : per_k) {
        std::vector<MonoId> next;
        next.reserve(result.size() * layer.size());
        for (MonoId a : result)
            for (MonoId b : layer)
                next.push_back(MonoTable::instance().mul(a, b));
        result = std::move(next);
    }
    return result;
}

} // namespace invkit
