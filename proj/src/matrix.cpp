#include "invkit/matrix.hpp"

#include <sstream>

namespace invkit {

std::string kind_name(MatrixKind k) {
    switch (k) {
    case MatrixKind::General: return "general";
    case MatrixKind::Symmetric: return "symmetric";
    case MatrixKind::SkewSymmetric: return "skew";
    }
    return "?";
}

MatrixKind kind_from_name(const std::string& s) {
    if (s == "general") return MatrixKind::General;
    if (s == "symmetric") return MatrixKind::Symmetric;
    if (s == "skew" || s == "skew-symmetric") return MatrixKind::SkewSymmetric;
    throw ParseError("unknown matrix kind '" + s + "'");
}

RingVars ring_vars_of(MatrixKind k) {
    switch (k) {
    case MatrixKind::General: return RingVars::General;
    case MatrixKind::Symmetric: return RingVars::Symmetric;
    case MatrixKind::SkewSymmetric: return RingVars::Skew;
    }
    return RingVars::General;
}

namespace {

std::size_t idx(int i, int j, int n) {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j - 1);
}

} // namespace

// ---------------------------------------------------------------------------
// ConcreteMatrix
// ---------------------------------------------------------------------------

ConcreteMatrix ConcreteMatrix::zero(const FieldDescriptor& f, MatrixKind kind, int n) {
    ConcreteMatrix m(f, kind, n);
    m.e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), sv::zero(f));
    return m;
}

ConcreteMatrix ConcreteMatrix::identity(const FieldDescriptor& f, int n) {
    ConcreteMatrix m = zero(f, MatrixKind::General, n);
    for (int i = 1; i <= n; ++i)
        m.e_[idx(i, i, n)] = sv::one(f);
    return m;
}

ConcreteMatrix ConcreteMatrix::from_values(const FieldDescriptor& f, MatrixKind kind, int n,
                                           std::vector<ScalarValue> entries) {
    if (n < 1 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("entry count does not match matrix size");
    ConcreteMatrix m(f, kind, n);
    m.e_ = std::move(entries);
    m.validate();
    return m;
}

ConcreteMatrix ConcreteMatrix::from_ints(const FieldDescriptor& f, MatrixKind kind, int n,
                                         const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<ScalarValue> vals;
    vals.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    if (static_cast<int>(rows.size()) != n)
        throw DomainError("row count does not match matrix size");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DomainError("column count does not match matrix size");
        for (std::int64_t v : row)
            vals.push_back(sv::from_int(f, v));
    }
    return from_values(f, kind, n, std::move(vals));
}

ConcreteMatrix ConcreteMatrix::sym6(const Scalar& a, const Scalar& b, const Scalar& c,
                                    const Scalar& d, const Scalar& e, const Scalar& f) {
    const FieldDescriptor& fld = a.field();
    for (const Scalar* s : {&b, &c, &d, &e, &f})
        if (s->field() != fld)
            throw FieldMismatchError("sym6 entries belong to different fields");
    std::vector<ScalarValue> vals = {a.value(), b.value(), c.value(),
                                     b.value(), d.value(), e.value(),
                                     c.value(), e.value(), f.value()};
    return from_values(fld, MatrixKind::Symmetric, 3, std::move(vals));
}

ConcreteMatrix ConcreteMatrix::sym6_ints(const FieldDescriptor& fld, std::int64_t a,
                                         std::int64_t b, std::int64_t c, std::int64_t d,
                                         std::int64_t e, std::int64_t f) {
    return sym6(Scalar::of(fld, a), Scalar::of(fld, b), Scalar::of(fld, c), Scalar::of(fld, d),
                Scalar::of(fld, e), Scalar::of(fld, f));
}

void ConcreteMatrix::validate() const {
    if (kind_ == MatrixKind::General)
        return;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= i; ++j) {
            const ScalarValue& lower = e_[idx(i, j, n_)];
            const ScalarValue& upper = e_[idx(j, i, n_)];
            if (kind_ == MatrixKind::Symmetric) {
                if (!sv::equal(field_, lower, upper))
                    throw DomainError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
            } else {
                if (!sv::equal(field_, lower, sv::neg(field_, upper)))
                    throw DomainError("matrix is not skew-symmetric at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
                if (i == j && !sv::is_zero(field_, lower))
                    throw DomainError("skew-symmetric matrix has nonzero diagonal entry");
            }
        }
    }
}

Scalar ConcreteMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw DomainError("matrix index out of range");
    return {field_, e_[idx(i, j, n_)]};
}

ConcreteMatrix ConcreteMatrix::operator*(const ConcreteMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_)
        throw DomainError("matrix product size or field mismatch");
    ConcreteMatrix r(field_, MatrixKind::General, n_);
    r.e_.assign(e_.size(), sv::zero(field_));
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const ScalarValue& aik = e_[idx(i, k, n_)];
            if (sv::is_zero(field_, aik))
                continue;
            for (int j = 1; j <= n_; ++j) {
                r.e_[idx(i, j, n_)] = sv::add(
                    field_, r.e_[idx(i, j, n_)], sv::mul(field_, aik, o.e_[idx(k, j, n_)]));
            }
        }
    return r;
}

ConcreteMatrix ConcreteMatrix::operator+(const ConcreteMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_)
        throw DomainError("matrix sum size or field mismatch");
    MatrixKind k = kind_ == o.kind_ ? kind_ : MatrixKind::General;
    ConcreteMatrix r(field_, k, n_);
    r.e_.reserve(e_.size());
    for (std::size_t a = 0; a < e_.size(); ++a)
        r.e_.push_back(sv::add(field_, e_[a], o.e_[a]));
    return r;
}

ConcreteMatrix ConcreteMatrix::operator-() const {
    ConcreteMatrix r(field_, kind_, n_);
    r.e_.reserve(e_.size());
    for (const auto& v : e_)
        r.e_.push_back(sv::neg(field_, v));
    return r;
}

ConcreteMatrix ConcreteMatrix::transposed() const {
    ConcreteMatrix r(field_, kind_, n_);
    r.e_.assign(e_.size(), sv::zero(field_));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            r.e_[idx(j, i, n_)] = e_[idx(i, j, n_)];
    return r;
}

ConcreteMatrix ConcreteMatrix::scaled(const Scalar& c) const {
    if (c.field() != field_)
        throw FieldMismatchError("scale coefficient field differs");
    ConcreteMatrix r(field_, kind_, n_);
    r.e_.reserve(e_.size());
    for (const auto& v : e_)
        r.e_.push_back(sv::mul(field_, v, c.value()));
    return r;
}

bool ConcreteMatrix::operator==(const ConcreteMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_)
        return false;
    for (std::size_t a = 0; a < e_.size(); ++a)
        if (!sv::equal(field_, e_[a], o.e_[a]))
            return false;
    return true;
}

bool ConcreteMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!sv::is_zero(field_, v))
            return false;
    return true;
}

Scalar ConcreteMatrix::trace() const {
    ScalarValue s = sv::zero(field_);
    for (int i = 1; i <= n_; ++i)
        s = sv::add(field_, s, e_[idx(i, i, n_)]);
    return {field_, s};
}

namespace {

// cofactor expansion along the first row of the submatrix rows x cols
template <typename GetEntry, typename Ring>
auto minor_det(const GetEntry& entry, const Ring& ring, std::vector<int> rows,
               std::vector<int> cols) -> decltype(ring.zero()) {
    if (rows.size() == 1)
        return entry(rows[0], cols[0]);
    auto acc = ring.zero();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto top = entry(rows[0], cols[c]);
        if (ring.is_zero(top))
            continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t cc = 0; cc < cols.size(); ++cc)
            if (cc != c)
                sub_cols.push_back(cols[cc]);
        auto sub = minor_det(entry, ring, sub_rows, std::move(sub_cols));
        auto contrib = ring.mul(top, sub);
        acc = (c % 2 == 0) ? ring.add(acc, contrib) : ring.sub(acc, contrib);
    }
    return acc;
}

template <typename GetEntry, typename Ring>
auto sigma_impl(const GetEntry& entry, const Ring& ring, int n, int t) -> decltype(ring.zero()) {
    if (t < 1 || t > n)
        throw DomainError("sigma index out of range: t = " + std::to_string(t) + ", n = " +
                          std::to_string(n));
    auto acc = ring.zero();
    std::vector<int> subset(static_cast<std::size_t>(t));
    // iterate t-subsets of {1..n} in lexicographic order
    for (int i = 0; i < t; ++i)
        subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        acc = ring.add(acc, minor_det(entry, ring, subset, subset));
        int pos = t - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - (t - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < t; ++q)
            subset[static_cast<std::size_t>(q)] = subset[static_cast<std::size_t>(q - 1)] + 1;
    }
    return acc;
}

struct ScalarRingOps {
    const FieldDescriptor& f;
    ScalarValue zero() const { return sv::zero(f); }
    bool is_zero(const ScalarValue& v) const { return sv::is_zero(f, v); }
    ScalarValue add(const ScalarValue& a, const ScalarValue& b) const { return sv::add(f, a, b); }
    ScalarValue sub(const ScalarValue& a, const ScalarValue& b) const { return sv::sub(f, a, b); }
    ScalarValue mul(const ScalarValue& a, const ScalarValue& b) const { return sv::mul(f, a, b); }
};

struct PolyRingOps {
    const FieldDescriptor& f;
    Polynomial zero() const { return Polynomial::zero(f); }
    bool is_zero(const Polynomial& p) const { return p.is_zero(); }
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
    Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
};

} // namespace

Scalar ConcreteMatrix::sigma(int t) const {
    ScalarRingOps ring{field_};
    auto entry = [&](int i, int j) -> ScalarValue { return e_[idx(i, j, n_)]; };
    return {field_, sigma_impl(entry, ring, n_, t)};
}

std::string ConcreteMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= n_; ++i) {
        os << (i > 1 ? " [" : "[");
        for (int j = 1; j <= n_; ++j)
            os << (j > 1 ? ", " : "") << sv::to_string(field_, e_[idx(i, j, n_)]);
        os << "]";
        if (i < n_)
            os << "\n";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// GenericMatrix
// ---------------------------------------------------------------------------

GenericMatrix GenericMatrix::generic(MatrixKind kind, int n, int k, const FieldDescriptor& f) {
    if (n < 2)
        throw DomainError("matrix size must be at least 2");
    if (k < 1)
        throw DomainError("matrix index must be at least 1");
    GenericMatrix m(f, kind, n);
    m.e_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            switch (kind) {
            case MatrixKind::General:
                m.e_.push_back(Polynomial::variable(f, make_var(i, j, k)));
                break;
            case MatrixKind::Symmetric:
                m.e_.push_back(Polynomial::variable(
                    f, i >= j ? make_var(i, j, k) : make_var(j, i, k)));
                break;
            case MatrixKind::SkewSymmetric:
                if (i > j)
                    m.e_.push_back(Polynomial::variable(f, make_var(i, j, k)));
                else if (i == j)
                    m.e_.push_back(Polynomial::zero(f));
                else
                    m.e_.push_back(-Polynomial::variable(f, make_var(j, i, k)));
                break;
            }
        }
    }
    return m;
}

GenericMatrix GenericMatrix::zero(const FieldDescriptor& f, MatrixKind kind, int n) {
    GenericMatrix m(f, kind, n);
    m.e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Polynomial::zero(f));
    return m;
}

GenericMatrix GenericMatrix::from_entries(MatrixKind kind, int n,
                                          std::vector<Polynomial> entries) {
    if (entries.empty() ||
        entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("entry count does not match matrix size");
    GenericMatrix m(entries.front().field(), kind, n);
    m.e_ = std::move(entries);
    return m;
}

const Polynomial& GenericMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw DomainError("matrix index out of range");
    return e_[idx(i, j, n_)];
}

GenericMatrix GenericMatrix::operator*(const GenericMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_)
        throw DomainError("matrix product size or field mismatch");
    GenericMatrix r(field_, MatrixKind::General, n_);
    r.e_.assign(e_.size(), Polynomial::zero(field_));
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const Polynomial& aik = e_[idx(i, k, n_)];
            if (aik.is_zero())
                continue;
            for (int j = 1; j <= n_; ++j) {
                if (o.e_[idx(k, j, n_)].is_zero())
                    continue;
                r.e_[idx(i, j, n_)] = r.e_[idx(i, j, n_)] + aik * o.e_[idx(k, j, n_)];
            }
        }
    return r;
}

GenericMatrix GenericMatrix::operator+(const GenericMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_)
        throw DomainError("matrix sum size or field mismatch");
    GenericMatrix r(field_, kind_ == o.kind_ ? kind_ : MatrixKind::General, n_);
    r.e_.reserve(e_.size());
    for (std::size_t a = 0; a < e_.size(); ++a)
        r.e_.push_back(e_[a] + o.e_[a]);
    return r;
}

GenericMatrix GenericMatrix::operator-() const {
    GenericMatrix r(field_, kind_, n_);
    r.e_.reserve(e_.size());
    for (const auto& p : e_)
        r.e_.push_back(-p);
    return r;
}

GenericMatrix GenericMatrix::transposed() const {
    GenericMatrix r(field_, kind_, n_);
    r.e_.assign(e_.size(), Polynomial::zero(field_));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            r.e_[idx(j, i, n_)] = e_[idx(i, j, n_)];
    return r;
}

Polynomial GenericMatrix::trace() const {
    Polynomial s = Polynomial::zero(field_);
    for (int i = 1; i <= n_; ++i)
        s = s + e_[idx(i, i, n_)];
    return s;
}

Polynomial GenericMatrix::sigma(int t) const {
    PolyRingOps ring{field_};
    auto entry = [&](int i, int j) -> Polynomial { return e_[idx(i, j, n_)]; };
    return sigma_impl(entry, ring, n_, t);
}

// ---------------------------------------------------------------------------

namespace {

template <typename M>
M word_value_impl(const std::vector<WordLetter>& word, const std::vector<M>& tuple) {
    if (word.empty())
        throw DomainError("empty word");
    auto fetch = [&](const WordLetter& l) -> M {
        if (l.k < 1 || l.k > static_cast<int>(tuple.size()))
            throw DomainError("word letter " + std::to_string(l.k) +
                              " exceeds tuple length " + std::to_string(tuple.size()));
        const M& m = tuple[static_cast<std::size_t>(l.k - 1)];
        return l.transpose ? m.transposed() : m;
    };
    M acc = fetch(word.front());
    for (std::size_t i = 1; i < word.size(); ++i)
        acc = acc * fetch(word[i]);
    return acc;
}

} // namespace

ConcreteMatrix word_value(const std::vector<WordLetter>& word,
                          const std::vector<ConcreteMatrix>& tuple) {
    return word_value_impl(word, tuple);
}

GenericMatrix word_value(const std::vector<WordLetter>& word,
                         const std::vector<GenericMatrix>& tuple) {
    return word_value_impl(word, tuple);
}

Polynomial psi_substitution(const Polynomial& f) { return f.psi_image(); }

} // namespace invkit
