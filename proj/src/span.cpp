#include "invkit/span.hpp"

#include "invkit/scalar.hpp"

namespace invkit {

namespace {

// r = a*v - b*p over sorted sparse vectors
QVec q_combine(const mpz_class& a, const QVec& v, const mpz_class& b, const QVec& p) {
    QVec r;
    r.e.reserve(v.e.size() + p.e.size());
    std::size_t i = 0, j = 0;
    while (i < v.e.size() || j < p.e.size()) {
        if (j == p.e.size() || (i < v.e.size() && v.e[i].first < p.e[j].first)) {
            r.e.emplace_back(v.e[i].first, a * v.e[i].second);
            ++i;
        } else if (i == v.e.size() || p.e[j].first < v.e[i].first) {
            r.e.emplace_back(p.e[j].first, -b * p.e[j].second);
            ++j;
        } else {
            mpz_class c = a * v.e[i].second - b * p.e[j].second;
            if (c != 0)
                r.e.emplace_back(v.e[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

void q_strip_content(QVec& v) {
    if (v.e.empty())
        return;
    mpz_class g = 0;
    for (const auto& [c, x] : v.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    bool negate = v.e.front().second < 0;
    if (g == 1 && !negate)
        return;
    if (negate)
        g = -g;
    for (auto& [c, x] : v.e)
        x /= g;
}

FpVec fp_combine_sub(const FpVec& v, std::int64_t coeff, const FpVec& p, std::int64_t mod) {
    // r = v - coeff * p (mod)
    FpVec r;
    r.e.reserve(v.e.size() + p.e.size());
    std::size_t i = 0, j = 0;
    auto mul = [&](std::int64_t a, std::int64_t b) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % mod);
    };
    while (i < v.e.size() || j < p.e.size()) {
        if (j == p.e.size() || (i < v.e.size() && v.e[i].first < p.e[j].first)) {
            r.e.push_back(v.e[i]);
            ++i;
        } else if (i == v.e.size() || p.e[j].first < v.e[i].first) {
            std::int64_t c = (mod - mul(coeff, p.e[j].second)) % mod;
            if (c != 0)
                r.e.emplace_back(p.e[j].first, c);
            ++j;
        } else {
            std::int64_t c = (v.e[i].second - mul(coeff, p.e[j].second)) % mod;
            if (c < 0)
                c += mod;
            if (c != 0)
                r.e.emplace_back(v.e[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

bool QSpanBasis::insert(QVec v) {
    while (!v.payload_empty(kBookkeepingBase)) {
        std::int64_t lead = v.e.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            q_strip_content(v);
            pivots_.emplace(lead, std::move(v));
            return true;
        }
        v = q_combine(it->second.e.front().second, v, v.e.front().second, it->second);
        q_strip_content(v);
    }
    return false;
}

QVec QSpanBasis::reduce(QVec v) const {
    while (!v.payload_empty(kBookkeepingBase)) {
        std::int64_t lead = v.e.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end())
            break;
        v = q_combine(it->second.e.front().second, v, v.e.front().second, it->second);
        q_strip_content(v);
    }
    return v;
}

bool FpSpanBasis::insert(FpVec v) {
    while (!v.payload_empty(kBookkeepingBase)) {
        std::int64_t lead = v.e.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            std::int64_t inv = sv::fp_inverse(v.e.front().second, p_);
            for (auto& [c, x] : v.e)
                x = static_cast<std::int64_t>(static_cast<__int128>(x) * inv % p_);
            pivots_.emplace(lead, std::move(v));
            return true;
        }
        v = fp_combine_sub(v, v.e.front().second, it->second, p_);
    }
    return false;
}

FpVec FpSpanBasis::reduce(FpVec v) const {
    while (!v.payload_empty(kBookkeepingBase)) {
        std::int64_t lead = v.e.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end())
            break;
        v = fp_combine_sub(v, v.e.front().second, it->second, p_);
    }
    return v;
}

QMembership q_span_membership(const std::vector<QVec>& candidates, const QVec& target) {
    QSpanBasis basis;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        QVec v = candidates[j];
        v.e.emplace_back(QSpanBasis::kBookkeepingBase + static_cast<std::int64_t>(j), 1);
        basis.insert(std::move(v));
    }
    QVec t = target;
    std::int64_t tb =
        QSpanBasis::kBookkeepingBase + static_cast<std::int64_t>(candidates.size());
    t.e.emplace_back(tb, 1);
    QVec r = basis.reduce(std::move(t));
    QMembership m;
    if (!r.payload_empty(QSpanBasis::kBookkeepingBase))
        return m;
    // 0 = sum_j mu_j C_j + tau * T  =>  T = sum_j (-mu_j / tau) C_j
    mpz_class tau = 0;
    for (const auto& [c, x] : r.e)
        if (c == tb)
            tau = x;
    if (tau == 0)
        return m; // unreachable: the target's bookkeeping entry never dies
    m.in_span = true;
    for (const auto& [c, x] : r.e) {
        if (c == tb || c < QSpanBasis::kBookkeepingBase)
            continue;
        mpq_class coeff(-x, tau);
        coeff.canonicalize();
        if (coeff != 0)
            m.combination.emplace_back(
                static_cast<std::size_t>(c - QSpanBasis::kBookkeepingBase), std::move(coeff));
    }
    return m;
}

FpMembership fp_span_membership(std::int64_t p, const std::vector<FpVec>& candidates,
                                const FpVec& target) {
    FpSpanBasis basis(p);
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        FpVec v = candidates[j];
        v.e.emplace_back(FpSpanBasis::kBookkeepingBase + static_cast<std::int64_t>(j), 1);
        basis.insert(std::move(v));
    }
    FpVec t = target;
    std::int64_t tb =
        FpSpanBasis::kBookkeepingBase + static_cast<std::int64_t>(candidates.size());
    t.e.emplace_back(tb, 1);
    FpVec r = basis.reduce(std::move(t));
    FpMembership m;
    if (!r.payload_empty(FpSpanBasis::kBookkeepingBase))
        return m;
    std::int64_t tau = 0;
    for (const auto& [c, x] : r.e)
        if (c == tb)
            tau = x;
    if (tau == 0)
        return m;
    m.in_span = true;
    std::int64_t inv_tau = sv::fp_inverse(tau, p);
    for (const auto& [c, x] : r.e) {
        if (c == tb || c < FpSpanBasis::kBookkeepingBase)
            continue;
        std::int64_t coeff =
            static_cast<std::int64_t>(static_cast<__int128>(p - x) * inv_tau % p);
        if (coeff != 0)
            m.combination.emplace_back(
                static_cast<std::size_t>(c - FpSpanBasis::kBookkeepingBase), coeff);
    }
    return m;
}

} // namespace invkit
