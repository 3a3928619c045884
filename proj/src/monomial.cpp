#include "invkit/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>
#include <sstream>

#include "invkit/errors.hpp"

namespace invkit {

std::string var_name(VarId v) {
    std::ostringstream os;
    os << "x" << var_i(v) << var_j(v) << "(" << var_k(v) << ")";
    return os.str();
}

std::string MultiDegree::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < t.size(); ++k)
        os << (k ? "," : "") << t[k];
    os << ")";
    return os.str();
}

MonoTable& MonoTable::instance() {
    static MonoTable table;
    return table;
}

std::string MonoTable::key_of(const Monomial& m) {
    std::string key;
    key.resize(m.factors.size() * sizeof(std::pair<VarId, std::uint32_t>));
    if (!m.factors.empty())
        std::memcpy(key.data(), m.factors.data(), key.size());
    return key;
}

MonoId MonoTable::intern_sorted(Monomial&& m) {
    std::string key = key_of(m);
    {
        std::shared_lock lock(mu_);
        auto it = ids_.find(key);
        if (it != ids_.end())
            return it->second;
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = ids_.try_emplace(std::move(key), static_cast<MonoId>(store_.size()));
    if (inserted)
        store_.push_back(std::move(m));
    return it->second;
}

MonoId MonoTable::one() { return intern({}); }

MonoId MonoTable::intern(std::vector<std::pair<VarId, std::uint32_t>> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    m.factors.reserve(factors.size());
    for (const auto& [v, e] : factors) {
        if (e == 0)
            continue;
        if (!m.factors.empty() && m.factors.back().first == v)
            m.factors.back().second += e;
        else
            m.factors.emplace_back(v, e);
        m.degree += e;
    }
    return intern_sorted(std::move(m));
}

MonoId MonoTable::mul(MonoId a, MonoId b) {
    Monomial m;
    {
        std::shared_lock lock(mu_);
        const Monomial &ma = store_[a], &mb = store_[b];
        m.factors.reserve(ma.factors.size() + mb.factors.size());
        std::size_t i = 0, j = 0;
        while (i < ma.factors.size() || j < mb.factors.size()) {
            if (j == mb.factors.size() ||
                (i < ma.factors.size() && ma.factors[i].first < mb.factors[j].first)) {
                m.factors.push_back(ma.factors[i++]);
            } else if (i == ma.factors.size() || mb.factors[j].first < ma.factors[i].first) {
                m.factors.push_back(mb.factors[j++]);
            } else {
                m.factors.emplace_back(ma.factors[i].first,
                                       ma.factors[i].second + mb.factors[j].second);
                ++i;
                ++j;
            }
        }
        m.degree = ma.degree + mb.degree;
    }
    return intern_sorted(std::move(m));
}

Monomial MonoTable::get(MonoId id) const {
    std::shared_lock lock(mu_);
    return store_[id];
}

std::uint32_t MonoTable::degree(MonoId id) const {
    std::shared_lock lock(mu_);
    return store_[id].degree;
}

bool MonoTable::less(MonoId a, MonoId b) const {
    if (a == b)
        return false;
    std::shared_lock lock(mu_);
    const Monomial &ma = store_[a], &mb = store_[b];
    if (ma.degree != mb.degree)
        return ma.degree < mb.degree;
    return std::lexicographical_compare(ma.factors.begin(), ma.factors.end(),
                                        mb.factors.begin(), mb.factors.end());
}

MultiDegree MonoTable::multidegree(MonoId id, int d) const {
    MultiDegree md;
    md.t.assign(static_cast<std::size_t>(d), 0);
    std::shared_lock lock(mu_);
    for (const auto& [v, e] : store_[id].factors) {
        int k = var_k(v);
        if (k < 1 || k > d)
            throw DomainError("monomial mentions matrix index " + std::to_string(k) +
                              " outside 1.." + std::to_string(d));
        md.t[static_cast<std::size_t>(k - 1)] += static_cast<int>(e);
    }
    return md;
}

std::string MonoTable::str(MonoId id) const {
    Monomial m = get(id);
    if (m.factors.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors) {
        if (!first)
            os << "\u00b7";
        os << var_name(v);
        if (e > 1)
            os << "^" << e;
        first = false;
    }
    return os.str();
}

} // namespace invkit
