#include "sctx/dist.hpp"

#include <set>
#include <stdexcept>

namespace sctx {

namespace {

Outcome reduce(Outcome y, int m) {
    for (int& a : y) a = ((a % m) + m) % m;
    return y;
}

void require_same_shape(const Dist& p, const Dist& q, const char* op) {
    if (p.modulus() != q.modulus())
        throw std::invalid_argument(std::string(op) + ": modulus mismatch");
    if (p.arity() != q.arity()) throw std::invalid_argument(std::string(op) + ": arity mismatch");
}

}  // namespace

Rat Dist::at(const Outcome& y) const {
    auto it = mass_.find(reduce(y, m_));
    return it == mass_.end() ? Rat(0) : it->second;
}

void Dist::add(Outcome y, const Rat& w) {
    if (w == 0) return;
    y = reduce(std::move(y), m_);
    if (static_cast<int>(y.size()) != arity_)
        throw std::invalid_argument("Dist::add: outcome arity mismatch");
    Rat& slot = mass_[y];
    slot += w;
    if (slot == 0) mass_.erase(y);
}

bool Dist::is_valid() const {
    Rat total(0);
    for (const auto& [y, w] : mass_) {
        if (w < 0) return false;
        total += w;
    }
    return total == 1;
}

bool Dist::operator<(const Dist& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    if (arity_ != o.arity_) return arity_ < o.arity_;
    return mass_ < o.mass_;
}

Dist delta(int m, const Outcome& y) {
    Dist d(m, static_cast<int>(y.size()));
    d.add(y, Rat(1));
    return d;
}

Dist uniform(int m, int arity) {
    Dist d(m, arity);
    Rat w(1);
    for (int i = 0; i < arity; ++i) w /= m;
    Outcome y(arity, 0);
    while (true) {
        d.add(y, w);
        int i = arity - 1;
        while (i >= 0 && ++y[i] == m) y[i--] = 0;
        if (i < 0) break;
    }
    return d;
}

Dist average_power(int m, int j) {
    Dist d(m, 2);
    for (int a = 0; a < m; ++a) d.add({a, a + j}, Rat(1, m));
    return d;
}

Dist convolve(const Dist& p, const Dist& q) {
    require_same_shape(p, q, "convolve");
    Dist r(p.modulus(), p.arity());
    for (const auto& [y1, w1] : p.support()) {
        for (const auto& [y2, w2] : q.support()) {
            Outcome y(p.arity());
            for (int i = 0; i < p.arity(); ++i) y[i] = y1[i] + y2[i];
            r.add(std::move(y), w1 * w2);
        }
    }
    return r;
}

Dist marginalize(const Dist& p, int i) {
    if (p.arity() < 2) throw std::invalid_argument("marginalize: arity must be >= 2");
    if (i < 0 || i >= p.arity()) throw std::invalid_argument("marginalize: index out of range");
    Dist r(p.modulus(), p.arity() - 1);
    for (const auto& [y, w] : p.support()) {
        Outcome z;
        z.reserve(p.arity() - 1);
        for (int k = 0; k < p.arity(); ++k)
            if (k != i) z.push_back(y[k]);
        r.add(std::move(z), w);
    }
    return r;
}

Dist shift_by(const Dist& p, const Outcome& by) {
    if (static_cast<int>(by.size()) != p.arity())
        throw std::invalid_argument("shift_by: arity mismatch");
    Dist r(p.modulus(), p.arity());
    for (const auto& [y, w] : p.support()) {
        Outcome z(p.arity());
        for (int i = 0; i < p.arity(); ++i) z[i] = y[i] + by[i];
        r.add(std::move(z), w);
    }
    return r;
}

Dist mix(const std::vector<std::pair<Rat, Dist>>& terms) {
    if (terms.empty()) throw std::invalid_argument("mix: no terms");
    Dist r(terms.front().second.modulus(), terms.front().second.arity());
    for (const auto& [w, d] : terms) {
        require_same_shape(r, d, "mix");
        for (const auto& [y, v] : d.support()) r.add(y, w * v);
    }
    return r;
}

std::vector<std::pair<Rat, std::optional<Dist>>> partition_split(
    const Dist& p, const std::vector<std::vector<Outcome>>& parts) {
    std::set<Outcome> seen;
    for (const auto& part : parts) {
        for (const Outcome& y : part) {
            if (!seen.insert(y).second)
                throw std::invalid_argument("partition_split: parts overlap");
        }
    }
    for (const auto& [y, w] : p.support()) {
        if (!seen.count(y))
            throw std::invalid_argument("partition_split: support outcome not covered");
    }

    std::vector<std::pair<Rat, std::optional<Dist>>> out;
    out.reserve(parts.size());
    for (const auto& part : parts) {
        Rat weight(0);
        for (const Outcome& y : part) weight += p.at(y);
        if (weight == 0) {
            out.emplace_back(Rat(0), std::nullopt);
            continue;
        }
        Dist comp(p.modulus(), p.arity());
        for (const Outcome& y : part) {
            const Rat w = p.at(y);
            if (w != 0) comp.add(y, w / weight);
        }
        out.emplace_back(std::move(weight), std::move(comp));
    }
    return out;
}

}  // namespace sctx
