#include "arcseries/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcs {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    normalize();
}

Monomial::Monomial(std::initializer_list<Entry> entries) : entries_(entries) {
    normalize();
}

void Monomial::normalize() {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries_.size();) {
        VarId v = entries_[i].first;
        std::uint64_t e = 0;
        while (i < entries_.size() && entries_[i].first == v) e += entries_[i++].second;
        if (e == 0) continue;
        if (e > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
        entries_[out++] = {v, static_cast<std::uint32_t>(e)};
    }
    entries_.resize(out);
    weight_ = 0;
    for (const Entry& en : entries_)
        weight_ += static_cast<std::uint64_t>(en.first.level) * en.second;
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        m.entries_.push_back({v, e});
        m.weight_ = static_cast<std::uint64_t>(v.level) * e;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), v,
        [](const Entry& en, VarId x) { return en.first < x; });
    if (it != entries_.end() && it->first == v) return it->second;
    return 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (const Entry& en : entries_) d += en.second;
    return d;
}

bool Monomial::has_level0() const {
    return !entries_.empty() && entries_.front().first.level == 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + rhs.entries_.size());
    auto i = entries_.begin(), j = rhs.entries_.begin();
    while (i != entries_.end() || j != rhs.entries_.end()) {
        if (j == rhs.entries_.end() || (i != entries_.end() && i->first < j->first)) {
            out.entries_.push_back(*i++);
        } else if (i == entries_.end() || j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            std::uint64_t e = static_cast<std::uint64_t>(i->second) + j->second;
            if (e > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
            out.entries_.push_back({i->first, static_cast<std::uint32_t>(e)});
            ++i, ++j;
        }
    }
    out.weight_ = weight_ + rhs.weight_;
    return out;
}

bool Monomial::divides(const Monomial& rhs) const {
    auto i = entries_.begin(), j = rhs.entries_.begin();
    while (i != entries_.end()) {
        while (j != rhs.entries_.end() && j->first < i->first) ++j;
        if (j == rhs.entries_.end() || !(j->first == i->first) || j->second < i->second)
            return false;
        ++i;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& rhs) const {
    Monomial out;
    out.entries_.reserve(entries_.size());
    auto j = rhs.entries_.begin();
    for (const Entry& en : entries_) {
        std::uint32_t sub = 0;
        while (j != rhs.entries_.end() && j->first < en.first) ++j;
        if (j != rhs.entries_.end() && j->first == en.first) sub = j->second;
        if (sub > en.second) throw std::domain_error("monomial division is not exact");
        if (en.second > sub) out.entries_.push_back({en.first, en.second - sub});
    }
    if (rhs.weight_ > weight_) throw std::domain_error("monomial division is not exact");
    out.weight_ = weight_ - rhs.weight_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
            out.entries_.push_back(*i++);
        } else if (i == a.entries_.end() || j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.push_back({i->first, std::max(i->second, j->second)});
            ++i, ++j;
        }
    }
    for (const Entry& en : out.entries_)
        out.weight_ += static_cast<std::uint64_t>(en.first.level) * en.second;
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            out.entries_.push_back({i->first, std::min(i->second, j->second)});
            ++i, ++j;
        }
    }
    for (const Entry& en : out.entries_)
        out.weight_ += static_cast<std::uint64_t>(en.first.level) * en.second;
    return out;
}

bool Monomial::coprime_with(const Monomial& rhs) const {
    auto i = entries_.begin(), j = rhs.entries_.begin();
    while (i != entries_.end() && j != rhs.entries_.end()) {
        if (i->first < j->first) ++i;
        else if (j->first < i->first) ++j;
        else return false;
    }
    return true;
}

}  // namespace arcs
