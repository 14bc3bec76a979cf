#include "arcseries/monomial_order.hpp"

#include <stdexcept>

namespace arcs {

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    if (order.tiebreak == MonomialOrder::Tiebreak::revlex) {
        // Scan from the highest variable down; the first difference is the
        // last nonzero entry of the exponent difference.
        auto i = ea.rbegin();
        auto j = eb.rbegin();
        while (i != ea.rend() && j != eb.rend()) {
            if (j->first < i->first) return -1;  // a alone holds the top variable
            if (i->first < j->first) return 1;
            if (i->second != j->second) return i->second < j->second ? 1 : -1;
            ++i, ++j;
        }
        if (i != ea.rend()) return -1;  // surplus entries of a sit below, diff positive
        if (j != eb.rend()) return 1;
        return 0;
    }
    auto i = ea.begin();
    auto j = eb.begin();
    while (i != ea.end() && j != eb.end()) {
        if (i->first < j->first) return 1;  // a alone holds the bottom variable
        if (j->first < i->first) return -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != ea.end()) return 1;
    if (j != eb.end()) return -1;
    return 0;
}

std::string order_tag(MonomialOrder order) {
    return order.tiebreak == MonomialOrder::Tiebreak::revlex ? "weight-revlex"
                                                             : "weight-lex";
}

MonomialOrder order_from_tag(const std::string& tag) {
    if (tag == "weight-revlex") return {MonomialOrder::Tiebreak::revlex};
    if (tag == "weight-lex") return {MonomialOrder::Tiebreak::lex};
    throw std::invalid_argument("unknown monomial order tag: " + tag);
}

}  // namespace arcs
