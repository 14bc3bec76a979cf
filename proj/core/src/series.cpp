#include "arcseries/series.hpp"

#include <stdexcept>

#include <json.hpp>

namespace arcs {

namespace {

void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("series truncations differ");
}

}  // namespace

TruncatedSeries TruncatedSeries::one(std::uint32_t truncation) {
    TruncatedSeries s(truncation);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::power_of_t(std::uint32_t truncation, std::uint32_t k,
                                            Int coefficient) {
    TruncatedSeries s(truncation);
    if (k <= truncation) s.c_[k] = std::move(coefficient);
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    require_same_truncation(*this, rhs);
    TruncatedSeries out(trunc_);
    for (std::uint32_t i = 0; i <= trunc_; ++i) out.c_[i] = c_[i] + rhs.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    require_same_truncation(*this, rhs);
    TruncatedSeries out(trunc_);
    for (std::uint32_t i = 0; i <= trunc_; ++i) out.c_[i] = c_[i] - rhs.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    require_same_truncation(*this, rhs);
    TruncatedSeries out(trunc_);
    for (std::uint32_t i = 0; i <= trunc_; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::uint32_t j = 0; i + j <= trunc_; ++j) {
            if (sgn(rhs.c_[j]) == 0) continue;
            mpz_addmul(out.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(),
                       rhs.c_[j].get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted(std::uint32_t k) const {
    TruncatedSeries out(trunc_);
    for (std::uint32_t i = 0; i + k <= trunc_; ++i) out.c_[i + k] = c_[i];
    return out;
}

void TruncatedSeries::apply_geometric_factor(std::uint32_t i) {
    if (i == 0) throw std::invalid_argument("geometric factor needs i >= 1");
    for (std::uint32_t j = i; j <= trunc_; ++j) c_[j] += c_[j - i];
}

bool TruncatedSeries::is_zero() const {
    for (const Int& v : c_)
        if (sgn(v) != 0) return false;
    return true;
}

std::optional<std::uint32_t> TruncatedSeries::order_of_vanishing() const {
    for (std::uint32_t i = 0; i <= trunc_; ++i)
        if (sgn(c_[i]) != 0) return i;
    return std::nullopt;
}

TruncatedSeries restricted_product(std::uint32_t truncation, std::uint32_t modulus,
                                   const std::set<std::uint32_t>& excluded) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    for (std::uint32_t r : excluded)
        if (r >= modulus)
            throw std::invalid_argument("excluded residue outside [0, modulus)");
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (std::uint32_t i = 1; i <= truncation; ++i)
        if (!excluded.count(i % modulus)) s.apply_geometric_factor(i);
    return s;
}

std::string series_to_json(const TruncatedSeries& s) {
    nlohmann::ordered_json j;
    j["truncation"] = s.truncation();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Int& c : s.coefficients()) coeffs.push_back(c.get_str());
    j["coefficients"] = std::move(coeffs);
    return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed series: ") + e.what());
    }
    if (!j.is_object() || !j.contains("truncation") || !j.contains("coefficients"))
        throw std::invalid_argument("series json needs truncation and coefficients");
    if (!j["truncation"].is_number_unsigned())
        throw std::invalid_argument("series truncation must be a nonnegative integer");
    std::uint32_t n = j["truncation"].get<std::uint32_t>();
    const auto& arr = j["coefficients"];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("series coefficient count must be truncation + 1");
    TruncatedSeries s(n);
    for (std::uint32_t i = 0; i <= n; ++i) {
        if (!arr[i].is_string())
            throw std::invalid_argument("series coefficients must be decimal strings");
        const std::string& digits = arr[i].get_ref<const std::string&>();
        if (mpz_set_str(s.coeff(i).get_mpz_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("bad series coefficient: " + digits);
    }
    return s;
}

std::string series_to_csv(const TruncatedSeries& s) {
    std::string out = "index,coefficient\n";
    for (std::uint32_t i = 0; i <= s.truncation(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += s[i].get_str();
        out += '\n';
    }
    return out;
}

}  // namespace arcs
