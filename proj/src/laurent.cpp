#include "graphlink/laurent.hpp"

#include "graphlink/errors.hpp"

namespace graphlink {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0)
        p.terms_[exponent] = coeff;
    return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty())
        throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no degree");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty())
        throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no degree");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(e, c);
        if (!inserted && (it->second += c) == 0)
            out.terms_.erase(it);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly neg;
    for (const auto& [e, c] : other.terms_)
        neg.terms_[e] = -c;
    return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(e1 + e2, c1 * c2);
            if (!inserted && (it->second += c1 * c2) == 0)
                out.terms_.erase(it);
        }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly out = one();
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty())
            out += " + ";
        if (e == 0) {
            out += std::to_string(c);
        } else {
            out += std::to_string(c);
            out += "*a^";
            out += std::to_string(e);
        }
    }
    return out;
}

std::size_t span(const LaurentPoly& p) {
    return static_cast<std::size_t>(p.max_exponent() - p.min_exponent());
}

} // namespace graphlink
