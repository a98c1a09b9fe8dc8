#ifndef GRAPHLINK_LAURENT_HPP
#define GRAPHLINK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace graphlink {

/// Integer-coefficient Laurent polynomial in one variable a.  Zero
/// coefficients are never stored; arithmetic is exact.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly monomial(std::int64_t coeff, int exponent);
    static LaurentPoly one() { return monomial(1, 0); }

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    int min_exponent() const; // throws ZeroPolynomial on 0
    int max_exponent() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly pow(unsigned e) const;

    bool operator==(const LaurentPoly&) const = default;

    // Terms `c*a^e` joined by " + ", exponents ascending; the exponent-0 term
    // prints as a bare coefficient.  The zero polynomial prints as "0".
    std::string to_string() const;

  private:
    std::map<int, std::int64_t> terms_;
};

// max exponent - min exponent; throws ZeroPolynomial on the zero polynomial.
std::size_t span(const LaurentPoly& p);

} // namespace graphlink

#endif
