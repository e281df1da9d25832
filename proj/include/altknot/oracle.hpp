#pragma once

#include <map>
#include <set>
#include <string>

#include "altknot/diagram.hpp"
#include "altknot/linalg.hpp"

namespace altknot {

class Laurent {
public:
    Laurent() = default;
    Laurent(Integer c) { if (c) terms_[0] = c; }
    static Laurent monomial(Integer c, int exponent);

    const std::map<int, Integer>& terms() const { return terms_; }
    Integer coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

    Laurent inverted() const;  // x -> 1/x
    Integer evaluate(Integer x) const;  // x = +-1 only
    std::string to_string(const std::string& var = "q") const;

private:
    void add(int e, Integer c);
    std::map<int, Integer> terms_;
};

// Jones polynomial in q = t^-1: the right-handed trefoil gives -q^-4 + q^-3 + q^-1.
Laurent jones(const Diagram& d);
Integer determinant_from_jones(const Laurent& j);
bool is_unknot_smallscale(const Diagram& d);
std::set<int> crossing_change_sweep(const Diagram& d);

}  // namespace altknot
