// intseries.hpp
//
// Truncated power series over Z with exact coefficients.  Used for eta
// quotients and theta expansions; multiplication, integer powers, exact
// division by a unit-leading series, and index dilation q -> q^d.

#ifndef MAHLERLAB_INTSERIES_HPP
#define MAHLERLAB_INTSERIES_HPP

#include <vector>

#include "mahlerlab/precision.hpp"

namespace ml {

class IntSeries {
public:
    IntSeries() = default;
    explicit IntSeries(long order) : c_(static_cast<size_t>(order) + 1) {}

    static IntSeries one(long order) {
        IntSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Integer& operator[](size_t k) const { return c_[k]; }
    Integer& operator[](size_t k) { return c_[k]; }
    Integer at(long k) const {
        if (k < 0 || k > order()) return Integer(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Integer>& coeffs() const { return c_; }

    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
    friend bool operator==(const IntSeries& a, const IntSeries& b) { return a.c_ == b.c_; }

    IntSeries pow(unsigned long e) const;
    // exact division; requires unit leading coefficient in the divisor
    IntSeries div_exact(const IntSeries& b) const;
    IntSeries dilate(long d) const;   // q -> q^d, truncated at the same order
    IntSeries shift_up(long k) const; // multiply by q^k, truncated
    IntSeries scaled(const Integer& m) const;

private:
    std::vector<Integer> c_;
};

} // namespace ml

#endif
