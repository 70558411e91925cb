#include "mahlerlab/intseries.hpp"

#include <stdexcept>

namespace ml {

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    const long m = a.order();
    IntSeries r(m);
    for (long i = 0; i <= m; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        const mpz_srcptr ai = a.c_[static_cast<size_t>(i)].get_mpz_t();
        const long jmax = m - i < b.order() ? m - i : b.order();
        for (long j = 0; j <= jmax; ++j) {
            if (b.c_[static_cast<size_t>(j)] == 0) continue;
            mpz_addmul(r.c_[static_cast<size_t>(i + j)].get_mpz_t(), ai,
                       b.c_[static_cast<size_t>(j)].get_mpz_t());
        }
    }
    return r;
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    IntSeries r(a.order() > b.order() ? a.order() : b.order());
    for (long k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = a.at(k) + b.at(k);
    return r;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
    IntSeries r(a.order() > b.order() ? a.order() : b.order());
    for (long k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = a.at(k) - b.at(k);
    return r;
}

IntSeries IntSeries::pow(unsigned long e) const {
    IntSeries acc = IntSeries::one(order());
    IntSeries base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

IntSeries IntSeries::div_exact(const IntSeries& b) const {
    if (b.c_.empty() || b.c_[0] == 0)
        throw std::domain_error("IntSeries: division by a series with zero leading coefficient");
    const long m = order();
    IntSeries q(m);
    std::vector<Integer> rem(c_);
    for (long n = 0; n <= m; ++n) {
        Integer quot, r;
        mpz_tdiv_qr(quot.get_mpz_t(), r.get_mpz_t(), rem[static_cast<size_t>(n)].get_mpz_t(),
                    b.c_[0].get_mpz_t());
        if (r != 0) throw std::domain_error("IntSeries: inexact division");
        q.c_[static_cast<size_t>(n)] = quot;
        if (quot == 0) continue;
        const long jmax = b.order() < m - n ? b.order() : m - n;
        for (long j = 1; j <= jmax; ++j)
            mpz_submul(rem[static_cast<size_t>(n + j)].get_mpz_t(), quot.get_mpz_t(),
                       b.c_[static_cast<size_t>(j)].get_mpz_t());
    }
    return q;
}

IntSeries IntSeries::dilate(long d) const {
    if (d < 1) throw std::domain_error("IntSeries: dilation factor must be >= 1");
    IntSeries r(order());
    for (long k = 0; k * d <= order(); ++k) r.c_[static_cast<size_t>(k * d)] = at(k);
    return r;
}

IntSeries IntSeries::shift_up(long k) const {
    IntSeries r(order());
    for (long n = 0; n + k <= order(); ++n) r.c_[static_cast<size_t>(n + k)] = at(n);
    return r;
}

IntSeries IntSeries::scaled(const Integer& m) const {
    IntSeries r(order());
    for (long k = 0; k <= order(); ++k) r.c_[static_cast<size_t>(k)] = at(k) * m;
    return r;
}

} // namespace ml
