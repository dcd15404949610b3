#pragma once

#include "stabatlas/serialize.hpp"

namespace stabatlas {

/* Gaussian integer re + im*i with arbitrary-precision components. */
struct GaussianInt {
    BigInt re = 0;
    BigInt im = 0;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r) : re(r), im(0) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    /* both components divisible by 2, i.e. divisible by 2 in Z[i] */
    bool is_even() const { return (re & 1) == 0 && (im & 1) == 0; }

    GaussianInt conj() const { return {re, -im}; }
    GaussianInt halved() const { return {re >> 1, im >> 1}; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    /* multiplication by i, used for the phase unit */
    GaussianInt times_i() const { return {-im, re}; }

    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }

    /* total order: real part first, then imaginary */
    int compare(const GaussianInt& o) const {
        if (re != o.re) return re < o.re ? -1 : 1;
        if (im != o.im) return im < o.im ? -1 : 1;
        return 0;
    }
};

}  // namespace stabatlas
