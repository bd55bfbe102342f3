#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace braidwire {

using BigInt = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

// Element of Z[zeta]/2^k where zeta = exp(i*pi/4), zeta^4 = -1:
//
//   (n0 + n1*zeta + n2*zeta^2 + n3*zeta^3) / 2^k
//
// The denominator exponent is shared by all four numerators and kept
// minimal: either k == 0 or at least one numerator is odd. This makes
// equality structural and arithmetic exact; there is no floating point
// anywhere. Useful constants: i = zeta^2, sqrt(2) = zeta - zeta^3.
class CycloValue {
public:
    CycloValue() : num_{0, 0, 0, 0}, exp_(0) {}

    CycloValue(BigInt c0, BigInt c1, BigInt c2, BigInt c3, unsigned k = 0)
        : num_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)},
          exp_(k) {
        canonicalize();
    }

    static CycloValue from_int(long v) { return CycloValue(v, 0, 0, 0); }
    static CycloValue zero() { return CycloValue(); }
    static CycloValue one() { return CycloValue(1, 0, 0, 0); }
    static CycloValue i() { return CycloValue(0, 0, 1, 0); }
    static CycloValue zeta() { return CycloValue(0, 1, 0, 0); }
    // zeta^e for any integer e, using zeta^4 = -1.
    static CycloValue zeta_pow(int e);
    static CycloValue sqrt2() { return CycloValue(0, 1, 0, -1); }
    static CycloValue inv_sqrt2() { return CycloValue(0, 1, 0, -1, 1); }
    static CycloValue half() { return CycloValue(1, 0, 0, 0, 1); }

    const BigInt& num(int idx) const { return num_.at(static_cast<size_t>(idx)); }
    unsigned exponent() const { return exp_; }

    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    // True when x * conj(x) == 1, i.e. x lies on the unit circle.
    bool is_unit_modulus() const;

    CycloValue operator-() const;
    CycloValue operator+(const CycloValue& rhs) const;
    CycloValue operator-(const CycloValue& rhs) const;
    CycloValue operator*(const CycloValue& rhs) const;
    CycloValue& operator+=(const CycloValue& rhs) { return *this = *this + rhs; }
    CycloValue& operator*=(const CycloValue& rhs) { return *this = *this * rhs; }

    bool operator==(const CycloValue& rhs) const {
        return exp_ == rhs.exp_ && num_ == rhs.num_;
    }
    bool operator!=(const CycloValue& rhs) const { return !(*this == rhs); }

    // Divide by 2 (exact; bumps the denominator exponent).
    CycloValue halved() const;

    // Rendered as "a + b·ζ + c·ζ² + d·ζ³ (/2^k)".
    std::string str() const;
    // {"num": [c0, c1, c2, c3], "exp": k} with numerators as decimal strings.
    Json to_json() const;

    // Approximate complex value, for diagnostics only.
    std::pair<double, double> to_complex() const;

private:
    void canonicalize();

    std::array<BigInt, 4> num_;
    unsigned exp_;
};

// Complex conjugate: zeta maps to -zeta^3.
CycloValue conj(const CycloValue& v);

// Dense square matrix over CycloValue. Dimensions are small powers of
// two (2, 4, 8); everything is exact.
class CycloMatrix {
public:
    CycloMatrix() : dim_(0) {}
    explicit CycloMatrix(size_t dim)
        : dim_(dim), a_(dim * dim, CycloValue::zero()) {}

    static CycloMatrix identity(size_t dim);

    size_t dim() const { return dim_; }

    CycloValue& at(size_t r, size_t c) { return a_[r * dim_ + c]; }
    const CycloValue& at(size_t r, size_t c) const { return a_[r * dim_ + c]; }

    CycloMatrix operator*(const CycloMatrix& rhs) const;
    CycloMatrix operator*(const CycloValue& s) const;
    CycloMatrix operator+(const CycloMatrix& rhs) const;
    CycloMatrix operator-(const CycloMatrix& rhs) const;

    bool operator==(const CycloMatrix& rhs) const {
        return dim_ == rhs.dim_ && a_ == rhs.a_;
    }
    bool operator!=(const CycloMatrix& rhs) const { return !(*this == rhs); }

    bool is_identity() const;
    bool is_unitary() const;

    std::string str() const;
    Json to_json() const;

private:
    size_t dim_;
    std::vector<CycloValue> a_;
};

// Conjugate transpose. For the unitary matrices used here this is the
// exact inverse.
CycloMatrix adjoint(const CycloMatrix& m);

// Kronecker product with the FIRST factor most significant: the result
// index is (i_a * dim_b + i_b).
CycloMatrix tensor(const CycloMatrix& a, const CycloMatrix& b);

}  // namespace braidwire
