#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "braidwire/cyclo.hpp"

using namespace braidwire;

namespace {

constexpr double kEps = 1e-9;

// Independent lift into floating-point complex numbers, used as the
// oracle for the ring operations.
std::complex<double> lift(const CycloValue& v) {
    const double pi = std::acos(-1.0);
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < 4; ++k)
        acc += v.num(k).convert_to<double>() *
               std::polar(1.0, pi * static_cast<double>(k) / 4.0);
    return acc / std::pow(2.0, static_cast<double>(v.exponent()));
}

bool close(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) < kEps;
}

CycloValue random_value(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> shift(0, 3);
    return CycloValue(coeff(rng), coeff(rng), coeff(rng), coeff(rng),
                      shift(rng));
}

CycloMatrix random_matrix(std::mt19937& rng, size_t dim) {
    CycloMatrix m(dim);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) m.at(r, c) = random_value(rng);
    return m;
}

}  // namespace

TEST_CASE("zeta is a primitive eighth root of unity") {
    CycloValue p = CycloValue::one();
    for (int e = 1; e <= 8; ++e) {
        p *= CycloValue::zeta();
        CHECK(p == CycloValue::zeta_pow(e));
        if (e < 8) CHECK_FALSE(p.is_one());
    }
    CHECK(p.is_one());
    CHECK(CycloValue::zeta_pow(4) == -CycloValue::one());
    CHECK(CycloValue::zeta_pow(2) == CycloValue::i());
    CHECK(CycloValue::zeta_pow(-1) == conj(CycloValue::zeta()));
    CHECK(CycloValue::zeta_pow(9) == CycloValue::zeta());
}

TEST_CASE("square roots of two") {
    CHECK(CycloValue::sqrt2() * CycloValue::sqrt2() == CycloValue::from_int(2));
    CHECK(CycloValue::inv_sqrt2() * CycloValue::sqrt2() == CycloValue::one());
    CHECK(CycloValue::inv_sqrt2() * CycloValue::inv_sqrt2() ==
          CycloValue::half());
    CHECK(close(lift(CycloValue::sqrt2()), {std::sqrt(2.0), 0.0}));
}

TEST_CASE("canonical form keeps the denominator minimal") {
    CHECK(CycloValue(2, 0, 0, 0, 1) == CycloValue::one());
    CHECK(CycloValue(4, 4, 0, 0, 2) == CycloValue(1, 1, 0, 0));
    CHECK(CycloValue(0, 0, 0, 0, 3) == CycloValue::zero());
    CHECK(CycloValue(0, 0, 0, 0, 3).exponent() == 0u);
    CHECK(CycloValue(2, 4, 6, 8, 3).exponent() == 2u);
    CHECK(CycloValue(6, 0, 0, 0, 1) == CycloValue::from_int(3));
}

TEST_CASE("arithmetic agrees with the complex lift") {
    std::mt19937 rng(7);
    for (int n = 0; n < 500; ++n) {
        CycloValue a = random_value(rng);
        CycloValue b = random_value(rng);
        CHECK(close(lift(a + b), lift(a) + lift(b)));
        CHECK(close(lift(a - b), lift(a) - lift(b)));
        CHECK(close(lift(a * b), lift(a) * lift(b)));
        CHECK(close(lift(-a), -lift(a)));
        CHECK(close(lift(conj(a)), std::conj(lift(a))));
        auto [re, im] = a.to_complex();
        CHECK(close({re, im}, lift(a)));
        CHECK(a.is_zero() == close(lift(a), {0.0, 0.0}));
    }
}

TEST_CASE("unit modulus detection") {
    for (int e = 0; e < 8; ++e) CHECK(CycloValue::zeta_pow(e).is_unit_modulus());
    CHECK_FALSE(CycloValue::zero().is_unit_modulus());
    CHECK_FALSE(CycloValue::sqrt2().is_unit_modulus());
    CHECK_FALSE(CycloValue::half().is_unit_modulus());
    // (1 + i)/2 has modulus 1/sqrt(2).
    CHECK_FALSE(CycloValue(1, 0, 1, 0, 1).is_unit_modulus());
    // (1 + i)/sqrt(2) = zeta.
    CHECK(CycloValue(0, 1, 0, -1, 1) * CycloValue(1, 0, 1, 0) ==
          CycloValue::zeta());
}

TEST_CASE("conjugation is an involution and multiplicative") {
    std::mt19937 rng(11);
    for (int n = 0; n < 200; ++n) {
        CycloValue a = random_value(rng);
        CycloValue b = random_value(rng);
        CHECK(conj(conj(a)) == a);
        CHECK(conj(a * b) == conj(a) * conj(b));
        CHECK(conj(a + b) == conj(a) + conj(b));
    }
}

TEST_CASE("halving") {
    CHECK(CycloValue::one().halved() == CycloValue::half());
    CHECK(CycloValue::half().halved() == CycloValue(1, 0, 0, 0, 2));
    CHECK(CycloValue::zero().halved() == CycloValue::zero());
}

TEST_CASE("rendering") {
    CHECK(CycloValue::zero().str() == "0");
    CHECK(CycloValue::one().str() == "1");
    CHECK(CycloValue::zeta().str() == "ζ");
    CHECK(CycloValue::i().str() == "ζ²");
    CHECK((-CycloValue::i()).str() == "-ζ²");
    CHECK(CycloValue::half().str() == "1/2");
    CHECK(CycloValue(1, 0, 1, 0, 1).str() == "(1 + ζ²)/2");
    CHECK(CycloValue(1, 0, -1, 0, 1).str() == "(1 - ζ²)/2");
}

TEST_CASE("json serialization") {
    Json j = CycloValue::inv_sqrt2().to_json();
    CHECK(j["num"] == Json::array({"0", "1", "0", "-1"}));
    CHECK(j["exp"] == 1);
    CHECK(CycloValue::one().to_json()["exp"] == 0);
}

TEST_CASE("matrix identity and multiplication") {
    CycloMatrix id = CycloMatrix::identity(3);
    CHECK(id.is_identity());
    CHECK(id.dim() == 3);

    std::mt19937 rng(23);
    for (int n = 0; n < 50; ++n) {
        CycloMatrix a = random_matrix(rng, 2);
        CycloMatrix b = random_matrix(rng, 2);
        CycloMatrix c = random_matrix(rng, 2);
        CHECK(a * CycloMatrix::identity(2) == a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
        CHECK(adjoint(adjoint(a)) == a);
    }
}

TEST_CASE("matrix multiplication matches the complex lift") {
    std::mt19937 rng(29);
    CycloMatrix a = random_matrix(rng, 3);
    CycloMatrix b = random_matrix(rng, 3);
    CycloMatrix p = a * b;
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) {
            std::complex<double> want{0.0, 0.0};
            for (size_t k = 0; k < 3; ++k)
                want += lift(a.at(r, k)) * lift(b.at(k, c));
            CHECK(close(lift(p.at(r, c)), want));
        }
}

TEST_CASE("unitarity") {
    CycloMatrix h(2);
    h.at(0, 0) = CycloValue::inv_sqrt2();
    h.at(0, 1) = CycloValue::inv_sqrt2();
    h.at(1, 0) = CycloValue::inv_sqrt2();
    h.at(1, 1) = -CycloValue::inv_sqrt2();
    CHECK(h.is_unitary());
    CHECK((h * h).is_identity());

    CycloMatrix shear = CycloMatrix::identity(2);
    shear.at(0, 1) = CycloValue::one();
    CHECK_FALSE(shear.is_unitary());
}

TEST_CASE("tensor product") {
    std::mt19937 rng(31);
    CycloMatrix a = random_matrix(rng, 2);
    CycloMatrix b = random_matrix(rng, 2);
    CycloMatrix c = random_matrix(rng, 2);
    CycloMatrix d = random_matrix(rng, 2);
    CHECK(tensor(a, b).dim() == 4);
    // Mixed-product property pins the index convention.
    CHECK(tensor(a, b) * tensor(c, d) == tensor(a * c, b * d));
    // First factor owns the most significant index.
    CycloMatrix x(2);
    x.at(0, 1) = CycloValue::one();
    x.at(1, 0) = CycloValue::one();
    CycloMatrix xi = tensor(x, CycloMatrix::identity(2));
    CHECK(xi.at(0, 2) == CycloValue::one());
    CHECK(xi.at(2, 0) == CycloValue::one());
    CHECK(xi.at(0, 1) == CycloValue::zero());
}
