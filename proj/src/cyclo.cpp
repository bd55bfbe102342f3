#include "braidwire/cyclo.hpp"

#include <sstream>
#include <stdexcept>

namespace braidwire {

namespace {

bool all_even(const std::array<BigInt, 4>& n) {
    for (const auto& v : n) {
        if (v % 2 != 0) return false;
    }
    return true;
}

}  // namespace

void CycloValue::canonicalize() {
    if (num_[0] == 0 && num_[1] == 0 && num_[2] == 0 && num_[3] == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && all_even(num_)) {
        for (auto& v : num_) v /= 2;
        --exp_;
    }
}

CycloValue CycloValue::zeta_pow(int e) {
    int r = ((e % 8) + 8) % 8;
    CycloValue v;
    BigInt sign = (r < 4) ? 1 : -1;
    std::array<BigInt, 4> n{0, 0, 0, 0};
    n[static_cast<size_t>(r % 4)] = sign;
    return CycloValue(n[0], n[1], n[2], n[3]);
}

bool CycloValue::is_zero() const {
    return num_[0] == 0 && num_[1] == 0 && num_[2] == 0 && num_[3] == 0;
}

bool CycloValue::is_unit_modulus() const {
    return (*this * conj(*this)).is_one();
}

CycloValue CycloValue::operator-() const {
    return CycloValue(-num_[0], -num_[1], -num_[2], -num_[3], exp_);
}

CycloValue CycloValue::operator+(const CycloValue& rhs) const {
    unsigned k = std::max(exp_, rhs.exp_);
    BigInt la = BigInt(1) << (k - exp_);
    BigInt lb = BigInt(1) << (k - rhs.exp_);
    return CycloValue(num_[0] * la + rhs.num_[0] * lb,
                      num_[1] * la + rhs.num_[1] * lb,
                      num_[2] * la + rhs.num_[2] * lb,
                      num_[3] * la + rhs.num_[3] * lb, k);
}

CycloValue CycloValue::operator-(const CycloValue& rhs) const {
    return *this + (-rhs);
}

CycloValue CycloValue::operator*(const CycloValue& rhs) const {
    // Negacyclic convolution: zeta^4 = -1 folds degree 4..6 back with a
    // sign flip.
    const auto& a = num_;
    const auto& b = rhs.num_;
    BigInt r0 = a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1];
    BigInt r1 = a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2];
    BigInt r2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3];
    BigInt r3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0];
    return CycloValue(std::move(r0), std::move(r1), std::move(r2),
                      std::move(r3), exp_ + rhs.exp_);
}

CycloValue CycloValue::halved() const {
    return CycloValue(num_[0], num_[1], num_[2], num_[3], exp_ + 1);
}

std::string CycloValue::str() const {
    static const char* powers[] = {"", "ζ", "ζ²",
                                   "ζ³"};
    std::string terms;
    for (int k = 0; k < 4; ++k) {
        if (num_[static_cast<size_t>(k)] == 0) continue;
        BigInt coeff = num_[static_cast<size_t>(k)];
        std::string sign = coeff < 0 ? "-" : "+";
        if (coeff < 0) coeff = -coeff;
        if (!terms.empty())
            terms += " " + sign + " ";
        else if (sign == "-")
            terms += "-";
        if (coeff != 1 || k == 0) terms += coeff.str();
        if (coeff != 1 && k != 0) terms += "·";
        terms += powers[k];
    }
    if (terms.empty()) return "0";
    if (exp_ == 0) return terms;
    std::string denom = "/" + BigInt(BigInt(1) << exp_).str();
    if (terms.find(' ') != std::string::npos) return "(" + terms + ")" + denom;
    return terms + denom;
}

Json CycloValue::to_json() const {
    Json j;
    j["num"] = {num_[0].str(), num_[1].str(), num_[2].str(), num_[3].str()};
    j["exp"] = exp_;
    return j;
}

std::pair<double, double> CycloValue::to_complex() const {
    const double irt2 = 0.7071067811865475244;
    double scale = 1.0;
    for (unsigned e = 0; e < exp_; ++e) scale /= 2.0;
    double c0 = static_cast<double>(num_[0]);
    double c1 = static_cast<double>(num_[1]);
    double c2 = static_cast<double>(num_[2]);
    double c3 = static_cast<double>(num_[3]);
    double re = (c0 + (c1 - c3) * irt2) * scale;
    double im = (c2 + (c1 + c3) * irt2) * scale;
    return {re, im};
}

CycloValue conj(const CycloValue& v) {
    return CycloValue(v.num(0), -v.num(3), -v.num(2), -v.num(1),
                      v.exponent());
}

CycloMatrix CycloMatrix::identity(size_t dim) {
    CycloMatrix m(dim);
    for (size_t r = 0; r < dim; ++r) m.at(r, r) = CycloValue::one();
    return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::domain_error("matrix product: dimension mismatch");
    CycloMatrix out(dim_);
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t k = 0; k < dim_; ++k) {
            const CycloValue& v = at(r, k);
            if (v.is_zero()) continue;
            for (size_t c = 0; c < dim_; ++c) {
                if (rhs.at(k, c).is_zero()) continue;
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

CycloMatrix CycloMatrix::operator*(const CycloValue& s) const {
    CycloMatrix out(dim_);
    for (size_t r = 0; r < dim_; ++r)
        for (size_t c = 0; c < dim_; ++c) out.at(r, c) = at(r, c) * s;
    return out;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::domain_error("matrix sum: dimension mismatch");
    CycloMatrix out(dim_);
    for (size_t idx = 0; idx < a_.size(); ++idx) out.a_[idx] = a_[idx] + rhs.a_[idx];
    return out;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::domain_error("matrix difference: dimension mismatch");
    CycloMatrix out(dim_);
    for (size_t idx = 0; idx < a_.size(); ++idx) out.a_[idx] = a_[idx] - rhs.a_[idx];
    return out;
}

bool CycloMatrix::is_identity() const {
    for (size_t r = 0; r < dim_; ++r)
        for (size_t c = 0; c < dim_; ++c)
            if (at(r, c) != (r == c ? CycloValue::one() : CycloValue::zero()))
                return false;
    return true;
}

bool CycloMatrix::is_unitary() const {
    return (adjoint(*this) * *this).is_identity();
}

std::string CycloMatrix::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < dim_; ++r) {
        out << "[ ";
        for (size_t c = 0; c < dim_; ++c) {
            out << at(r, c).str();
            if (c + 1 < dim_) out << " | ";
        }
        out << " ]\n";
    }
    return out.str();
}

Json CycloMatrix::to_json() const {
    Json rows = Json::array();
    for (size_t r = 0; r < dim_; ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < dim_; ++c) row.push_back(at(r, c).to_json());
        rows.push_back(row);
    }
    return rows;
}

CycloMatrix adjoint(const CycloMatrix& m) {
    CycloMatrix out(m.dim());
    for (size_t r = 0; r < m.dim(); ++r)
        for (size_t c = 0; c < m.dim(); ++c) out.at(c, r) = conj(m.at(r, c));
    return out;
}

CycloMatrix tensor(const CycloMatrix& a, const CycloMatrix& b) {
    CycloMatrix out(a.dim() * b.dim());
    for (size_t ra = 0; ra < a.dim(); ++ra)
        for (size_t ca = 0; ca < a.dim(); ++ca) {
            if (a.at(ra, ca).is_zero()) continue;
            for (size_t rb = 0; rb < b.dim(); ++rb)
                for (size_t cb = 0; cb < b.dim(); ++cb)
                    out.at(ra * b.dim() + rb, ca * b.dim() + cb) =
                        a.at(ra, ca) * b.at(rb, cb);
        }
    return out;
}

}  // namespace braidwire
