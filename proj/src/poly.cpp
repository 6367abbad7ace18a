#include "ccode/poly.hpp"

namespace ccode {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Fq> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Fq& s, const Poly& a) {
    std::vector<Fq> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Fq> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return Poly();
    if (k < 0) throw UsageError("negative shift");
    std::vector<Fq> c(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = a;
    Poly quo;
    Fq lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        Fq c = rem.leading() * lead_inv;
        int d = rem.deg() - b.deg();
        Poly term = Poly::monomial(c, d);
        quo += term;
        rem -= term * b;
    }
    return {quo, rem};
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= deg(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c_[i].str();
        } else {
            if (c_[i].idx() != 1) out += c_[i].str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return monic(a);
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a.leading().inv() * a;
}

Poly reciprocal_to_degree(const Poly& a, int d) {
    if (a.deg() > d) throw PreconditionError("reciprocal degree smaller than polynomial degree");
    std::vector<Fq> c(d + 1);
    for (int i = 0; i <= a.deg(); ++i) c[d - i] = a.coeff(i);
    return Poly(std::move(c));
}

} // namespace ccode
