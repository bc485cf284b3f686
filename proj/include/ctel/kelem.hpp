#ifndef CTEL_KELEM_HPP
#define CTEL_KELEM_HPP

#include "ctel/mpoly.hpp"

namespace ctel {

// Element of K = Q(t_1,...,t_e), kept in lowest terms with a canonical
// denominator: primitive integer coefficients and positive leading
// coefficient. Zero is 0/1.
class KElem {
public:
    KElem() : num_(0), den_(MPoly::constant(0, Rat(1))) {}
    explicit KElem(int nvars)
        : num_(nvars), den_(MPoly::constant(nvars, Rat(1))) {}
    KElem(MPoly num, MPoly den);
    explicit KElem(MPoly num);

    static KElem constant(int nvars, const Rat& c) { return KElem(MPoly::constant(nvars, c)); }
    static KElem variable(int nvars, int i) { return KElem(MPoly::variable(nvars, i)); }
    static KElem one(int nvars) { return constant(nvars, Rat(1)); }

    int nvars() const { return num_.nvars(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat rational_value() const { return num_.constant_value() / den_.constant_value(); }

    KElem operator-() const;
    KElem operator+(const KElem& o) const;
    KElem operator-(const KElem& o) const;
    KElem operator*(const KElem& o) const;
    KElem operator/(const KElem& o) const;
    KElem& operator+=(const KElem& o) { return *this = *this + o; }
    KElem& operator-=(const KElem& o) { return *this = *this - o; }
    KElem& operator*=(const KElem& o) { return *this = *this * o; }
    KElem& operator/=(const KElem& o) { return *this = *this / o; }
    KElem inv() const;

    bool operator==(const KElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const KElem& o) const { return !(*this == o); }

    KElem derivative(int i) const;   // d/dt_i (quotient rule)
    KElem shifted(int i) const;      // t_i -> t_i + 1
    Rat eval(const std::vector<Rat>& point) const;  // throws BadPointError

private:
    MPoly num_, den_;
    void normalize();
};

enum class KOp { Add, Sub, Mul, Div };

// Spec-level arithmetic entry point; Div throws on zero divisor.
KElem k_arith(const KElem& a, const KElem& b, KOp op);

} // namespace ctel

#endif
