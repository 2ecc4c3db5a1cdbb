#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

namespace crossact {

using Rational = mpq_class;
using IntPoly = std::vector<mpz_class>;  // low degree first

Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);  // always "p/q"

// Phi_N, memoized.
const IntPoly& cyclotomic_polynomial(int N);
int euler_phi(int N);
long gcd_l(long a, long b);
long lcm_l(long a, long b);

// An element of Q(zeta_N) in the power basis 1, z, ..., z^{d-1}, d = deg Phi_N.
class Cyclotomic {
public:
    Cyclotomic();  // zero in Q(zeta_1)
    Cyclotomic(long value);  // NOLINT: integers convert implicitly
    Cyclotomic(const Rational& value, int N = 1);
    Cyclotomic(int N, std::vector<Rational> coeffs);  // reduces mod Phi_N

    static Cyclotomic root_of_unity(int N, long k);

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    Cyclotomic embed(int M) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b);
    Cyclotomic& operator-=(const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

private:
    int n_;
    std::vector<Rational> c_;
};

enum class ArithOp { add, sub, mul, div };
Cyclotomic arith(ArithOp op, const Cyclotomic& a, const Cyclotomic& b);

// Smallest k in [0, M) with a == zeta_M^k, or -1.
long root_exponent(const Cyclotomic& a, int M);

nlohmann::json to_json(const Cyclotomic& a);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

}  // namespace crossact
