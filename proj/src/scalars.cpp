#include "crossact/scalars.hpp"

#include "crossact/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace crossact {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, b monic.
IntPoly div_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        mpz_class lead = a[k];
        q[k - db] = lead;
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= lead * b[i];
    }
    return q;
}

std::mutex phi_mutex;
std::map<int, IntPoly> phi_cache;

void reduce_mod(QPoly& p, const IntPoly& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) continue;
        Rational lead = p[k];
        for (std::size_t i = 0; i <= d; ++i) {
            if (phi[i] != 0) p[k - d + i] -= lead * phi[i];
        }
    }
    p.resize(d, 0);
}

// q, r with a = q b + r over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 1, 0);
    const Rational lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Rational f = r.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        trim(r);
    }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

int euler_phi(int N) { return static_cast<int>(cyclotomic_polynomial(N).size()) - 1; }

namespace {

const IntPoly& phi_locked(int N) {
    auto it = phi_cache.find(N);
    if (it != phi_cache.end()) return it->second;
    IntPoly p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = div_exact(p, phi_locked(d));
    return phi_cache.emplace(N, std::move(p)).first->second;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int N) {
    if (N < 1) throw ParseError("conductor must be positive, got " + std::to_string(N));
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_locked(N);
}

Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Cyclotomic::Cyclotomic() : n_(1), c_(1, 0) {}

Cyclotomic::Cyclotomic(long value) : n_(1), c_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value, int N) : n_(N) {
    c_.assign(euler_phi(N), 0);
    c_[0] = value;
}

Cyclotomic::Cyclotomic(int N, std::vector<Rational> coeffs) : n_(N), c_(std::move(coeffs)) {
    const IntPoly& phi = cyclotomic_polynomial(N);
    reduce_mod(c_, phi);
}

Cyclotomic Cyclotomic::root_of_unity(int N, long k) {
    long e = ((k % N) + N) % N;
    std::vector<Rational> c(e + 1, 0);
    c[e] = 1;
    return Cyclotomic(N, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::embed(int M) const {
    if (M < 1 || M % n_ != 0)
        throw ConductorMismatch("conductor " + std::to_string(n_) + " does not divide " + std::to_string(M));
    if (M == n_) return *this;
    const int step = M / n_;
    std::vector<Rational> c((c_.size() - 1) * step + 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) c[k * step] = c_[k];
    return Cyclotomic(M, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
    const IntPoly& phi = cyclotomic_polynomial(n_);
    QPoly r0(phi.begin(), phi.end());
    QPoly r1 = c_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly qs = poly_mul(q, s1);
        QPoly next(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) next[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
        trim(next);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // r0 is a nonzero constant because Phi_N is irreducible
    if (r0.size() != 1) throw InternalError("gcd with cyclotomic polynomial is not constant");
    for (auto& q : s0) q /= r0[0];
    return Cyclotomic(n_, std::move(s0));
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic out(Rational(1), n_);
    while (k) {
        if (k & 1) out *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

namespace {

std::pair<Cyclotomic, Cyclotomic> unify(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return {a, b};
    int m = static_cast<int>(lcm_l(a.conductor(), b.conductor()));
    return {a.embed(m), b.embed(m)};
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
        auto [x, y] = unify(a, b);
        return x + y;
    }
    Cyclotomic out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
        auto [x, y] = unify(a, b);
        return x - y;
    }
    Cyclotomic out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
        auto [x, y] = unify(a, b);
        return x * y;
    }
    if (a.c_.size() == 1) {
        Cyclotomic out = a;
        out.c_[0] *= b.c_[0];
        return out;
    }
    return Cyclotomic(a.n_, poly_mul(a.c_, b.c_));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) { return *this = *this + b; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this = *this - b; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    auto [x, y] = unify(a, b);
    return x.c_ == y.c_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c_[k].get_str();
        } else {
            if (c_[k] != 1) os << c_[k].get_str() << "*";
            os << "z" << n_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic arith(ArithOp op, const Cyclotomic& a, const Cyclotomic& b) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw InternalError("unknown arithmetic op");
}

long root_exponent(const Cyclotomic& a, int M) {
    for (long k = 0; k < M; ++k)
        if (a == Cyclotomic::root_of_unity(M, k)) return k;
    return -1;
}

nlohmann::json to_json(const Cyclotomic& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& q : a.coeffs()) coeffs.push_back(rational_string(q));
    return {{"N", a.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Cyclotomic(j.get<long>());
    if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
    if (!j.is_object()) throw ParseError("cyclotomic value must be an object, integer or rational string");
    if (j.contains("zeta")) {
        const auto& z = j.at("zeta");
        if (!z.is_array() || z.size() != 2) throw ParseError("zeta shorthand must be [N, k]");
        int N = z[0].get<int>();
        if (N < 1) throw ParseError("conductor must be positive");
        return Cyclotomic::root_of_unity(N, z[1].get<long>());
    }
    if (!j.contains("N") || !j.contains("coeffs")) throw ParseError("cyclotomic object needs N and coeffs");
    int N = j.at("N").get<int>();
    if (N < 1) throw ParseError("conductor must be positive");
    const auto& cs = j.at("coeffs");
    if (!cs.is_array()) throw ParseError("coeffs must be a list");
    std::vector<Rational> c;
    for (const auto& x : cs) {
        if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) c.push_back(Rational(x.get<long>()));
        else throw ParseError("coefficient must be a rational string");
    }
    if (c.empty()) c.push_back(0);
    return Cyclotomic(N, std::move(c));
}

}  // namespace crossact
