#include "sonc/magnitude.hpp"

#include <cmath>

#include "sonc/json_writer.hpp"

namespace sonc {

namespace {

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xB5297A4Dul);
    while (true) {
        Integer x = rng.get_z_range(n - 2) + 2;
        Integer y = x;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    for (Integer p(2); p * p <= n && p < 100000; p = (p == 2 ? Integer(3) : p + 2)) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factorize(Integer n) {
    if (n < 1) throw DomainError("factorize expects a positive integer");
    std::map<Integer, int> acc;
    if (n > 1) factor_into(std::move(n), acc);
    return {acc.begin(), acc.end()};
}

ExactMagnitude ExactMagnitude::from_rational(const Rational& q) {
    if (q <= 0) throw DomainError("magnitude must be positive");
    ExactMagnitude m;
    for (const auto& [p, e] : factorize(q.get_num())) m.factors_[p] += e;
    for (const auto& [p, e] : factorize(q.get_den())) m.factors_[p] -= e;
    std::erase_if(m.factors_, [](const auto& kv) { return kv.second == 0; });
    return m;
}

ExactMagnitude ExactMagnitude::pow(const Rational& e) const {
    ExactMagnitude m;
    if (e == 0) return m;
    for (const auto& [p, x] : factors_) m.factors_[p] = x * e;
    return m;
}

ExactMagnitude ExactMagnitude::operator*(const ExactMagnitude& other) const {
    ExactMagnitude m = *this;
    for (const auto& [p, x] : other.factors_) {
        m.factors_[p] += x;
        if (m.factors_[p] == 0) m.factors_.erase(p);
    }
    return m;
}

ExactMagnitude ExactMagnitude::inverse() const { return pow(Rational(-1)); }

bool ExactMagnitude::as_rational(Rational* out) const {
    Rational r(1);
    for (const auto& [p, e] : factors_) {
        if (e.get_den() != 1) return false;
        if (!e.get_num().fits_slong_p()) return false;
        r *= rational_pow(Rational(p), e.get_num().get_si());
    }
    if (out) *out = r;
    return true;
}

double ExactMagnitude::to_double() const {
    double v = 1.0;
    for (const auto& [p, e] : factors_) v *= std::pow(p.get_d(), e.get_d());
    return v;
}

std::string ExactMagnitude::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("factors").begin_object();
    for (const auto& [p, e] : factors_) w.key(p.get_str()).value(to_string(e));
    w.end_object();
    w.key("float").value_double(to_double());
    w.end_object();
    return w.str();
}

}  // namespace sonc
