#include "wittconics/numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cctype>

namespace wittconics {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

[[noreturn]] void bad_token(std::string_view token, const char* what) {
    throw std::invalid_argument(std::string(what) + ": '" + std::string(token) + "'");
}

} // namespace

Int parse_integer(std::string_view token) {
    std::string_view body = token;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!all_digits(body)) bad_token(token, "malformed integer");
    return Int(std::string(token));
}

Rat parse_rational(std::string_view token) {
    auto slash = token.find('/');
    if (slash != std::string_view::npos) {
        if (token.find('/', slash + 1) != std::string_view::npos) bad_token(token, "malformed rational");
        Int num = parse_integer(token.substr(0, slash));
        Int den = parse_integer(token.substr(slash + 1));
        if (den == 0) bad_token(token, "zero denominator");
        return Rat(num) / Rat(den);
    }
    auto dot = token.find('.');
    if (dot != std::string_view::npos) {
        std::string_view frac = token.substr(dot + 1);
        if (!all_digits(frac)) bad_token(token, "malformed decimal");
        std::string whole(token.substr(0, dot));
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int head = parse_integer(whole.empty() || whole == "+" || whole == "-" ? whole + "0" : whole);
        Int tail = parse_integer(frac);
        bool negative = !whole.empty() && whole.front() == '-';
        Int num = head * scale + (negative ? -tail : tail);
        return Rat(num, scale);
    }
    return Rat(parse_integer(token));
}

Int math_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += boost::multiprecision::abs(m);
    return r;
}

Int pow_mod(Int base, Int exp, const Int& mod) {
    return boost::multiprecision::powm(math_mod(base, mod), exp, mod);
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = math_mod(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return math_mod(s0, m);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 32);
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n == 0) throw std::domain_error("factorize: zero has no factorization");
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n && p <= 1000000; p += (p % 6 == 5) ? 2 : 4) strip(p);
    if (n > 1) {
        if (auto r = perfect_square_root(n)) {
            if (is_prime(*r)) {
                out.emplace_back(*r, 2);
                return out;
            }
        }
        if (!is_prime(n)) throw std::length_error("factorize: cofactor beyond desk scale");
        out.emplace_back(n, 1);
    }
    return out;
}

std::pair<int, Int> squarefree_kernel(const Int& n) {
    if (n == 0) throw std::domain_error("squarefree_kernel: zero input");
    int sign = n < 0 ? -1 : 1;
    Int core = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) core *= p;
    return {sign, core};
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

int legendre_symbol(const Int& a, const Int& p) {
    Int r = math_mod(a, p);
    if (r == 0) return 0;
    Int s = pow_mod(r, (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

Int least_nonresidue(const Int& p) {
    for (Int u = 2; u < p; ++u)
        if (legendre_symbol(u, p) == -1) return u;
    throw std::domain_error("least_nonresidue: no non-residue (p must be an odd prime > 2)");
}

long valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation: zero input");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

long rat_valuation(const Rat& r, const Int& p) {
    if (r == 0) throw std::domain_error("rat_valuation: zero input");
    return valuation(numerator(r), p) - valuation(denominator(r), p);
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

std::optional<Int> perfect_square_root(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

long long to_ll(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::length_error("integer beyond machine range");
    return n.convert_to<long long>();
}

PolyQ poly_trim(PolyQ f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PolyQ poly_add(const PolyQ& f, const PolyQ& g) {
    PolyQ out(std::max(f.size(), g.size()), Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
    return poly_trim(std::move(out));
}

PolyQ poly_sub(const PolyQ& f, const PolyQ& g) {
    return poly_add(f, poly_scale(g, Rat(-1)));
}

PolyQ poly_mul(const PolyQ& f, const PolyQ& g) {
    if (f.empty() || g.empty()) return {};
    PolyQ out(f.size() + g.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return poly_trim(std::move(out));
}

PolyQ poly_scale(const PolyQ& f, const Rat& c) {
    PolyQ out = f;
    for (auto& x : out) x *= c;
    return poly_trim(std::move(out));
}

bool poly_is_zero(const PolyQ& f) {
    return poly_trim(f).empty();
}

} // namespace wittconics
