#include "wittconics/localglobal.hpp"

#include <algorithm>
#include <map>

namespace wittconics {

SquareClassQ square_class(const Rat& r) {
    if (r == 0) throw std::domain_error("square_class: zero has no square class");
    auto [sign, core] = squarefree_kernel(numerator(r) * denominator(r));
    return SquareClassQ{sign, core};
}

Place Place::at_infinity() {
    Place v;
    v.infinite = true;
    return v;
}

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw std::domain_error("place: not a prime");
    Place v;
    v.p = p;
    return v;
}

std::string Place::str() const {
    return infinite ? "inf" : p.str();
}

std::strong_ordering Place::operator<=>(const Place& o) const {
    if (infinite != o.infinite) return infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    if (p < o.p) return std::strong_ordering::less;
    if (p > o.p) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

// Unit part of r at p, reduced to a residue: mod p for odd p, mod 8 for p = 2.
Int unit_residue(const Rat& r, const Int& p, const Int& modulus) {
    long v = rat_valuation(r, p);
    Rat u = r;
    Int pw = boost::multiprecision::pow(p, static_cast<unsigned>(v < 0 ? -v : v));
    if (v >= 0)
        u /= pw;
    else
        u *= pw;
    Int num = math_mod(numerator(u), modulus);
    Int den = math_mod(denominator(u), modulus);
    if (p == 2) return math_mod(num * den, modulus);  // den^2 = 1 mod 8
    return math_mod(num * pow_mod(den, p - 2, p), p);
}

int eps2(const Int& m8) {  // (u-1)/2 mod 2 from u mod 8
    return (m8 == 3 || m8 == 7) ? 1 : 0;
}

int omega2(const Int& m8) {  // (u^2-1)/8 mod 2 from u mod 8
    return (m8 == 3 || m8 == 5) ? 1 : 0;
}

} // namespace

PadicSquareClass padic_square_class(const Rat& r, const Int& p) {
    if (r == 0) throw std::domain_error("padic_square_class: zero input");
    if (!is_prime(p)) throw std::domain_error("padic_square_class: p must be prime");
    long v = rat_valuation(r, p);
    bool odd_val = ((v % 2) + 2) % 2 == 1;
    if (p == 2) {
        Int m = unit_residue(r, p, 8);
        Int unit_rep = m == 1 ? Int(1) : m == 3 ? Int(-5) : m == 5 ? Int(5) : Int(-1);
        return PadicSquareClass{p, odd_val ? 2 * unit_rep : unit_rep};
    }
    Int res = unit_residue(r, p, p);
    Int unit_rep = legendre_symbol(res, p) == 1 ? Int(1) : least_nonresidue(p);
    return PadicSquareClass{p, odd_val ? p * unit_rep : unit_rep};
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: arguments must be non-zero");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p;
    int alpha = static_cast<int>(((rat_valuation(a, p) % 2) + 2) % 2);
    int beta = static_cast<int>(((rat_valuation(b, p) % 2) + 2) % 2);
    if (p == 2) {
        Int mu = unit_residue(a, p, 8);
        Int mw = unit_residue(b, p, 8);
        int e = eps2(mu) * eps2(mw) + alpha * omega2(mw) + beta * omega2(mu);
        return e % 2 ? -1 : 1;
    }
    Int ru = unit_residue(a, p, p);
    Int rw = unit_residue(b, p, p);
    int s = 1;
    if (alpha && beta) s *= legendre_symbol(p - 1, p);
    if (beta) s *= legendre_symbol(ru, p);
    if (alpha) s *= legendre_symbol(rw, p);
    return s;
}

namespace {

std::vector<Place> candidate_places(const Rat& a, const Rat& b) {
    std::vector<Place> out{Place::finite(2)};
    Int product = square_class(a).core * square_class(b).core;
    for (const auto& [p, e] : factorize(product))
        if (p != 2) out.push_back(Place::finite(p));
    out.push_back(Place::at_infinity());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool reciprocity_check(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw std::domain_error("reciprocity_check: arguments must be non-zero");
    int product = 1;
    for (const Place& v : candidate_places(a, b)) product *= hilbert_symbol(a, b, v);
    return product == 1;
}

RamificationSet quaternion_ramification(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw std::domain_error("quaternion_ramification: arguments must be non-zero");
    RamificationSet ram;
    for (const Place& v : candidate_places(a, b))
        if (hilbert_symbol(a, b, v) == -1) ram.places.push_back(v);
    if (!ram.even_cardinality()) throw std::logic_error("quaternion_ramification: reciprocity violated");
    return ram;
}

bool represents(const Rat& a, const Rat& b, const Rat& c, const std::optional<Place>& at) {
    if (a == 0 || b == 0 || c == 0) throw std::domain_error("represents: arguments must be non-zero");
    if (at) return hilbert_symbol(a * c, b * c, *at) == 1;
    return quaternion_ramification(a * c, b * c).empty();
}

namespace {

Int local_canonical(const Int& value, const Place& v) {
    if (v.infinite) return value < 0 ? Int(-1) : Int(1);
    return padic_square_class(Rat(value), v.p).rep;
}

} // namespace

std::vector<Int> local_class_representatives(const Place& v) {
    if (v.infinite) return {Int(1), Int(-1)};
    if (v.p == 2) return {Int(1), Int(-1), Int(2), Int(-2), Int(5), Int(-5), Int(10), Int(-10)};
    Int u = least_nonresidue(v.p);
    return {Int(1), u, v.p, u * v.p};
}

FiniteHyperfield local_square_class_hyperfield(const Place& v) {
    std::vector<Int> reps = local_class_representatives(v);
    const Elem n = static_cast<Elem>(reps.size() + 1);
    auto index_of = [&](const Int& rep) -> Elem {
        for (Elem i = 0; i < reps.size(); ++i)
            if (reps[i] == rep) return i + 1;
        throw std::logic_error("local hyperfield: representative not canonical");
    };
    FiniteHyperfield H;
    H.elements.resize(n);
    H.elements[0] = "0";
    for (Elem i = 1; i < n; ++i) H.elements[i] = reps[i - 1].str();
    H.one = index_of(1);
    H.neg.resize(n);
    H.neg[0] = 0;
    for (Elem i = 1; i < n; ++i) H.neg[i] = index_of(local_canonical(-reps[i - 1], v));
    H.mul.assign(n, std::vector<Elem>(n, 0));
    for (Elem i = 1; i < n; ++i)
        for (Elem j = 1; j < n; ++j) H.mul[i][j] = index_of(local_canonical(reps[i - 1] * reps[j - 1], v));
    H.add.assign(n, std::vector<ElemSet>(n));
    for (Elem j = 0; j < n; ++j) {
        H.add[0][j] = {j};
        H.add[j][0] = {j};
    }
    for (Elem i = 1; i < n; ++i) {
        for (Elem j = 1; j < n; ++j) {
            ElemSet sum;
            if (j == H.neg[i]) sum.push_back(0);
            for (Elem k = 1; k < n; ++k)
                if (hilbert_symbol(Rat(reps[i - 1] * reps[k - 1]), Rat(reps[j - 1] * reps[k - 1]), v) == 1)
                    sum.push_back(k);
            H.add[i][j] = std::move(sum);
        }
    }
    return H;
}

namespace {

// Arithmetic of F_q for small odd prime powers, elements encoded 0..q-1
// as base-p coefficient vectors.
struct SmallField {
    int p = 0, k = 1, q = 0;
    std::vector<int> modulus;  // monic irreducible of degree k (unused when k = 1)

    std::vector<int> digits(int x) const {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = x % p;
            x /= p;
        }
        return d;
    }

    int encode(const std::vector<int>& d) const {
        int x = 0;
        for (int i = k - 1; i >= 0; --i) x = x * p + d[i];
        return x;
    }

    int add(int x, int y) const {
        auto dx = digits(x), dy = digits(y);
        for (int i = 0; i < k; ++i) dx[i] = (dx[i] + dy[i]) % p;
        return encode(dx);
    }

    int neg(int x) const {
        auto d = digits(x);
        for (auto& c : d) c = (p - c) % p;
        return encode(d);
    }

    int mul(int x, int y) const {
        auto dx = digits(x), dy = digits(y);
        std::vector<int> prod(2 * k - 1, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
        for (int d = 2 * k - 2; d >= k; --d) {
            int lead = prod[d];
            if (lead == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - lead * modulus[i]) % p + p) % p;
        }
        prod.resize(k);
        return encode(prod);
    }
};

bool poly_divides(const std::vector<int>& g, std::vector<int> f, int p) {
    // g monic; returns g | f over F_p.
    int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
        int lead = f[d];
        if (lead == 0) continue;
        for (int i = 0; i <= dg; ++i) f[d - dg + i] = ((f[d - dg + i] - lead * g[i]) % p + p) % p;
    }
    return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

std::vector<int> find_irreducible(int p, int k) {
    // Monic degree-k poly with no monic factor of degree <= k/2.
    std::vector<std::vector<int>> small;
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int t = 0; t < count; ++t) {
            std::vector<int> g(d + 1, 0);
            int x = t;
            for (int i = 0; i < d; ++i) {
                g[i] = x % p;
                x /= p;
            }
            g[d] = 1;
            small.push_back(std::move(g));
        }
    }
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int t = 0; t < count; ++t) {
        std::vector<int> f(k + 1, 0);
        int x = t;
        for (int i = 0; i < k; ++i) {
            f[i] = x % p;
            x /= p;
        }
        f[k] = 1;
        bool reducible = false;
        for (const auto& g : small)
            if (poly_divides(g, f, p)) {
                reducible = true;
                break;
            }
        if (!reducible) return f;
    }
    throw std::logic_error("find_irreducible: none found");
}

SmallField make_small_field(const Int& q, const Int& max_q) {
    if (q > max_q) throw std::length_error("finite field: q above the configured bound");
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("finite field: q must be an odd prime power >= 3");
    auto factors = factorize(q);
    if (factors.size() != 1) throw std::invalid_argument("finite field: q must be a prime power");
    SmallField F;
    F.p = static_cast<int>(to_ll(factors[0].first));
    F.k = factors[0].second;
    F.q = static_cast<int>(to_ll(q));
    if (F.k > 1) F.modulus = find_irreducible(F.p, F.k);
    return F;
}

} // namespace

FiniteHyperfield finite_field_hyperfield(const Int& q, const Int& max_q) {
    SmallField F = make_small_field(q, max_q);
    FiniteHyperfield H;
    H.elements.resize(F.q);
    for (int i = 0; i < F.q; ++i) H.elements[i] = std::to_string(i);
    H.one = 1;
    H.neg.resize(F.q);
    H.mul.assign(F.q, std::vector<Elem>(F.q));
    H.add.assign(F.q, std::vector<ElemSet>(F.q));
    for (int i = 0; i < F.q; ++i) {
        H.neg[i] = static_cast<Elem>(F.neg(i));
        for (int j = 0; j < F.q; ++j) {
            H.mul[i][j] = static_cast<Elem>(F.mul(i, j));
            H.add[i][j] = {static_cast<Elem>(F.add(i, j))};
        }
    }
    return H;
}

FiniteHyperfield finite_field_quadratic_hyperfield(const Int& q, const Int& max_q) {
    SmallField F = make_small_field(q, max_q);
    std::vector<bool> is_square(F.q, false);
    for (int x = 1; x < F.q; ++x) is_square[F.mul(x, x)] = true;
    int u_elem = 0;
    for (int x = 1; x < F.q && u_elem == 0; ++x)
        if (!is_square[x]) u_elem = x;
    auto class_of = [&](int x) -> Elem { return x == 0 ? 0 : is_square[x] ? 1 : 2; };
    bool minus_one_square = is_square[F.neg(1)];

    FiniteHyperfield H;
    H.elements = {"0", "1", "u"};
    H.one = 1;
    H.neg = minus_one_square ? std::vector<Elem>{0, 1, 2} : std::vector<Elem>{0, 2, 1};
    H.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    H.add.assign(3, std::vector<ElemSet>(3));
    for (Elem j = 0; j < 3; ++j) {
        H.add[0][j] = {j};
        H.add[j][0] = {j};
    }
    const int reps[3] = {0, 1, u_elem};
    for (Elem A = 1; A < 3; ++A) {
        for (Elem B = 1; B < 3; ++B) {
            if (B == H.neg[A]) {
                H.add[A][B] = {0, 1, 2};
                continue;
            }
            ElemSet sum = set_insert(set_insert(ElemSet{}, A), B);  // prime addition includes the summands
            for (int x = 1; x < F.q; ++x)
                for (int y = 1; y < F.q; ++y) {
                    int s = F.add(F.mul(reps[A], F.mul(x, x)), F.mul(reps[B], F.mul(y, y)));
                    sum = set_insert(std::move(sum), class_of(s));
                }
            H.add[A][B] = std::move(sum);
        }
    }
    return H;
}

MorphismTable residue_embedding(const Int& p) {
    if (p == 2) throw std::invalid_argument("residue_embedding: residue characteristic 2 unsupported");
    if (!is_prime(p)) throw std::domain_error("residue_embedding: p must be an odd prime");
    MorphismTable f;
    f.source = finite_field_quadratic_hyperfield(p);
    f.target = local_square_class_hyperfield(Place::finite(p));
    f.map = {0, 1, 2};  // 0 -> 0, 1 -> 1, u -> unit non-residue class
    return f;
}

std::optional<Int> gauss_valuation(const PolyOverQ& f, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("gauss_valuation: p must be prime");
    std::optional<Int> v;
    for (const Rat& c : f) {
        if (c == 0) continue;
        Int vc = rat_valuation(c, p);
        if (!v || vc < *v) v = vc;
    }
    return v;
}

std::optional<Int> gauss_valuation(const PolyOverQ& num, const PolyOverQ& den, const Int& p) {
    auto vd = gauss_valuation(den, p);
    if (!vd) throw std::domain_error("gauss_valuation: zero denominator");
    auto vn = gauss_valuation(num, p);
    if (!vn) return std::nullopt;  // the zero function
    return *vn - *vd;
}

std::optional<int> local_level(const Place& v) {
    if (v.infinite) return std::nullopt;
    if (v.p == 2) return 4;
    return math_mod(v.p, 4) == 1 ? 1 : 2;
}

OracleHyperfield rational_quadratic_hyperfield() {
    OracleHyperfield H;
    H.canonical = [](const Rat& r) -> Rat { return r == 0 ? Rat(0) : Rat(square_class(r).value()); };
    H.mul = [H](const Rat& a, const Rat& b) -> Rat { return (a == 0 || b == 0) ? Rat(0) : H.canonical(a * b); };
    H.neg = [H](const Rat& a) -> Rat { return H.canonical(-a); };
    H.add_contains = [H](const Rat& c, const Rat& a, const Rat& b) -> bool {
        if (a == 0) return H.canonical(c) == H.canonical(b);
        if (b == 0) return H.canonical(c) == H.canonical(a);
        if (H.canonical(a) == H.canonical(-b)) return true;
        if (c == 0) return false;
        return represents(a, b, c);
    };
    return H;
}

OracleHyperfield local_quadratic_hyperfield_oracle(const Place& v) {
    OracleHyperfield H;
    H.canonical = [v](const Rat& r) -> Rat {
        if (r == 0) return Rat(0);
        if (v.infinite) return Rat(r < 0 ? -1 : 1);
        return Rat(padic_square_class(r, v.p).rep);
    };
    H.mul = [H](const Rat& a, const Rat& b) -> Rat { return (a == 0 || b == 0) ? Rat(0) : H.canonical(a * b); };
    H.neg = [H](const Rat& a) -> Rat { return H.canonical(-a); };
    H.add_contains = [H, v](const Rat& c, const Rat& a, const Rat& b) -> bool {
        if (a == 0) return H.canonical(c) == H.canonical(b);
        if (b == 0) return H.canonical(c) == H.canonical(a);
        if (H.canonical(a) == H.canonical(-b)) return true;
        if (c == 0) return false;
        return hilbert_symbol(a * c, b * c, v) == 1;
    };
    std::vector<Rat> carrier{Rat(0)};
    for (const Int& rep : local_class_representatives(v)) carrier.emplace_back(rep);
    H.carrier = std::move(carrier);
    return H;
}

FiniteHyperfield tabulate(const OracleHyperfield& O) {
    if (!O.carrier) throw std::invalid_argument("tabulate: infinite carrier");
    const auto& carrier = *O.carrier;
    const Elem n = static_cast<Elem>(carrier.size());
    auto index_of = [&](const Rat& r) -> Elem {
        for (Elem i = 0; i < n; ++i)
            if (carrier[i] == r) return i;
        throw std::invalid_argument("tabulate: carrier not closed");
    };
    FiniteHyperfield H;
    H.elements.resize(n);
    for (Elem i = 0; i < n; ++i) {
        Int num = numerator(carrier[i]);
        H.elements[i] = denominator(carrier[i]) == 1 ? num.str() : carrier[i].str();
    }
    H.one = index_of(O.canonical(Rat(1)));
    H.neg.resize(n);
    H.mul.assign(n, std::vector<Elem>(n));
    H.add.assign(n, std::vector<ElemSet>(n));
    for (Elem i = 0; i < n; ++i) {
        H.neg[i] = index_of(O.neg(carrier[i]));
        for (Elem j = 0; j < n; ++j) {
            H.mul[i][j] = index_of(O.mul(carrier[i], carrier[j]));
            ElemSet sum;
            for (Elem k = 0; k < n; ++k)
                if (O.add_contains(carrier[k], carrier[i], carrier[j])) sum.push_back(k);
            H.add[i][j] = std::move(sum);
        }
    }
    return H;
}

namespace oracle {

namespace {

// Membership bitmaps of {coeff * t^2 mod M}.
std::vector<bool> scaled_square_bitmap(long long coeff, long long M) {
    std::vector<bool> hit(M, false);
    for (long long t = 0; t <= M / 2; ++t) {
        long long s = (t * t) % M;
        hit[((coeff % M) * s % M + M) % M] = true;
    }
    return hit;
}

std::vector<long long> square_values(long long M) {
    std::vector<bool> seen(M, false);
    std::vector<long long> out;
    for (long long t = 0; t <= M / 2; ++t) {
        long long s = (t * t) % M;
        if (!seen[s]) {
            seen[s] = true;
            out.push_back(s);
        }
    }
    return out;
}

} // namespace

bool represents_local(const Rat& a, const Rat& b, const Rat& c, const Place& v) {
    if (a == 0 || b == 0 || c == 0) throw std::domain_error("represents_local: arguments must be non-zero");
    if (v.infinite) {
        if (c > 0) return a > 0 || b > 0;
        return a < 0 || b < 0;
    }
    // Reduce to canonical local representatives (valuation <= 1).
    long long A = to_ll(padic_square_class(a, v.p).rep);
    long long B = to_ll(padic_square_class(b, v.p).rep);
    long long C = to_ll(padic_square_class(c, v.p).rep);
    long long M = v.p == 2 ? 256 : to_ll(v.p * v.p * v.p);
    auto sq = square_values(M);
    auto b_sq = scaled_square_bitmap(B, M);
    auto c_sq = scaled_square_bitmap(C, M);
    auto mod = [M](long long x) { return ((x % M) + M) % M; };
    for (long long s : sq) {
        if (c_sq[mod(A + B * s)]) return true;   // x normalized to 1
        if (c_sq[mod(A * s + B)]) return true;   // y normalized to 1
        if (b_sq[mod(C - A * s)]) return true;   // z normalized to 1
    }
    return false;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    return represents_local(a, b, Rat(1), v) ? 1 : -1;
}

} // namespace oracle

} // namespace wittconics
