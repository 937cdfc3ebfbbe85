#include "wittconics/quadfields.hpp"

#include <stdexcept>

namespace wittconics {

QuadraticField QuadraticField::of(const Int& d) {
    if (d == 0 || d == 1) throw std::domain_error("quadratic field: d must not be 0 or 1");
    if (!is_squarefree(d)) throw std::domain_error("quadratic field: d must be squarefree");
    return QuadraticField{d};
}

Int discriminant_of(const Int& d) {
    QuadraticField::of(d);
    return math_mod(d, 4) == 1 ? d : 4 * d;
}

int ramified_count(const Int& d) {
    return static_cast<int>(factorize(discriminant_of(d)).size());
}

bool is_sum_two_squares(const Int& d) {
    if (d <= 0) throw std::domain_error("is_sum_two_squares: d must be positive");
    QuadraticField::of(d);
    for (const auto& [p, e] : factorize(d))
        if (math_mod(p, 4) == 3) return false;
    return true;
}

int class_group_2rank(const Int& d) {
    QuadraticField::of(d);
    int n = ramified_count(d);
    if (d > 0 && !is_sum_two_squares(d)) return n - 2;
    return n - 1;
}

ClassGroupData imaginary_class_group_oracle(const Int& d, const Int& max_abs_d) {
    QuadraticField::of(d);
    if (d >= 0) throw std::domain_error("imaginary_class_group_oracle: d must be negative");
    if (-d > max_abs_d) throw std::length_error("imaginary_class_group_oracle: |d| above the configured bound");
    const Int D = discriminant_of(d);
    ClassGroupData out;
    out.order = 0;
    int ambiguous = 0;
    // Reduced positive definite primitive forms: |b| <= a <= c with b >= 0
    // when |b| = a or a = c. Each class has exactly one, and the class is
    // self-inverse exactly at the boundary cases.
    for (Int a = 1; 3 * a * a <= -D; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (math_mod(b, 2) != math_mod(D, 2)) continue;
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;  // (a,-b,a) reduces to (a,b,a)
            if (boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c) != 1) continue;
            out.representatives.push_back({a, b, c});
            ++out.order;
            if (b == 0 || b == a || a == c) ++ambiguous;
        }
    }
    int rank = 0;
    int count = ambiguous;
    while (count > 1) {
        if (count % 2 != 0) throw std::logic_error("imaginary_class_group_oracle: 2-torsion count not a power of 2");
        count /= 2;
        ++rank;
    }
    if (ambiguous == 0) throw std::logic_error("imaginary_class_group_oracle: principal class missing");
    out.two_rank = rank;
    return out;
}

int vk_2rank(const Int& d) {
    QuadraticField::of(d);
    int r1r2 = d > 0 ? 2 : 1;
    return r1r2 + class_group_2rank(d);
}

std::vector<Int> distinct_2rank_family(int count) {
    if (count < 1) throw std::domain_error("distinct_2rank_family: count must be >= 1");
    std::vector<Int> out;
    Int d = 1;
    Int p = 5;
    for (int j = 0; j < count; ++j) {
        while (math_mod(p, 4) != 1 || !is_prime(p)) ++p;
        d *= p;
        ++p;
        out.push_back(d);
    }
    return out;
}

bool rational_function_field_inequiv(const Int& d1, const Int& d2) {
    QuadraticField::of(d1);
    QuadraticField::of(d2);
    if ((d1 > 0) != (d2 > 0)) return true;  // real embedding counts differ
    return class_group_2rank(d1) != class_group_2rank(d2);
}

const std::vector<RealQuadraticEntry>& real_quadratic_validation_table() {
    // Wide class numbers and fundamental unit norms of Q(sqrt(d)) from the
    // standard published tables of real quadratic fields (cross-checked
    // against the LMFDB). two_rank is the 2-rank of the wide class group.
    static const std::vector<RealQuadraticEntry> table = {
        {2, 1, 0, -1},  {3, 1, 0, 1},  {5, 1, 0, -1},  {6, 1, 0, 1},   {7, 1, 0, 1},
        {10, 2, 1, -1}, {11, 1, 0, 1}, {13, 1, 0, -1}, {14, 1, 0, 1},  {15, 2, 1, 1},
        {30, 2, 1, 1},  {34, 2, 1, 1}, {65, 2, 1, -1},
    };
    return table;
}

} // namespace wittconics
