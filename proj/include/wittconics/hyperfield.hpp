#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wittconics {

using Elem = std::uint32_t;
/// Sorted, duplicate-free set of element indices.
using ElemSet = std::vector<Elem>;

bool set_contains(const ElemSet& s, Elem x);
ElemSet set_insert(ElemSet s, Elem x);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
bool set_subset(const ElemSet& a, const ElemSet& b);

/// A finite hyperfield given by explicit tables. Index 0 is the zero
/// element by convention; addition is multivalued (non-empty sets).
struct FiniteHyperfield {
    std::vector<std::string> elements;
    Elem one = 1;
    std::vector<Elem> neg;
    std::vector<std::vector<Elem>> mul;
    std::vector<std::vector<ElemSet>> add;

    std::size_t size() const { return elements.size(); }
    ElemSet carrier() const;
    ElemSet nonzero() const;

    /// Structural validation: total tables, indices in range, non-empty
    /// addition sets, neg an involution fixing 0. Throws
    /// std::invalid_argument; distinct from axiom violations.
    void validate() const;

    bool operator==(const FiniteHyperfield&) const = default;
};

/// Table equality ignoring element labels (labels are display only).
bool same_structure(const FiniteHyperfield& H1, const FiniteHyperfield& H2);

/// A subgroup of H^*: contains 1, closed under products and inverses.
struct SubgroupSelection {
    ElemSet members;

    static SubgroupSelection of(const FiniteHyperfield& H, ElemSet members);
    static SubgroupSelection trivial(const FiniteHyperfield& H);
    static SubgroupSelection full(const FiniteHyperfield& H);
};

struct MorphismTable {
    FiniteHyperfield source;
    FiniteHyperfield target;
    std::vector<Elem> map;

    void validate() const;
};

struct AxiomViolation {
    std::string axiom;          // "I(1)".."I(4)", "II(1)".."II(3)", "III", "IV", "V"
    std::vector<Elem> witness;  // the offending tuple
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks axioms (I)(1)-(4), (II)(1)-(3), (III), (IV), (V). At most one
/// witness is reported per axiom label. Axiom (IV) is checked as the
/// stated one-sided inclusion.
AxiomReport verify_axioms(const FiniteHyperfield& H);

/// Quotient hyperfield H /_m T: classes of "a ~ b iff as = bt for s,t in T",
/// with c' in a'+b' iff cs in at+bu for some s,t,u in T.
FiniteHyperfield quotient(const FiniteHyperfield& H, const SubgroupSelection& T);

/// The canonical projection H -> quotient(H, T).
MorphismTable quotient_map(const FiniteHyperfield& H, const SubgroupSelection& T);

/// Prime of H: addition unchanged when a summand is 0; joined with {a,b}
/// when a,b != 0 and b != -a; the whole carrier when b = -a.
FiniteHyperfield prime(const FiniteHyperfield& H);

struct MorphismCheck {
    bool morphism = false;
    bool isomorphism = false;
};

/// Checks the five morphism conditions at every tuple; the isomorphism
/// flag additionally requires bijectivity and a morphism inverse.
MorphismCheck is_morphism(const MorphismTable& f);

/// Complete list of hyperfield isomorphisms H1 -> H2. Empty result proves
/// non-isomorphism. Backtracking fixes 0, 1, -1 first.
std::vector<MorphismTable> find_isomorphisms(const FiniteHyperfield& H1, const FiniteHyperfield& H2,
                                             std::size_t max_nonzero = 16);

/// T-rigidity of x != 0: every t1 + t2*x lands in T, Tx or {0}.
bool is_rigid(const FiniteHyperfield& H, const SubgroupSelection& T, Elem x);

/// B(T) = { x != 0 : x or -x is not T-rigid }; checked to be a union of
/// cosets of T.
ElemSet basic_part(const FiniteHyperfield& H, const SubgroupSelection& T);

/// T exceptional: +-T = B(T), and -1 in T or T additively closed
/// (here (a+b)\{0} contained in T for all a,b in T).
bool is_exceptional(const FiniteHyperfield& H, const SubgroupSelection& T);

/// f surjective with f(c) in f(a)+f(b) iff cs in at+bu for s,t,u in the
/// kernel-of-1 subgroup. Precondition: f is a morphism.
bool is_quotient_morphism(const MorphismTable& f);

/// f injective, every non-image x rigid (1+x contained in {1,x}), and
/// f(1+y) = 1+f(y) for y != -1. Precondition: f is a morphism.
bool is_group_extension(const MorphismTable& f);

} // namespace wittconics
