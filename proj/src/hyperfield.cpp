#include "wittconics/hyperfield.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wittconics {

bool set_contains(const ElemSet& s, Elem x) {
    return std::binary_search(s.begin(), s.end(), x);
}

ElemSet set_insert(ElemSet s, Elem x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) s.insert(it, x);
    return s;
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_subset(const ElemSet& a, const ElemSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool same_structure(const FiniteHyperfield& H1, const FiniteHyperfield& H2) {
    return H1.one == H2.one && H1.neg == H2.neg && H1.mul == H2.mul && H1.add == H2.add &&
           H1.size() == H2.size();
}

ElemSet FiniteHyperfield::carrier() const {
    ElemSet all(size());
    std::iota(all.begin(), all.end(), 0u);
    return all;
}

ElemSet FiniteHyperfield::nonzero() const {
    ElemSet out(size() > 0 ? size() - 1 : 0);
    std::iota(out.begin(), out.end(), 1u);
    return out;
}

void FiniteHyperfield::validate() const {
    const std::size_t n = size();
    if (n < 2) throw std::invalid_argument("hyperfield: carrier needs 0 and 1");
    if (one >= n || one == 0) throw std::invalid_argument("hyperfield: 'one' index out of range");
    if (neg.size() != n) throw std::invalid_argument("hyperfield: neg table not total");
    if (mul.size() != n || add.size() != n) throw std::invalid_argument("hyperfield: tables not total");
    for (std::size_t i = 0; i < n; ++i) {
        if (neg[i] >= n) throw std::invalid_argument("hyperfield: neg index out of range");
        if (mul[i].size() != n || add[i].size() != n) throw std::invalid_argument("hyperfield: row not total");
        for (std::size_t j = 0; j < n; ++j) {
            if (mul[i][j] >= n) throw std::invalid_argument("hyperfield: mul index out of range");
            const ElemSet& s = add[i][j];
            if (s.empty()) throw std::invalid_argument("hyperfield: empty addition set");
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (s[k] >= n) throw std::invalid_argument("hyperfield: add index out of range");
                if (k > 0 && s[k] <= s[k - 1]) throw std::invalid_argument("hyperfield: addition set not sorted");
            }
        }
    }
    if (neg[0] != 0) throw std::invalid_argument("hyperfield: neg(0) != 0");
    for (std::size_t i = 0; i < n; ++i)
        if (neg[neg[i]] != i) throw std::invalid_argument("hyperfield: neg not an involution");
}

SubgroupSelection SubgroupSelection::of(const FiniteHyperfield& H, ElemSet members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!set_contains(members, H.one)) throw std::invalid_argument("subgroup: must contain 1");
    for (Elem t : members) {
        if (t == 0 || t >= H.size()) throw std::invalid_argument("subgroup: members must be non-zero elements");
        bool has_inverse = false;
        for (Elem s : members) {
            if (!set_contains(members, H.mul[t][s])) throw std::invalid_argument("subgroup: not multiplicatively closed");
            if (H.mul[t][s] == H.one) has_inverse = true;
        }
        if (!has_inverse) throw std::invalid_argument("subgroup: missing inverse");
    }
    return SubgroupSelection{std::move(members)};
}

SubgroupSelection SubgroupSelection::trivial(const FiniteHyperfield& H) {
    return SubgroupSelection{{H.one}};
}

SubgroupSelection SubgroupSelection::full(const FiniteHyperfield& H) {
    return of(H, H.nonzero());
}

void MorphismTable::validate() const {
    source.validate();
    target.validate();
    if (map.size() != source.size()) throw std::invalid_argument("morphism: map not total");
    for (Elem y : map)
        if (y >= target.size()) throw std::invalid_argument("morphism: map index out of range");
}

AxiomReport verify_axioms(const FiniteHyperfield& H) {
    H.validate();
    const Elem n = static_cast<Elem>(H.size());
    AxiomReport report;
    auto found = [&](const std::string& axiom) {
        return std::any_of(report.violations.begin(), report.violations.end(),
                           [&](const AxiomViolation& v) { return v.axiom == axiom; });
    };
    auto flag = [&](const std::string& axiom, std::vector<Elem> witness) {
        if (!found(axiom)) report.violations.push_back({axiom, std::move(witness)});
    };

    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            // I(2): a in b+0 iff a = b
            bool in = set_contains(H.add[b][0], a);
            if (in != (a == b)) flag("I(2)", {a, b});
            // I(4)
            if (H.add[a][b] != H.add[b][a]) flag("I(4)", {a, b});
            // II(2), II(3), III
            if (H.mul[a][b] != H.mul[b][a]) flag("II(2)", {a, b});
            if (b == H.one && H.mul[a][b] != a) flag("II(3)", {a});
            if (b == 0 && H.mul[a][b] != 0) flag("III", {a});
            for (Elem c = 0; c < n; ++c) {
                // I(1): c in a+b => a in c+(-b)
                if (set_contains(H.add[a][b], c) && !set_contains(H.add[c][H.neg[b]], a)) flag("I(1)", {a, b, c});
                // I(3): (a+b)+c = a+(b+c)
                ElemSet lhs, rhs;
                for (Elem x : H.add[a][b]) lhs = set_union(lhs, H.add[x][c]);
                for (Elem y : H.add[b][c]) rhs = set_union(rhs, H.add[a][y]);
                if (lhs != rhs) flag("I(3)", {a, b, c});
                // II(1)
                if (H.mul[H.mul[a][b]][c] != H.mul[a][H.mul[b][c]]) flag("II(1)", {a, b, c});
                // IV: a(b+c) subset of ab+ac
                ElemSet scaled;
                for (Elem x : H.add[b][c]) scaled = set_insert(std::move(scaled), H.mul[a][x]);
                if (!set_subset(scaled, H.add[H.mul[a][b]][H.mul[a][c]])) flag("IV", {a, b, c});
            }
        }
    }
    // V: 1 != 0 and inverses exist
    if (H.one == 0) flag("V", {});
    for (Elem a = 1; a < n; ++a) {
        bool invertible = false;
        for (Elem b = 1; b < n && !invertible; ++b) invertible = (H.mul[a][b] == H.one);
        if (!invertible) flag("V", {a});
    }
    return report;
}

namespace {

// Class decomposition for the relation a ~ b iff as = bt for s,t in T.
struct QuotientClasses {
    std::vector<Elem> class_of;   // element -> class index
    std::vector<Elem> rep;        // class index -> minimal representative
};

QuotientClasses quotient_classes(const FiniteHyperfield& H, const SubgroupSelection& T) {
    const Elem n = static_cast<Elem>(H.size());
    QuotientClasses qc;
    qc.class_of.assign(n, n);
    qc.class_of[0] = 0;
    qc.rep.push_back(0);
    for (Elem a = 1; a < n; ++a) {
        if (qc.class_of[a] != n) continue;
        Elem cls = static_cast<Elem>(qc.rep.size());
        qc.rep.push_back(a);
        for (Elem t : T.members) qc.class_of[H.mul[a][t]] = cls;  // orbit aT
    }
    return qc;
}

} // namespace

FiniteHyperfield quotient(const FiniteHyperfield& H, const SubgroupSelection& T) {
    H.validate();
    SubgroupSelection checked = SubgroupSelection::of(H, T.members);
    QuotientClasses qc = quotient_classes(H, checked);
    const Elem m = static_cast<Elem>(qc.rep.size());

    FiniteHyperfield Q;
    Q.elements.resize(m);
    for (Elem c = 0; c < m; ++c) Q.elements[c] = H.elements[qc.rep[c]];
    Q.one = qc.class_of[H.one];
    Q.neg.resize(m);
    Q.mul.assign(m, std::vector<Elem>(m));
    Q.add.assign(m, std::vector<ElemSet>(m));
    for (Elem a = 0; a < m; ++a) {
        Q.neg[a] = qc.class_of[H.neg[qc.rep[a]]];
        for (Elem b = 0; b < m; ++b) Q.mul[a][b] = qc.class_of[H.mul[qc.rep[a]][qc.rep[b]]];
    }
    for (Elem a = 0; a < m; ++a) {
        for (Elem b = 0; b < m; ++b) {
            ElemSet sum;
            for (Elem c = 0; c < m; ++c) {
                bool member = false;
                for (Elem t : checked.members) {
                    for (Elem u : checked.members) {
                        const ElemSet& s = H.add[H.mul[qc.rep[a]][t]][H.mul[qc.rep[b]][u]];
                        for (Elem x : s) {
                            if (qc.class_of[x] == c) {
                                member = true;
                                break;
                            }
                        }
                        if (member) break;
                    }
                    if (member) break;
                }
                if (member) sum.push_back(c);
            }
            Q.add[a][b] = std::move(sum);
        }
    }
    return Q;
}

MorphismTable quotient_map(const FiniteHyperfield& H, const SubgroupSelection& T) {
    SubgroupSelection checked = SubgroupSelection::of(H, T.members);
    QuotientClasses qc = quotient_classes(H, checked);
    MorphismTable f;
    f.source = H;
    f.target = quotient(H, checked);
    f.map = qc.class_of;
    return f;
}

FiniteHyperfield prime(const FiniteHyperfield& H) {
    H.validate();
    const Elem n = static_cast<Elem>(H.size());
    FiniteHyperfield P = H;
    for (Elem a = 1; a < n; ++a) {
        for (Elem b = 1; b < n; ++b) {
            if (b == H.neg[a])
                P.add[a][b] = H.carrier();
            else
                P.add[a][b] = set_insert(set_insert(H.add[a][b], a), b);
        }
    }
    return P;
}

namespace {

bool morphism_conditions_hold(const MorphismTable& f) {
    const Elem n = static_cast<Elem>(f.source.size());
    const auto& S = f.source;
    const auto& T = f.target;
    if (f.map[0] != 0) return false;
    if (f.map[S.one] != T.one) return false;
    for (Elem a = 0; a < n; ++a) {
        if (f.map[S.neg[a]] != T.neg[f.map[a]]) return false;
        for (Elem b = 0; b < n; ++b) {
            if (f.map[S.mul[a][b]] != T.mul[f.map[a]][f.map[b]]) return false;
            for (Elem c : S.add[a][b])
                if (!set_contains(T.add[f.map[a]][f.map[b]], f.map[c])) return false;
        }
    }
    return true;
}

} // namespace

MorphismCheck is_morphism(const MorphismTable& f) {
    f.validate();
    const auto& S = f.source;
    const auto& T = f.target;
    MorphismCheck out;
    out.morphism = morphism_conditions_hold(f);
    if (!out.morphism) return out;
    if (S.size() != T.size()) return out;
    std::vector<Elem> inverse(T.size(), static_cast<Elem>(T.size()));
    for (Elem a = 0; a < S.size(); ++a) {
        if (inverse[f.map[a]] != T.size()) return out;  // not injective
        inverse[f.map[a]] = a;
    }
    out.isomorphism = morphism_conditions_hold(MorphismTable{T, S, inverse});
    return out;
}

namespace {

struct IsoSearch {
    const FiniteHyperfield& A;
    const FiniteHyperfield& B;
    std::vector<Elem> map, rmap;
    static constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<MorphismTable>& results;

    bool assign(Elem a, Elem b) {
        if (map[a] != kUnset) return map[a] == b;
        if (rmap[b] != kUnset) return false;
        map[a] = b;
        rmap[b] = a;
        if (!assign(A.neg[a], B.neg[b])) return false;
        for (Elem x = 0; x < A.size(); ++x) {
            if (map[x] == kUnset) continue;
            if (!assign(A.mul[a][x], B.mul[b][map[x]])) return false;
            if (!assign(A.mul[x][a], B.mul[map[x]][b])) return false;
        }
        return true;
    }

    void search() {
        Elem next = kUnset;
        for (Elem a = 0; a < A.size(); ++a)
            if (map[a] == kUnset) {
                next = a;
                break;
            }
        if (next == kUnset) {
            MorphismTable f{A, B, map};
            if (is_morphism(f).isomorphism) results.push_back(std::move(f));
            return;
        }
        for (Elem b = 0; b < B.size(); ++b) {
            if (rmap[b] != kUnset) continue;
            auto saved_map = map;
            auto saved_rmap = rmap;
            if (assign(next, b)) search();
            map = std::move(saved_map);
            rmap = std::move(saved_rmap);
        }
    }
};

} // namespace

std::vector<MorphismTable> find_isomorphisms(const FiniteHyperfield& H1, const FiniteHyperfield& H2,
                                             std::size_t max_nonzero) {
    H1.validate();
    H2.validate();
    if (H1.size() - 1 > max_nonzero || H2.size() - 1 > max_nonzero)
        throw std::length_error("find_isomorphisms: carrier above the configured bound");
    std::vector<MorphismTable> results;
    if (H1.size() != H2.size()) return results;
    IsoSearch s{H1, H2, std::vector<Elem>(H1.size(), IsoSearch::kUnset),
                std::vector<Elem>(H2.size(), IsoSearch::kUnset), results};
    // 0 -> 0 and 1 -> 1 are forced; assign() propagates -1 -> -1.
    if (s.assign(0, 0) && s.assign(H1.one, H2.one)) s.search();
    return results;
}

bool is_rigid(const FiniteHyperfield& H, const SubgroupSelection& T, Elem x) {
    if (x == 0) throw std::domain_error("is_rigid: x must be non-zero");
    if (x >= H.size()) throw std::invalid_argument("is_rigid: x out of range");
    ElemSet allowed = {0};
    for (Elem t : T.members) {
        allowed = set_insert(std::move(allowed), t);
        allowed = set_insert(std::move(allowed), H.mul[t][x]);
    }
    for (Elem t1 : T.members)
        for (Elem t2 : T.members)
            if (!set_subset(H.add[t1][H.mul[t2][x]], allowed)) return false;
    return true;
}

ElemSet basic_part(const FiniteHyperfield& H, const SubgroupSelection& T) {
    ElemSet B;
    for (Elem x : H.nonzero())
        if (!is_rigid(H, T, x) || !is_rigid(H, T, H.neg[x])) B.push_back(x);
    // B(T) is a union of cosets of T; anything else is an internal error.
    for (Elem x : B)
        for (Elem t : T.members)
            if (!set_contains(B, H.mul[x][t])) throw std::logic_error("basic_part: result not a union of T-cosets");
    return B;
}

bool is_exceptional(const FiniteHyperfield& H, const SubgroupSelection& T) {
    ElemSet B = basic_part(H, T);
    ElemSet pm = T.members;
    for (Elem t : T.members) pm = set_insert(std::move(pm), H.neg[t]);
    if (pm != B) return false;
    if (set_contains(T.members, H.neg[H.one])) return true;
    for (Elem a : T.members)
        for (Elem b : T.members)
            for (Elem c : H.add[a][b])
                if (c != 0 && !set_contains(T.members, c)) return false;
    return true;
}

bool is_quotient_morphism(const MorphismTable& f) {
    if (!is_morphism(f).morphism) throw std::invalid_argument("is_quotient_morphism: f is not a morphism");
    const auto& S = f.source;
    const auto& T = f.target;
    std::vector<bool> hit(T.size(), false);
    for (Elem y : f.map) hit[y] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
    ElemSet delta;
    for (Elem x : S.nonzero())
        if (f.map[x] == T.one) delta.push_back(x);
    const Elem n = static_cast<Elem>(S.size());
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
                bool lhs = set_contains(T.add[f.map[a]][f.map[b]], f.map[c]);
                bool rhs = false;
                for (Elem s : delta) {
                    for (Elem t : delta) {
                        for (Elem u : delta)
                            if (set_contains(S.add[S.mul[a][t]][S.mul[b][u]], S.mul[c][s])) {
                                rhs = true;
                                break;
                            }
                        if (rhs) break;
                    }
                    if (rhs) break;
                }
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

bool is_group_extension(const MorphismTable& f) {
    if (!is_morphism(f).morphism) throw std::invalid_argument("is_group_extension: f is not a morphism");
    const auto& S = f.source;
    const auto& T = f.target;
    std::vector<bool> image(T.size(), false);
    std::vector<Elem> seen(T.size(), static_cast<Elem>(T.size()));
    for (Elem a = 0; a < S.size(); ++a) {
        if (seen[f.map[a]] != T.size()) return false;  // not injective
        seen[f.map[a]] = a;
        image[f.map[a]] = true;
    }
    for (Elem x : T.nonzero()) {
        if (image[x]) continue;
        ElemSet rigid_bound = set_insert(ElemSet{T.one}, x);
        if (!set_subset(T.add[T.one][x], rigid_bound)) return false;
    }
    for (Elem y = 0; y < S.size(); ++y) {
        if (y == S.neg[S.one]) continue;
        ElemSet mapped;
        for (Elem c : S.add[S.one][y]) mapped = set_insert(std::move(mapped), f.map[c]);
        if (mapped != T.add[T.one][f.map[y]]) return false;
    }
    return true;
}

} // namespace wittconics
