// Complexes concentrated in degrees 0..n+1, (n+2)-Sigma-sequences, their
// morphisms, homotopies, rotations and mapping cones.

#ifndef FPCAT_COMPLEXES_HPP
#define FPCAT_COMPLEXES_HPP

#include "fpcat/functor.hpp"

namespace fpcat {

/// Complex X^0 -> ... -> X^{n+1} with d^{i+1} d^i = 0.
struct ComplexN {
    size_t n = 1;
    std::vector<AddObject> objects; // n+2
    std::vector<AddMorphism> diffs; // n+1, d^i : X^i -> X^{i+1}

    bool operator==(const ComplexN& o) const {
        return n == o.n && objects == o.objects && diffs == o.diffs;
    }
    bool operator<(const ComplexN& o) const {
        if (n != o.n) return n < o.n;
        if (objects != o.objects) return objects < o.objects;
        return diffs < o.diffs;
    }

    void validate(const AddCategory& cat) const {
        require(objects.size() == n + 2, "complex must have n+2 objects");
        require(diffs.size() == n + 1, "complex must have n+1 differentials");
        for (size_t i = 0; i <= n; ++i) {
            require(diffs[i].source == objects[i] && diffs[i].target == objects[i + 1],
                    "differential endpoints mismatch at degree " + std::to_string(i));
        }
        for (size_t i = 0; i + 1 <= n; ++i)
            require(cat.compose(diffs[i + 1], diffs[i]).is_zero(),
                    "d d != 0 at degree " + std::to_string(i));
    }
};

/// Sequence X^0 -> ... -> X^{n+1} -> Sigma X^0; no d d = 0 requirement.
struct SigmaSequence {
    size_t n = 1;
    std::vector<AddObject> objects; // n+2
    std::vector<AddMorphism> diffs; // n+2, last targets Sigma(objects[0])

    bool operator==(const SigmaSequence& o) const {
        return n == o.n && objects == o.objects && diffs == o.diffs;
    }
    bool operator<(const SigmaSequence& o) const {
        if (n != o.n) return n < o.n;
        if (objects != o.objects) return objects < o.objects;
        return diffs < o.diffs;
    }

    void validate(const AddCategory& cat, const AddFunctor& sigma) const {
        (void)cat;
        require(objects.size() == n + 2, "sequence must have n+2 objects");
        require(diffs.size() == n + 2, "sequence must have n+2 maps");
        for (size_t i = 0; i <= n; ++i)
            require(diffs[i].source == objects[i] && diffs[i].target == objects[i + 1],
                    "map endpoints mismatch at degree " + std::to_string(i));
        require(diffs[n + 1].source == objects[n + 1] &&
                    diffs[n + 1].target == sigma.map_object(objects[0]),
                "last map must land in Sigma of the first object");
    }
};

using ChainComponents = std::vector<AddMorphism>;

inline bool squares_commute(const AddCategory& cat, const ComplexN& x, const ComplexN& y,
                            const ChainComponents& f) {
    if (f.size() != x.n + 2 || y.n != x.n) return false;
    for (size_t i = 0; i <= x.n + 1; ++i)
        if (f[i].source != x.objects[i] || f[i].target != y.objects[i]) return false;
    for (size_t i = 0; i <= x.n; ++i)
        if (cat.compose(f[i + 1], x.diffs[i]) != cat.compose(y.diffs[i], f[i])) return false;
    return true;
}

inline bool sigma_squares_commute(const AddCategory& cat, const AddFunctor& sigma,
                                  const SigmaSequence& x, const SigmaSequence& y,
                                  const ChainComponents& f) {
    if (f.size() != x.n + 2 || y.n != x.n) return false;
    for (size_t i = 0; i <= x.n + 1; ++i)
        if (f[i].source != x.objects[i] || f[i].target != y.objects[i]) return false;
    for (size_t i = 0; i <= x.n; ++i)
        if (cat.compose(f[i + 1], x.diffs[i]) != cat.compose(y.diffs[i], f[i])) return false;
    return cat.compose(sigma.map_morphism(f[0]), x.diffs[x.n + 1]) ==
           cat.compose(y.diffs[y.n + 1], f[x.n + 1]);
}

inline ChainComponents identity_chain_morphism(const AddCategory& cat, const ComplexN& x) {
    ChainComponents f;
    for (const auto& o : x.objects) f.push_back(cat.identity(o));
    return f;
}

inline ChainComponents compose_chain(const AddCategory& cat, const ChainComponents& g,
                                     const ChainComponents& f) {
    require(g.size() == f.size(), "chain morphism length mismatch");
    ChainComponents h;
    for (size_t i = 0; i < f.size(); ++i) h.push_back(cat.compose(g[i], f[i]));
    return h;
}

/// Apply an additive functor degreewise.
inline ComplexN map_complex(const AddFunctor& F, const ComplexN& x) {
    ComplexN r;
    r.n = x.n;
    for (const auto& o : x.objects) r.objects.push_back(F.map_object(o));
    for (const auto& d : x.diffs) r.diffs.push_back(F.map_morphism(d));
    return r;
}

// ---- Mapping cone (complexes) ----

/// MC(f) for f : X -> Y between complexes in degrees 0..n (i.e. members of
/// C^{n-1}); the cone lives in degrees 0..n+1:
///   X^0 -> X^1 (+) Y^0 -> ... -> X^n (+) Y^{n-1} -> Y^n
/// with first map (-d_X^0 ; f^0), last map (f^n , d_Y^{n-1}) and interior
/// blocks (-d_X^{i+1} 0 ; f^{i+1} d_Y^i).
inline ComplexN mapping_cone(const AddCategory& cat, const ComplexN& x, const ComplexN& y,
                             const ChainComponents& f) {
    require(x.n == y.n, "mapping cone degree mismatch");
    require(squares_commute(cat, x, y, f), "mapping cone input is not a chain morphism");
    size_t m = x.n; // complexes live in degrees 0..m+1; cone in 0..m+2
    ComplexN c;
    c.n = m + 1;
    c.objects.push_back(x.objects[0]);
    for (size_t i = 0; i + 1 <= m + 1; ++i) c.objects.push_back(x.objects[i + 1].concat(y.objects[i]));
    c.objects.push_back(y.objects[m + 1]);

    AddMorphism first = block_col(cat, cat.negate(x.diffs[0]), f[0]);
    c.diffs.push_back(first);
    for (size_t i = 0; i + 1 <= m; ++i) {
        AddMorphism a = cat.negate(x.diffs[i + 1]);
        AddMorphism b = f[i + 1];
        AddMorphism d = y.diffs[i];
        c.diffs.push_back(block_2x2(cat, x.objects[i + 1], y.objects[i], x.objects[i + 2],
                                    y.objects[i + 1], &a, nullptr, &b, &d));
    }
    c.diffs.push_back(block_row(cat, f[m + 1], y.diffs[m]));
    c.validate(cat);
    return c;
}

// ---- Sigma-sequence operations ----

/// Left rotation: (X^1, ..., X^{n+1}, Sigma X^0) with final map (-1)^n Sigma d^0.
inline SigmaSequence left_rotation(const AddCategory& cat, const AddFunctor& sigma,
                                   const SigmaSequence& s) {
    SigmaSequence r;
    r.n = s.n;
    for (size_t i = 1; i <= s.n + 1; ++i) r.objects.push_back(s.objects[i]);
    r.objects.push_back(sigma.map_object(s.objects[0]));
    for (size_t i = 1; i <= s.n + 1; ++i) r.diffs.push_back(s.diffs[i]);
    AddMorphism last = sigma.map_morphism(s.diffs[0]);
    if (s.n % 2 == 1) last = cat.negate(last);
    r.diffs.push_back(last);
    return r;
}

/// F4 cone of a morphism of Sigma-sequences: objects X^{i+1} (+) Y^i for
/// i = 0..n+1 with d_C^i = (-d_X^{i+1} 0 ; f^{i+1} d_Y^i), where
/// d_X^{n+2} := Sigma d_X^0 and f^{n+2} := Sigma f^0.
inline SigmaSequence cone_of_angle_morphism(const AddCategory& cat, const AddFunctor& sigma,
                                            const SigmaSequence& x, const SigmaSequence& y,
                                            const ChainComponents& f) {
    require(x.n == y.n, "cone degree mismatch");
    require(sigma_squares_commute(cat, sigma, x, y, f), "cone input is not a sequence morphism");
    size_t n = x.n;
    // Indices beyond n+1 mean "apply Sigma and wrap": X^{n+2} = Sigma X^0,
    // X^{n+3} = Sigma X^1, and likewise for maps.
    auto dx = [&](size_t i) -> AddMorphism {
        return i <= n + 1 ? x.diffs[i] : sigma.map_morphism(x.diffs[i - (n + 2)]);
    };
    auto dy = [&](size_t i) -> AddMorphism {
        return i <= n + 1 ? y.diffs[i] : sigma.map_morphism(y.diffs[i - (n + 2)]);
    };
    auto fc = [&](size_t i) -> AddMorphism {
        return i <= n + 1 ? f[i] : sigma.map_morphism(f[i - (n + 2)]);
    };
    auto xobj = [&](size_t i) -> AddObject {
        return i <= n + 1 ? x.objects[i] : sigma.map_object(x.objects[i - (n + 2)]);
    };
    auto yobj = [&](size_t i) -> AddObject {
        return i <= n + 1 ? y.objects[i] : sigma.map_object(y.objects[i - (n + 2)]);
    };

    SigmaSequence c;
    c.n = n;
    for (size_t i = 0; i <= n + 1; ++i) c.objects.push_back(xobj(i + 1).concat(yobj(i)));
    for (size_t i = 0; i <= n + 1; ++i) {
        AddMorphism a = cat.negate(dx(i + 1));
        AddMorphism b = fc(i + 1);
        AddMorphism d = dy(i);
        c.diffs.push_back(
            block_2x2(cat, xobj(i + 1), yobj(i), xobj(i + 2), yobj(i + 1), &a, nullptr, &b, &d));
    }
    c.validate(cat, sigma);
    return c;
}

// ---- Homotopies ----

/// Witness for f ~ g: maps h^i : X^i -> Y^{i-1} (i = 1..n+1) with
/// f^i - g^i = d_Y^{i-1} h^i + h^{i+1} d_X^i, h^0 = h^{n+2} = 0.
struct HomotopyWitness {
    std::vector<AddMorphism> maps;
};

inline bool homotopy_witness_valid(const AddCategory& cat, const ComplexN& x, const ComplexN& y,
                                   const ChainComponents& f, const ChainComponents& g,
                                   const HomotopyWitness& h) {
    if (h.maps.size() != x.n + 1) return false;
    for (size_t i = 0; i <= x.n + 1; ++i) {
        AddMorphism want = cat.sub(f[i], g[i]);
        AddMorphism got = cat.zero_morphism(x.objects[i], y.objects[i]);
        if (i >= 1) got = cat.add(got, cat.compose(y.diffs[i - 1], h.maps[i - 1]));
        if (i <= x.n) got = cat.add(got, cat.compose(h.maps[i], x.diffs[i]));
        if (want != got) return false;
    }
    return true;
}

/// Solve the homotopy ladder as one linear system; the returned witness is
/// re-verified before being handed back.
inline std::optional<HomotopyWitness> find_homotopy(const AddCategory& cat, const ComplexN& x,
                                                    const ComplexN& y, const ChainComponents& f,
                                                    const ChainComponents& g) {
    require(f.size() == x.n + 2 && g.size() == x.n + 2, "morphism length mismatch");
    size_t n = x.n;
    // unknown layout: h^1 .. h^{n+1}
    std::vector<size_t> hdim(n + 1), hoff(n + 2, 0);
    for (size_t i = 0; i <= n; ++i) {
        hdim[i] = cat.hom_dim(x.objects[i + 1], y.objects[i]);
        hoff[i + 1] = hoff[i] + hdim[i];
    }
    std::vector<size_t> rdim(n + 2), roff(n + 3, 0);
    for (size_t i = 0; i <= n + 1; ++i) {
        rdim[i] = cat.hom_dim(x.objects[i], y.objects[i]);
        roff[i + 1] = roff[i] + rdim[i];
    }
    FMatrix m(cat.field(), roff[n + 2], hoff[n + 1]);
    FVector rhs(roff[n + 2], 0);
    auto put_block = [&](size_t r0, size_t c0, const FMatrix& b) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
    };
    for (size_t i = 0; i <= n + 1; ++i) {
        FVector diff = vec_sub(cat.field(), f[i].coords, g[i].coords);
        std::copy(diff.begin(), diff.end(), rhs.begin() + roff[i]);
        if (i >= 1) // d_Y^{i-1} o h^i, unknown block i-1
            put_block(roff[i], hoff[i - 1], cat.post_matrix(y.diffs[i - 1], x.objects[i]));
        if (i <= n) // h^{i+1} o d_X^i, unknown block i
            put_block(roff[i], hoff[i], cat.pre_matrix(x.diffs[i], y.objects[i]));
    }
    auto sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    HomotopyWitness w;
    for (size_t i = 0; i <= n; ++i)
        w.maps.push_back(cat.make_morphism(
            x.objects[i + 1], y.objects[i],
            FVector(sol->begin() + hoff[i], sol->begin() + hoff[i] + hdim[i])));
    require(homotopy_witness_valid(cat, x, y, f, g, w), "homotopy witness failed re-verification");
    return w;
}

inline bool homotopic(const AddCategory& cat, const ComplexN& x, const ComplexN& y,
                      const ChainComponents& f, const ChainComponents& g) {
    return find_homotopy(cat, x, y, f, g).has_value();
}

/// Enumerate endpoint-fixing morphisms x -> y in C^n_{(A,C)} (f^0 = 1_A,
/// f^{n+1} = 1_C, all squares commuting) as one affine solution set over the
/// middle components. Visitor gets the full component list; return false to
/// stop (then the function returns true).
template <typename Visit>
inline bool for_each_endpoint_fixing_morphism(const AddCategory& cat, const ComplexN& x,
                                              const ComplexN& y, Visit&& visit) {
    require(x.objects.front() == y.objects.front() && x.objects.back() == y.objects.back(),
            "complexes do not share endpoints");
    size_t n = x.n;
    AddMorphism id_a = cat.identity(x.objects.front());
    AddMorphism id_c = cat.identity(x.objects.back());
    if (n == 0) {
        // no middle unknowns; the only candidate is (1,1), valid iff squares commute
        ChainComponents f{id_a, id_c};
        if (squares_commute(cat, x, y, f)) return !visit(f);
        return false;
    }
    std::vector<size_t> fdim(n), foff(n + 1, 0);
    for (size_t i = 1; i <= n; ++i) {
        fdim[i - 1] = cat.hom_dim(x.objects[i], y.objects[i]);
        foff[i] = foff[i - 1] + fdim[i - 1];
    }
    // equations: degree 0: f^1 d_X^0 = d_Y^0; degrees 1..n-1: f^{i+1} d_X^i -
    // d_Y^i f^i = 0; degree n: d_Y^n f^n = d_X^n.
    std::vector<size_t> rdim(n + 1), roff(n + 2, 0);
    for (size_t i = 0; i <= n; ++i) {
        rdim[i] = cat.hom_dim(x.objects[i], y.objects[i + 1]);
        roff[i + 1] = roff[i] + rdim[i];
    }
    FMatrix m(cat.field(), roff[n + 1], foff[n]);
    FVector rhs(roff[n + 1], 0);
    auto put_block = [&](size_t r0, size_t c0, const FMatrix& b, bool negate) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) {
                uint32_t v = negate ? cat.field().neg(b.at(i, j)) : b.at(i, j);
                m.at(r0 + i, c0 + j) = cat.field().add(m.at(r0 + i, c0 + j), v);
            }
    };
    for (size_t i = 0; i <= n; ++i) {
        if (i == 0) {
            put_block(roff[0], foff[0], cat.pre_matrix(x.diffs[0], y.objects[1]), false);
            std::copy(y.diffs[0].coords.begin(), y.diffs[0].coords.end(), rhs.begin() + roff[0]);
        } else if (i == n) {
            put_block(roff[n], foff[n - 1], cat.post_matrix(y.diffs[n], x.objects[n]), false);
            std::copy(x.diffs[n].coords.begin(), x.diffs[n].coords.end(), rhs.begin() + roff[n]);
        } else {
            put_block(roff[i], foff[i], cat.pre_matrix(x.diffs[i], y.objects[i + 1]), false);
            put_block(roff[i], foff[i - 1], cat.post_matrix(y.diffs[i], x.objects[i]), true);
        }
    }
    auto sols = solve_affine(m, rhs);
    if (!sols.solvable) return false;
    return for_each_solution(cat.field(), sols, [&](const FVector& v) {
        ChainComponents f;
        f.push_back(id_a);
        for (size_t i = 1; i <= n; ++i)
            f.push_back(cat.make_morphism(x.objects[i], y.objects[i],
                                          FVector(v.begin() + foff[i - 1],
                                                  v.begin() + foff[i - 1] + fdim[i - 1])));
        f.push_back(id_c);
        return visit(static_cast<const ChainComponents&>(f));
    });
}

/// Homotopy equivalence test for an endpoint-fixing morphism: search an
/// endpoint-fixing g with g f ~ 1 and f g ~ 1.
inline bool is_homotopy_equivalence(const AddCategory& cat, const ComplexN& x, const ComplexN& y,
                                    const ChainComponents& f) {
    require(f.front() == cat.identity(x.objects.front()) &&
                f.back() == cat.identity(x.objects.back()),
            "endpoint components must be identities");
    require(squares_commute(cat, x, y, f), "not a chain morphism");
    bool found = false;
    for_each_endpoint_fixing_morphism(cat, y, x, [&](const ChainComponents& g) {
        if (homotopic(cat, x, x, compose_chain(cat, g, f), identity_chain_morphism(cat, x)) &&
            homotopic(cat, y, y, compose_chain(cat, f, g), identity_chain_morphism(cat, y))) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

/// Are x and y homotopy equivalent inside C^n_{(A,C)}? Exhaustive over the
/// affine sets of endpoint-fixing morphisms both ways.
inline bool complexes_homotopy_equivalent(const AddCategory& cat, const ComplexN& x,
                                          const ComplexN& y) {
    if (x == y) return true;
    if (x.objects.front() != y.objects.front() || x.objects.back() != y.objects.back())
        return false;
    bool found = false;
    for_each_endpoint_fixing_morphism(cat, x, y, [&](const ChainComponents& f) {
        if (is_homotopy_equivalence(cat, x, y, f)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

/// Weak isomorphism of n-exact sequences: some cyclically consecutive pair
/// (f^i, f^{i+1}) of invertible components, indices mod n+2.
inline bool is_weak_isomorphism(const AddCategory& cat, const ComplexN& x, const ComplexN& y,
                                const ChainComponents& f) {
    require(squares_commute(cat, x, y, f), "not a chain morphism");
    size_t len = x.n + 2;
    std::vector<bool> inv(len);
    for (size_t i = 0; i < len; ++i) inv[i] = cat.is_invertible(f[i]);
    for (size_t i = 0; i < len; ++i)
        if (inv[i] && inv[(i + 1) % len]) return true;
    return false;
}

} // namespace fpcat

#endif
