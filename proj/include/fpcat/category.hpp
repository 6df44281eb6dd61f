// Finite F_p-linear categories and their additive (matrix) closure.
//
// A BaseCategory lists base objects, Hom-space dimensions and composition
// structure constants. Objects of the additive closure are ordered lists of
// base objects; morphisms are block matrices of Hom coordinates, packed into
// a single flat coordinate vector with target-summand-major block order.
// All hom-level questions (composition, invertibility, pre/post action as a
// linear map) reduce to FMatrix arithmetic.

#ifndef FPCAT_CATEGORY_HPP
#define FPCAT_CATEGORY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fpcat/linalg.hpp"

namespace fpcat {

/// Ordered list of base-object indices; the empty list is the zero object.
struct AddObject {
    std::vector<size_t> summands;

    AddObject() = default;
    explicit AddObject(std::vector<size_t> s) : summands(std::move(s)) {}
    static AddObject zero() { return AddObject{}; }
    static AddObject base(size_t i) { return AddObject{{i}}; }

    size_t size() const { return summands.size(); }
    bool is_zero() const { return summands.empty(); }

    AddObject concat(const AddObject& o) const {
        AddObject r = *this;
        r.summands.insert(r.summands.end(), o.summands.begin(), o.summands.end());
        return r;
    }
    AddObject canonical() const {
        AddObject r = *this;
        std::sort(r.summands.begin(), r.summands.end());
        return r;
    }

    bool operator==(const AddObject& o) const { return summands == o.summands; }
    bool operator!=(const AddObject& o) const { return summands != o.summands; }
    bool operator<(const AddObject& o) const {
        if (summands.size() != o.summands.size()) return summands.size() < o.summands.size();
        return summands < o.summands;
    }
};

struct AddMorphism {
    AddObject source;
    AddObject target;
    FVector coords; // packed blocks, target-summand-major

    bool operator==(const AddMorphism& o) const {
        return source == o.source && target == o.target && coords == o.coords;
    }
    bool operator!=(const AddMorphism& o) const { return !(*this == o); }
    bool operator<(const AddMorphism& o) const {
        if (source != o.source) return source < o.source;
        if (target != o.target) return target < o.target;
        return coords < o.coords;
    }
    bool is_zero() const { return vec_is_zero(coords); }
};

struct ValidationIssue {
    std::string where;
    std::string what;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    void add(std::string where, std::string what) {
        issues.push_back({std::move(where), std::move(what)});
    }
};

/// BaseCategory data plus the whole morphism calculus of its additive closure.
/// Immutable after construction; safe to share by const reference.
class AddCategory {
  public:
    AddCategory() = default;
    AddCategory(PrimeField field, std::vector<std::string> names,
                std::vector<std::vector<size_t>> hom_dims,
                // comp[a][b][c]: hom(a,c) x (hom(b,c)*hom(a,b)), column k*hom(a,b)+j
                // holds the coordinates of basis_k(b,c) o basis_j(a,b).
                std::vector<std::vector<std::vector<FMatrix>>> comp,
                std::vector<FVector> identities)
        : field_(field), names_(std::move(names)), hom_(std::move(hom_dims)),
          comp_(std::move(comp)), id_(std::move(identities)) {
        size_t n = names_.size();
        require(hom_.size() == n, "hom_dims shape");
        for (auto& row : hom_) require(row.size() == n, "hom_dims shape");
        require(comp_.size() == n && id_.size() == n, "category data shape");
        for (size_t a = 0; a < n; ++a) {
            require(comp_[a].size() == n, "comp shape");
            for (size_t b = 0; b < n; ++b) require(comp_[a][b].size() == n, "comp shape");
            require(id_[a].size() == hom_[a][a], "identity coordinate length");
        }
    }

    const PrimeField& field() const { return field_; }
    size_t base_count() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    size_t base_hom_dim(size_t a, size_t b) const { return hom_[a][b]; }
    const FVector& base_identity(size_t a) const { return id_[a]; }

    std::optional<size_t> object_index(const std::string& nm) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == nm) return i;
        return std::nullopt;
    }

    /// g o f for base-level coordinate vectors g in Hom(b,c), f in Hom(a,b).
    FVector base_compose(size_t a, size_t b, size_t c, const FVector& g, const FVector& f) const {
        require(g.size() == hom_[b][c] && f.size() == hom_[a][b], "base composition shape");
        FVector kron(g.size() * f.size());
        for (size_t k = 0; k < g.size(); ++k)
            for (size_t j = 0; j < f.size(); ++j) kron[k * f.size() + j] = field_.mul(g[k], f[j]);
        return comp_[a][b][c].apply(kron);
    }

    // ---- Hom spaces of the additive closure ----

    size_t hom_dim(const AddObject& x, const AddObject& y) const {
        size_t d = 0;
        for (size_t i : y.summands)
            for (size_t j : x.summands) d += hom_[j][i];
        return d;
    }

    /// Offset of block (i,j) (target summand i, source summand j) in the flat
    /// coordinate vector of a morphism x -> y.
    size_t block_offset(const AddObject& x, const AddObject& y, size_t i, size_t j) const {
        size_t off = 0;
        for (size_t ii = 0; ii < i; ++ii)
            for (size_t jj = 0; jj < x.size(); ++jj) off += hom_[x.summands[jj]][y.summands[ii]];
        for (size_t jj = 0; jj < j; ++jj) off += hom_[x.summands[jj]][y.summands[i]];
        return off;
    }

    FVector block(const AddMorphism& f, size_t i, size_t j) const {
        size_t off = block_offset(f.source, f.target, i, j);
        size_t len = hom_[f.source.summands[j]][f.target.summands[i]];
        return FVector(f.coords.begin() + off, f.coords.begin() + off + len);
    }

    void set_block(AddMorphism& f, size_t i, size_t j, const FVector& v) const {
        size_t off = block_offset(f.source, f.target, i, j);
        size_t len = hom_[f.source.summands[j]][f.target.summands[i]];
        require(v.size() == len, "block length mismatch");
        std::copy(v.begin(), v.end(), f.coords.begin() + off);
    }

    AddMorphism zero_morphism(const AddObject& x, const AddObject& y) const {
        return {x, y, FVector(hom_dim(x, y), 0)};
    }

    AddMorphism identity(const AddObject& x) const {
        AddMorphism f = zero_morphism(x, x);
        for (size_t i = 0; i < x.size(); ++i) set_block(f, i, i, id_[x.summands[i]]);
        return f;
    }

    AddMorphism basis_morphism(const AddObject& x, const AddObject& y, size_t t) const {
        AddMorphism f = zero_morphism(x, y);
        require(t < f.coords.size(), "basis index range");
        f.coords[t] = 1;
        return f;
    }

    AddMorphism make_morphism(const AddObject& x, const AddObject& y, FVector coords) const {
        require(coords.size() == hom_dim(x, y), "morphism coordinate length");
        for (uint32_t& c : coords) c %= field_.p();
        return {x, y, std::move(coords)};
    }

    AddMorphism add(const AddMorphism& f, const AddMorphism& g) const {
        require(f.source == g.source && f.target == g.target, "morphism sum shape");
        return {f.source, f.target, vec_add(field_, f.coords, g.coords)};
    }
    AddMorphism sub(const AddMorphism& f, const AddMorphism& g) const {
        require(f.source == g.source && f.target == g.target, "morphism difference shape");
        return {f.source, f.target, vec_sub(field_, f.coords, g.coords)};
    }
    AddMorphism scale(uint32_t c, const AddMorphism& f) const {
        return {f.source, f.target, vec_scale(field_, c, f.coords)};
    }
    AddMorphism negate(const AddMorphism& f) const { return scale(field_.p() - 1, f); }

    AddMorphism compose(const AddMorphism& g, const AddMorphism& f) const {
        require(f.target == g.source, "composition endpoint mismatch: " +
                                          object_name(f.target) + " vs " + object_name(g.source));
        AddMorphism h = zero_morphism(f.source, g.target);
        for (size_t i = 0; i < g.target.size(); ++i)
            for (size_t k = 0; k < f.source.size(); ++k) {
                FVector acc(hom_[f.source.summands[k]][g.target.summands[i]], 0);
                for (size_t j = 0; j < f.target.size(); ++j) {
                    FVector part = base_compose(f.source.summands[k], f.target.summands[j],
                                                g.target.summands[i], block(g, i, j), block(f, j, k));
                    acc = vec_add(field_, acc, part);
                }
                set_block(h, i, k, acc);
            }
        return h;
    }

    /// Matrix of (f o -) : Hom(z, src f) -> Hom(z, tgt f).
    FMatrix post_matrix(const AddMorphism& f, const AddObject& z) const {
        size_t dom = hom_dim(z, f.source);
        std::vector<FVector> cols;
        cols.reserve(dom);
        for (size_t t = 0; t < dom; ++t)
            cols.push_back(compose(f, basis_morphism(z, f.source, t)).coords);
        return FMatrix::from_columns(field_, hom_dim(z, f.target), cols);
    }

    /// Matrix of (- o f) : Hom(tgt f, z) -> Hom(src f, z).
    FMatrix pre_matrix(const AddMorphism& f, const AddObject& z) const {
        size_t dom = hom_dim(f.target, z);
        std::vector<FVector> cols;
        cols.reserve(dom);
        for (size_t t = 0; t < dom; ++t)
            cols.push_back(compose(basis_morphism(f.target, z, t), f).coords);
        return FMatrix::from_columns(field_, hom_dim(f.source, z), cols);
    }

    /// Two-sided inverse if one exists: solve g o f = 1 and f o g = 1 jointly.
    std::optional<AddMorphism> inverse(const AddMorphism& f) const {
        if (f.source.size() != f.target.size()) {
            // An iso between lists of different lengths needs degenerate
            // summands; fall through to the honest solve in that case too.
        }
        FMatrix lhs = pre_matrix(f, f.source).vstack(post_matrix(f, f.target));
        FVector rhs = identity(f.source).coords;
        FVector rhs2 = identity(f.target).coords;
        rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
        auto g = solve_linear(lhs, rhs);
        if (!g) return std::nullopt;
        return make_morphism(f.target, f.source, *g);
    }

    bool is_invertible(const AddMorphism& f) const { return inverse(f).has_value(); }

    /// Visit all morphisms x -> y in deterministic coordinate order. The
    /// visitor returns false to stop; returns true if stopped early.
    template <typename Visit>
    bool for_each_morphism(const AddObject& x, const AddObject& y, Visit&& visit) const {
        size_t d = hom_dim(x, y);
        require(d <= 24, "hom space too large to enumerate: dim " + std::to_string(d));
        AddMorphism f = zero_morphism(x, y);
        while (true) {
            if (!visit(static_cast<const AddMorphism&>(f))) return true;
            size_t i = 0;
            for (; i < d; ++i) {
                f.coords[i]++;
                if (f.coords[i] < field_.p()) break;
                f.coords[i] = 0;
            }
            if (i == d) return false;
        }
    }

    /// All isomorphisms x -> y, in enumeration order; empty iff not isomorphic.
    /// Cached per object pair.
    const std::vector<AddMorphism>& isomorphisms(const AddObject& x, const AddObject& y) const {
        std::scoped_lock lk(cache_mutex_);
        auto key = std::make_pair(x, y);
        auto it = iso_cache_.find(key);
        if (it != iso_cache_.end()) return it->second;
        std::vector<AddMorphism> isos;
        if (plausibly_isomorphic(x, y)) {
            for_each_morphism(x, y, [&](const AddMorphism& f) {
                if (is_invertible(f)) isos.push_back(f);
                return true;
            });
        }
        return iso_cache_.emplace(std::move(key), std::move(isos)).first->second;
    }

    bool isomorphic(const AddObject& x, const AddObject& y) const {
        return !isomorphisms(x, y).empty();
    }

    std::string object_name(const AddObject& x) const {
        if (x.is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < x.size(); ++i) {
            if (i) s += "+";
            s += names_[x.summands[i]];
        }
        return s;
    }

    std::string morphism_name(const AddMorphism& f) const {
        std::string s = object_name(f.source) + "->" + object_name(f.target) + "[";
        for (size_t i = 0; i < f.coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.coords[i]);
        }
        return s + "]";
    }

    /// Associativity and unit laws on all basis triples/pairs.
    ValidationReport validate() const {
        ValidationReport rep;
        size_t n = names_.size();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c) {
                    const FMatrix& m = comp_[a][b][c];
                    if (m.rows() != hom_[a][c] || m.cols() != hom_[b][c] * hom_[a][b])
                        rep.add("comp(" + names_[a] + "," + names_[b] + "," + names_[c] + ")",
                                "structure-constant matrix has wrong shape");
                }
        if (!rep.ok()) return rep;
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t j = 0; j < hom_[a][b]; ++j) {
                    FVector f(hom_[a][b], 0);
                    f[j] = 1;
                    if (base_compose(a, a, b, f, id_[a]) != f)
                        rep.add("unit", "f o id != f at basis " + std::to_string(j) + " of Hom(" +
                                            names_[a] + "," + names_[b] + ")");
                    if (base_compose(a, b, b, id_[b], f) != f)
                        rep.add("unit", "id o f != f at basis " + std::to_string(j) + " of Hom(" +
                                            names_[a] + "," + names_[b] + ")");
                }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c)
                    for (size_t d = 0; d < n; ++d)
                        for (size_t jf = 0; jf < hom_[a][b]; ++jf)
                            for (size_t jg = 0; jg < hom_[b][c]; ++jg)
                                for (size_t jh = 0; jh < hom_[c][d]; ++jh) {
                                    FVector f(hom_[a][b], 0), g(hom_[b][c], 0), h(hom_[c][d], 0);
                                    f[jf] = 1;
                                    g[jg] = 1;
                                    h[jh] = 1;
                                    FVector left =
                                        base_compose(a, b, d, base_compose(b, c, d, h, g), f);
                                    FVector right =
                                        base_compose(a, c, d, h, base_compose(a, b, c, g, f));
                                    if (left != right)
                                        rep.add("associativity",
                                                "h(gf) != (hg)f at basis triple (" +
                                                    std::to_string(jh) + "," + std::to_string(jg) +
                                                    "," + std::to_string(jf) + ") over (" +
                                                    names_[a] + "," + names_[b] + "," + names_[c] +
                                                    "," + names_[d] + ")");
                                }
        return rep;
    }

  private:
    bool plausibly_isomorphic(const AddObject& x, const AddObject& y) const {
        // Isomorphic objects have equal Hom dimensions against every base
        // object on both sides; cheap necessary filter before enumeration.
        for (size_t z = 0; z < names_.size(); ++z) {
            AddObject zz = AddObject::base(z);
            if (hom_dim(zz, x) != hom_dim(zz, y) || hom_dim(x, zz) != hom_dim(y, zz)) return false;
        }
        return true;
    }

    PrimeField field_;
    std::vector<std::string> names_;
    std::vector<std::vector<size_t>> hom_;
    std::vector<std::vector<std::vector<FMatrix>>> comp_;
    std::vector<FVector> id_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<AddObject, AddObject>, std::vector<AddMorphism>> iso_cache_;
};

/// All canonical AddObjects with at most `bound` summands, zero object first,
/// then by summand count and lexicographic order.
struct Universe {
    size_t bound = 0;
    std::vector<AddObject> objects;

    static Universe build(const AddCategory& cat, size_t bound) {
        Universe u;
        u.bound = bound;
        u.objects.push_back(AddObject::zero());
        std::vector<std::vector<size_t>> current{{}};
        for (size_t len = 1; len <= bound; ++len) {
            std::vector<std::vector<size_t>> next;
            for (const auto& prefix : current) {
                size_t start = prefix.empty() ? 0 : prefix.back();
                for (size_t i = start; i < cat.base_count(); ++i) {
                    auto s = prefix;
                    s.push_back(i);
                    u.objects.push_back(AddObject{s});
                    next.push_back(std::move(s));
                }
            }
            current = std::move(next);
        }
        return u;
    }

    bool contains(const AddObject& x) const {
        for (const auto& o : objects)
            if (o == x) return true;
        return false;
    }
};

/// Splitting data for an idempotent e = s o r with r o s = 1.
struct IdempotentSplitting {
    AddObject through;
    AddMorphism retraction; // r : X -> Y
    AddMorphism section;    // s : Y -> X
};

/// Search a splitting object for e : X -> X among universe objects with at
/// most |X| summands, in deterministic universe order. Absence means the
/// bound was exhausted, not that no splitting exists in a larger category.
inline std::optional<IdempotentSplitting> search_idempotent_splitting(const AddCategory& cat,
                                                                      const Universe& u,
                                                                      const AddMorphism& e) {
    require(e.source == e.target, "idempotent must be an endomorphism");
    require(cat.compose(e, e) == e, "morphism is not idempotent");
    for (const AddObject& y : u.objects) {
        if (y.size() > e.source.size()) continue;
        std::optional<IdempotentSplitting> found;
        cat.for_each_morphism(e.source, y, [&](const AddMorphism& r) {
            // Given r, both conditions s o r = e and r o s = 1_Y are linear in s.
            FMatrix lhs = cat.pre_matrix(r, e.source).vstack(cat.post_matrix(r, y));
            FVector rhs = e.coords;
            FVector idy = cat.identity(y).coords;
            rhs.insert(rhs.end(), idy.begin(), idy.end());
            auto s = solve_linear(lhs, rhs);
            if (s) {
                found = IdempotentSplitting{y, r, cat.make_morphism(y, e.source, *s)};
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// f mono iff Hom(Z,f) is injective for every base object Z.
inline bool is_monomorphism(const AddCategory& cat, const AddMorphism& f) {
    for (size_t z = 0; z < cat.base_count(); ++z) {
        AddObject zz = AddObject::base(z);
        FMatrix m = cat.post_matrix(f, zz);
        if (rank(m) != m.cols()) return false;
    }
    return true;
}

inline bool is_epimorphism(const AddCategory& cat, const AddMorphism& f) {
    for (size_t z = 0; z < cat.base_count(); ++z) {
        AddObject zz = AddObject::base(z);
        FMatrix m = cat.pre_matrix(f, zz);
        if (rank(m) != m.cols()) return false;
    }
    return true;
}

// ---- Block assembly helpers used by cones and direct sums ----

/// Morphism X1 (+) X2 -> Y1 (+) Y2 with the given blocks; any block may be
/// omitted by passing nullptr, meaning zero.
inline AddMorphism block_2x2(const AddCategory& cat, const AddObject& x1, const AddObject& x2,
                             const AddObject& y1, const AddObject& y2, const AddMorphism* f11,
                             const AddMorphism* f12, const AddMorphism* f21,
                             const AddMorphism* f22) {
    AddObject x = x1.concat(x2), y = y1.concat(y2);
    AddMorphism r = cat.zero_morphism(x, y);
    auto put = [&](const AddMorphism* f, size_t row_off, size_t col_off, const AddObject& xs,
                   const AddObject& ys) {
        if (!f) return;
        require(f->source == xs && f->target == ys, "block endpoint mismatch");
        for (size_t i = 0; i < ys.size(); ++i)
            for (size_t j = 0; j < xs.size(); ++j)
                cat.set_block(r, row_off + i, col_off + j, cat.block(*f, i, j));
    };
    put(f11, 0, 0, x1, y1);
    put(f12, 0, x1.size(), x2, y1);
    put(f21, y1.size(), 0, x1, y2);
    put(f22, y1.size(), x1.size(), x2, y2);
    return r;
}

/// Column (f ; g) : X -> Y1 (+) Y2.
inline AddMorphism block_col(const AddCategory& cat, const AddMorphism& f, const AddMorphism& g) {
    require(f.source == g.source, "column blocks need a common source");
    AddObject y = f.target.concat(g.target);
    AddMorphism r = cat.zero_morphism(f.source, y);
    for (size_t i = 0; i < f.target.size(); ++i)
        for (size_t j = 0; j < f.source.size(); ++j) cat.set_block(r, i, j, cat.block(f, i, j));
    for (size_t i = 0; i < g.target.size(); ++i)
        for (size_t j = 0; j < g.source.size(); ++j)
            cat.set_block(r, f.target.size() + i, j, cat.block(g, i, j));
    return r;
}

/// Row (f , g) : X1 (+) X2 -> Y.
inline AddMorphism block_row(const AddCategory& cat, const AddMorphism& f, const AddMorphism& g) {
    require(f.target == g.target, "row blocks need a common target");
    AddObject x = f.source.concat(g.source);
    AddMorphism r = cat.zero_morphism(x, f.target);
    for (size_t i = 0; i < f.target.size(); ++i) {
        for (size_t j = 0; j < f.source.size(); ++j) cat.set_block(r, i, j, cat.block(f, i, j));
        for (size_t j = 0; j < g.source.size(); ++j)
            cat.set_block(r, i, f.source.size() + j, cat.block(g, i, j));
    }
    return r;
}

inline AddMorphism direct_sum(const AddCategory& cat, const AddMorphism& f, const AddMorphism& g) {
    return block_2x2(cat, f.source, g.source, f.target, g.target, &f, nullptr, nullptr, &g);
}

} // namespace fpcat

#endif
