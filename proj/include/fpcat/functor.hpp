// Additive functors, natural transformations, equivalence witnesses and the
// skeleton construction.
//
// A functor is specified on base objects and base Hom spaces only and is
// extended additively: objects map summand-wise by concatenation, morphisms
// map block-wise through the per-pair coordinate matrices.

#ifndef FPCAT_FUNCTOR_HPP
#define FPCAT_FUNCTOR_HPP

#include <memory>

#include "fpcat/category.hpp"

namespace fpcat {

using CategoryRef = std::shared_ptr<const AddCategory>;

class AddFunctor {
  public:
    AddFunctor() = default;
    AddFunctor(CategoryRef src, CategoryRef dst, std::vector<AddObject> obj_map,
               std::vector<std::vector<FMatrix>> hom_map)
        : src_(std::move(src)), dst_(std::move(dst)), obj_(std::move(obj_map)),
          hom_(std::move(hom_map)) {
        require(obj_.size() == src_->base_count(), "functor object map size");
        require(hom_.size() == src_->base_count(), "functor hom map size");
        for (auto& row : hom_) require(row.size() == src_->base_count(), "functor hom map size");
    }

    static AddFunctor identity(CategoryRef cat) {
        std::vector<AddObject> obj;
        std::vector<std::vector<FMatrix>> hom(cat->base_count(),
                                              std::vector<FMatrix>(cat->base_count()));
        for (size_t a = 0; a < cat->base_count(); ++a) obj.push_back(AddObject::base(a));
        for (size_t a = 0; a < cat->base_count(); ++a)
            for (size_t b = 0; b < cat->base_count(); ++b)
                hom[a][b] = FMatrix::identity(cat->field(), cat->base_hom_dim(a, b));
        return AddFunctor(cat, cat, std::move(obj), std::move(hom));
    }

    const CategoryRef& source() const { return src_; }
    const CategoryRef& target() const { return dst_; }
    const AddObject& base_image(size_t a) const { return obj_[a]; }
    const FMatrix& base_hom_matrix(size_t a, size_t b) const { return hom_[a][b]; }

    AddObject map_object(const AddObject& x) const {
        AddObject r;
        for (size_t s : x.summands) r = r.concat(obj_[s]);
        return r;
    }

    AddMorphism map_morphism(const AddMorphism& f) const {
        AddObject fx = map_object(f.source), fy = map_object(f.target);
        AddMorphism r = dst_->zero_morphism(fx, fy);
        // group offsets of each original summand inside the image object
        std::vector<size_t> col_off(f.source.size() + 1, 0);
        for (size_t j = 0; j < f.source.size(); ++j)
            col_off[j + 1] = col_off[j] + obj_[f.source.summands[j]].size();
        std::vector<size_t> row_off(f.target.size() + 1, 0);
        for (size_t i = 0; i < f.target.size(); ++i)
            row_off[i + 1] = row_off[i] + obj_[f.target.summands[i]].size();
        for (size_t i = 0; i < f.target.size(); ++i)
            for (size_t j = 0; j < f.source.size(); ++j) {
                size_t a = f.source.summands[j], b = f.target.summands[i];
                FVector img = hom_[a][b].apply(src_->block(f, i, j));
                AddMorphism piece = dst_->make_morphism(obj_[a], obj_[b], img);
                for (size_t s = 0; s < obj_[b].size(); ++s)
                    for (size_t t = 0; t < obj_[a].size(); ++t)
                        dst_->set_block(r, row_off[i] + s, col_off[j] + t,
                                        dst_->block(piece, s, t));
            }
        return r;
    }

    /// Matrix of Hom(x,y) -> Hom(Fx,Fy) for arbitrary objects of the closure.
    FMatrix hom_matrix(const AddObject& x, const AddObject& y) const {
        size_t dom = src_->hom_dim(x, y);
        std::vector<FVector> cols;
        cols.reserve(dom);
        for (size_t t = 0; t < dom; ++t)
            cols.push_back(map_morphism(src_->basis_morphism(x, y, t)).coords);
        return FMatrix::from_columns(dst_->field(), dst_->hom_dim(map_object(x), map_object(y)),
                                     cols);
    }

    /// Identity and composition preservation on all base data.
    ValidationReport validate() const {
        ValidationReport rep;
        for (size_t a = 0; a < src_->base_count(); ++a) {
            AddMorphism ida = src_->identity(AddObject::base(a));
            if (map_morphism(ida) != dst_->identity(obj_[a]))
                rep.add("functor-identity", "F(1_" + src_->name(a) + ") != 1_F" + src_->name(a));
        }
        for (size_t a = 0; a < src_->base_count(); ++a)
            for (size_t b = 0; b < src_->base_count(); ++b)
                for (size_t c = 0; c < src_->base_count(); ++c)
                    for (size_t jf = 0; jf < src_->base_hom_dim(a, b); ++jf)
                        for (size_t jg = 0; jg < src_->base_hom_dim(b, c); ++jg) {
                            AddMorphism f =
                                src_->basis_morphism(AddObject::base(a), AddObject::base(b), jf);
                            AddMorphism g =
                                src_->basis_morphism(AddObject::base(b), AddObject::base(c), jg);
                            if (map_morphism(src_->compose(g, f)) !=
                                dst_->compose(map_morphism(g), map_morphism(f)))
                                rep.add("functor-composition",
                                        "F(gf) != F(g)F(f) at (" + src_->name(a) + "," +
                                            src_->name(b) + "," + src_->name(c) + ") basis (" +
                                            std::to_string(jg) + "," + std::to_string(jf) + ")");
                        }
        return rep;
    }

  private:
    CategoryRef src_, dst_;
    std::vector<AddObject> obj_;
    std::vector<std::vector<FMatrix>> hom_;
};

inline AddFunctor compose_functors(const AddFunctor& outer, const AddFunctor& inner) {
    require(inner.target() == outer.source(), "functor composition category mismatch");
    std::vector<AddObject> obj;
    const AddCategory& src = *inner.source();
    std::vector<std::vector<FMatrix>> hom(src.base_count(),
                                          std::vector<FMatrix>(src.base_count()));
    for (size_t a = 0; a < src.base_count(); ++a)
        obj.push_back(outer.map_object(inner.base_image(a)));
    for (size_t a = 0; a < src.base_count(); ++a)
        for (size_t b = 0; b < src.base_count(); ++b) {
            std::vector<FVector> cols;
            for (size_t t = 0; t < src.base_hom_dim(a, b); ++t) {
                AddMorphism m = outer.map_morphism(
                    inner.map_morphism(src.basis_morphism(AddObject::base(a), AddObject::base(b), t)));
                cols.push_back(m.coords);
            }
            hom[a][b] = FMatrix::from_columns(outer.target()->field(),
                                              outer.target()->hom_dim(obj[a], obj[b]), cols);
        }
    return AddFunctor(inner.source(), outer.target(), std::move(obj), std::move(hom));
}

/// Natural transformation F => G with one component per base object of the
/// common source; components at direct sums are assembled diagonally.
class NatTransform {
  public:
    NatTransform() = default;
    NatTransform(AddFunctor f, AddFunctor g, std::vector<AddMorphism> components)
        : f_(std::move(f)), g_(std::move(g)), comp_(std::move(components)) {
        require(f_.source() == g_.source() && f_.target() == g_.target(),
                "natural transformation needs parallel functors");
        require(comp_.size() == f_.source()->base_count(), "component count");
        for (size_t a = 0; a < comp_.size(); ++a) {
            require(comp_[a].source == f_.base_image(a), "component source mismatch");
            require(comp_[a].target == g_.base_image(a), "component target mismatch");
        }
    }

    static NatTransform identity(const AddFunctor& f) {
        std::vector<AddMorphism> comps;
        for (size_t a = 0; a < f.source()->base_count(); ++a)
            comps.push_back(f.target()->identity(f.base_image(a)));
        return NatTransform(f, f, std::move(comps));
    }

    const AddFunctor& from() const { return f_; }
    const AddFunctor& to() const { return g_; }
    const AddMorphism& base_component(size_t a) const { return comp_[a]; }

    AddMorphism at(const AddObject& x) const {
        const AddCategory& dst = *f_.target();
        AddObject fx = f_.map_object(x), gx = g_.map_object(x);
        AddMorphism r = dst.zero_morphism(fx, gx);
        size_t row = 0, col = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            const AddMorphism& c = comp_[x.summands[i]];
            for (size_t s = 0; s < c.target.size(); ++s)
                for (size_t t = 0; t < c.source.size(); ++t)
                    dst.set_block(r, row + s, col + t, dst.block(c, s, t));
            row += c.target.size();
            col += c.source.size();
        }
        return r;
    }

    bool componentwise_invertible() const {
        for (const auto& c : comp_)
            if (!f_.target()->is_invertible(c)) return false;
        return true;
    }

    NatTransform inverted() const {
        std::vector<AddMorphism> comps;
        for (const auto& c : comp_) {
            auto inv = f_.target()->inverse(c);
            require(inv.has_value(), "component not invertible");
            comps.push_back(*inv);
        }
        return NatTransform(g_, f_, std::move(comps));
    }

    /// Naturality squares on all base morphisms: eta_b o F(f) = G(f) o eta_a.
    ValidationReport validate_naturality() const {
        ValidationReport rep;
        const AddCategory& src = *f_.source();
        const AddCategory& dst = *f_.target();
        for (size_t a = 0; a < src.base_count(); ++a)
            for (size_t b = 0; b < src.base_count(); ++b)
                for (size_t t = 0; t < src.base_hom_dim(a, b); ++t) {
                    AddMorphism f = src.basis_morphism(AddObject::base(a), AddObject::base(b), t);
                    AddMorphism lhs = dst.compose(comp_[b], f_.map_morphism(f));
                    AddMorphism rhs = dst.compose(g_.map_morphism(f), comp_[a]);
                    if (lhs != rhs)
                        rep.add("naturality", "square fails at basis " + std::to_string(t) +
                                                  " of Hom(" + src.name(a) + "," + src.name(b) +
                                                  ")");
                }
        return rep;
    }

  private:
    AddFunctor f_, g_;
    std::vector<AddMorphism> comp_;
};

/// (F, G, unit Phi: Id => FG, counit Psi: GF => Id) with invertible components
/// and the counit-unit equations.
struct EquivalenceWitness {
    AddFunctor F; // C -> C'
    AddFunctor G; // C' -> C
    NatTransform unit;   // Id_{C'} => F o G, components indexed by base objects of C'
    NatTransform counit; // G o F => Id_C, components indexed by base objects of C

    const CategoryRef& source() const { return F.source(); }
    const CategoryRef& target() const { return F.target(); }

    static EquivalenceWitness identity(CategoryRef cat) {
        AddFunctor id = AddFunctor::identity(cat);
        return {id, id, NatTransform::identity(id), NatTransform::identity(id)};
    }
};

inline ValidationReport validate_equivalence(const EquivalenceWitness& w, const Universe& u_src) {
    ValidationReport rep;
    auto merge = [&](const ValidationReport& r, const std::string& prefix) {
        for (const auto& i : r.issues) rep.add(prefix + "/" + i.where, i.what);
    };
    merge(w.F.validate(), "F");
    merge(w.G.validate(), "G");
    if (!rep.ok()) return rep;

    const AddCategory& c = *w.F.source();
    const AddCategory& cp = *w.F.target();
    merge(w.unit.validate_naturality(), "unit");
    merge(w.counit.validate_naturality(), "counit");
    for (size_t a = 0; a < cp.base_count(); ++a)
        if (!cp.is_invertible(w.unit.base_component(a)))
            rep.add("unit", "component at " + cp.name(a) + " not invertible");
    for (size_t a = 0; a < c.base_count(); ++a)
        if (!c.is_invertible(w.counit.base_component(a)))
            rep.add("counit", "component at " + c.name(a) + " not invertible");
    if (!rep.ok()) return rep;

    // Triangle identities: F Psi o Phi_F = 1_F and Psi_G o G Phi = 1_G.
    for (size_t x = 0; x < c.base_count(); ++x) {
        AddObject fx = w.F.base_image(x);
        AddMorphism lhs = cp.compose(w.F.map_morphism(w.counit.base_component(x)), w.unit.at(fx));
        if (lhs != cp.identity(fx))
            rep.add("triangle", "F(Psi) o Phi_F != 1 at " + c.name(x));
    }
    for (size_t y = 0; y < cp.base_count(); ++y) {
        AddObject gy = w.G.base_image(y);
        AddMorphism lhs = c.compose(w.counit.at(gy), w.G.map_morphism(w.unit.base_component(y)));
        if (lhs != c.identity(gy))
            rep.add("triangle", "Psi_G o G(Phi) != 1 at " + cp.name(y));
    }

    // Derived consequence: F fully faithful on every universe Hom space.
    for (const AddObject& x : u_src.objects)
        for (const AddObject& y : u_src.objects) {
            FMatrix m = w.F.hom_matrix(x, y);
            size_t d = c.hom_dim(x, y);
            if (rank(m) != d || m.rows() != d)
                rep.add("fully-faithful", "Hom(" + c.object_name(x) + "," + c.object_name(y) +
                                              ") does not map bijectively");
        }
    return rep;
}

// ---- Skeletons ----

struct SkeletonResult {
    CategoryRef skeleton;
    EquivalenceWitness witness; // F: C -> skeleton, G: inclusion
    std::vector<std::vector<AddObject>> iso_classes; // partition of the universe
    std::vector<AddObject> class_reps;               // canonically least per class
};

/// Full subcategory of the base category on one representative base object
/// per isomorphism class, together with the retraction/inclusion equivalence.
/// Universe objects are partitioned as a whole; base-object representatives
/// are the canonically least singletons of their classes.
inline SkeletonResult compute_skeleton(CategoryRef cat, const Universe& u) {
    const AddCategory& c = *cat;
    SkeletonResult out;

    std::vector<int> cls(u.objects.size(), -1);
    for (size_t i = 0; i < u.objects.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(out.iso_classes.size());
        out.iso_classes.push_back({u.objects[i]});
        out.class_reps.push_back(u.objects[i]); // universe order = canonical order
        for (size_t j = i + 1; j < u.objects.size(); ++j) {
            if (cls[j] >= 0) continue;
            if (c.isomorphic(u.objects[i], u.objects[j])) {
                cls[j] = cls[i];
                out.iso_classes[cls[i]].push_back(u.objects[j]);
            }
        }
    }

    auto rep_of = [&](const AddObject& x) -> const AddObject& {
        for (size_t i = 0; i < u.objects.size(); ++i)
            if (u.objects[i] == x) return out.class_reps[cls[i]];
        throw Error("object not in universe: " + c.object_name(x));
    };

    // Representative base objects: the rep of [a] is zero or a singleton
    // because singletons precede longer lists in canonical order.
    std::vector<size_t> skel_bases; // base indices of C, increasing
    for (size_t a = 0; a < c.base_count(); ++a) {
        const AddObject& r = rep_of(AddObject::base(a));
        if (r.is_zero()) continue;
        require(r.size() == 1, "singleton class representative expected");
        if (std::find(skel_bases.begin(), skel_bases.end(), r.summands[0]) == skel_bases.end())
            skel_bases.push_back(r.summands[0]);
    }
    std::sort(skel_bases.begin(), skel_bases.end());

    size_t m = skel_bases.size();
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> homs(m, std::vector<size_t>(m));
    std::vector<std::vector<std::vector<FMatrix>>> comp(
        m, std::vector<std::vector<FMatrix>>(m, std::vector<FMatrix>(m)));
    std::vector<FVector> ids;
    for (size_t i = 0; i < m; ++i) names.push_back(c.name(skel_bases[i]));
    for (size_t i = 0; i < m; ++i) ids.push_back(c.base_identity(skel_bases[i]));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) homs[i][j] = c.base_hom_dim(skel_bases[i], skel_bases[j]);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t cc = 0; cc < m; ++cc) {
                std::vector<FVector> cols;
                size_t ga = skel_bases[a], gb = skel_bases[b], gc = skel_bases[cc];
                for (size_t k = 0; k < c.base_hom_dim(gb, gc); ++k)
                    for (size_t j = 0; j < c.base_hom_dim(ga, gb); ++j) {
                        FVector g(c.base_hom_dim(gb, gc), 0), f(c.base_hom_dim(ga, gb), 0);
                        g[k] = 1;
                        f[j] = 1;
                        cols.push_back(c.base_compose(ga, gb, gc, g, f));
                    }
                comp[a][b][cc] =
                    FMatrix::from_columns(c.field(), c.base_hom_dim(ga, gc), cols);
            }
    auto skel = std::make_shared<AddCategory>(c.field(), std::move(names), std::move(homs),
                                              std::move(comp), std::move(ids));
    out.skeleton = skel;

    auto skel_index = [&](size_t base_of_c) {
        auto it = std::find(skel_bases.begin(), skel_bases.end(), base_of_c);
        require(it != skel_bases.end(), "representative missing from skeleton");
        return static_cast<size_t>(it - skel_bases.begin());
    };

    // Chosen connecting iso [a] -> rep([a]) in C; the identity when a is its
    // own representative, so the triangle identities hold exactly.
    std::vector<AddMorphism> phi(c.base_count());
    for (size_t a = 0; a < c.base_count(); ++a) {
        const AddObject& r = rep_of(AddObject::base(a));
        if (r == AddObject::base(a)) {
            phi[a] = c.identity(r);
        } else {
            const auto& isos = c.isomorphisms(AddObject::base(a), r);
            require(!isos.empty(), "missing connecting isomorphism");
            phi[a] = isos.front();
        }
    }

    // F : C -> skeleton, conjugation by the chosen isos.
    std::vector<AddObject> f_obj(c.base_count());
    std::vector<std::vector<FMatrix>> f_hom(c.base_count(),
                                            std::vector<FMatrix>(c.base_count()));
    for (size_t a = 0; a < c.base_count(); ++a) {
        const AddObject& r = rep_of(AddObject::base(a));
        f_obj[a] = r.is_zero() ? AddObject::zero() : AddObject::base(skel_index(r.summands[0]));
    }
    for (size_t a = 0; a < c.base_count(); ++a)
        for (size_t b = 0; b < c.base_count(); ++b) {
            std::vector<FVector> cols;
            auto inv_a = c.inverse(phi[a]);
            for (size_t t = 0; t < c.base_hom_dim(a, b); ++t) {
                AddMorphism bas = c.basis_morphism(AddObject::base(a), AddObject::base(b), t);
                AddMorphism conj = c.compose(phi[b], c.compose(bas, *inv_a));
                cols.push_back(conj.coords); // same coordinates in the skeleton
            }
            f_hom[a][b] = FMatrix::from_columns(
                c.field(), skel->hom_dim(f_obj[a], f_obj[b]), cols);
        }
    AddFunctor F(cat, skel, std::move(f_obj), std::move(f_hom));

    // G : skeleton -> C, the inclusion.
    std::vector<AddObject> g_obj(m);
    std::vector<std::vector<FMatrix>> g_hom(m, std::vector<FMatrix>(m));
    for (size_t i = 0; i < m; ++i) g_obj[i] = AddObject::base(skel_bases[i]);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            g_hom[i][j] = FMatrix::identity(c.field(), skel->base_hom_dim(i, j));
    AddFunctor G(skel, cat, std::move(g_obj), std::move(g_hom));

    // Unit at the representative r is the identity; counit at a is phi_a^{-1}.
    std::vector<AddMorphism> unit_comps;
    for (size_t i = 0; i < m; ++i) unit_comps.push_back(skel->identity(AddObject::base(i)));
    std::vector<AddMorphism> counit_comps;
    for (size_t a = 0; a < c.base_count(); ++a) counit_comps.push_back(*c.inverse(phi[a]));

    out.witness = EquivalenceWitness{
        F, G,
        NatTransform(AddFunctor::identity(skel), compose_functors(F, G), std::move(unit_comps)),
        NatTransform(compose_functors(G, F), AddFunctor::identity(cat), std::move(counit_comps))};
    return out;
}

struct SkeletalInverseResult {
    bool ok = false;
    std::vector<std::string> violations;
    AddFunctor inverse; // only meaningful when ok
};

/// Strict inverse of an endofunctor-like equivalence between skeletal
/// categories: base objects must map bijectively to singletons and every base
/// Hom matrix must be invertible; then G F = Id and F G = Id on the nose.
inline SkeletalInverseResult skeletal_inverse(const AddFunctor& f) {
    SkeletalInverseResult out;
    const AddCategory& src = *f.source();
    const AddCategory& dst = *f.target();
    std::vector<int> preimage(dst.base_count(), -1);
    for (size_t a = 0; a < src.base_count(); ++a) {
        const AddObject& img = f.base_image(a);
        if (img.size() != 1) {
            out.violations.push_back("image of " + src.name(a) +
                                     " is not a single base object; functor cannot be strictly "
                                     "invertible on objects");
            continue;
        }
        size_t b = img.summands[0];
        if (preimage[b] >= 0)
            out.violations.push_back("objects " + src.name(preimage[b]) + " and " + src.name(a) +
                                     " collide at " + dst.name(b));
        preimage[b] = static_cast<int>(a);
    }
    for (size_t b = 0; b < dst.base_count(); ++b)
        if (preimage[b] < 0)
            out.violations.push_back("object " + dst.name(b) + " has no preimage");
    if (!out.violations.empty()) return out;

    std::vector<AddObject> g_obj(dst.base_count());
    std::vector<std::vector<FMatrix>> g_hom(dst.base_count(),
                                            std::vector<FMatrix>(dst.base_count()));
    for (size_t b = 0; b < dst.base_count(); ++b)
        g_obj[b] = AddObject::base(static_cast<size_t>(preimage[b]));
    for (size_t b1 = 0; b1 < dst.base_count(); ++b1)
        for (size_t b2 = 0; b2 < dst.base_count(); ++b2) {
            size_t a1 = static_cast<size_t>(preimage[b1]), a2 = static_cast<size_t>(preimage[b2]);
            const FMatrix& m = f.base_hom_matrix(a1, a2);
            if (m.rows() != m.cols() || rank(m) != m.rows()) {
                out.violations.push_back("Hom(" + src.name(a1) + "," + src.name(a2) +
                                         ") does not map bijectively");
                return out;
            }
            // invert by solving M X = I column by column
            std::vector<FVector> cols;
            for (size_t t = 0; t < m.rows(); ++t) {
                FVector e(m.rows(), 0);
                e[t] = 1;
                cols.push_back(*solve_linear(m, e));
            }
            g_hom[b1][b2] = FMatrix::from_columns(dst.field(), m.cols(), cols);
        }
    out.inverse = AddFunctor(f.target(), f.source(), std::move(g_obj), std::move(g_hom));
    out.ok = true;
    return out;
}

/// Replace the counit so that the counit-unit equations hold exactly, using
/// full faithfulness of F: Psi_X is the unique u with F(u) = Phi_{FX}^{-1}.
inline EquivalenceWitness normalize_counit(const EquivalenceWitness& w) {
    const AddCategory& c = *w.F.source();
    std::vector<AddMorphism> comps;
    for (size_t x = 0; x < c.base_count(); ++x) {
        AddObject gfx = w.G.map_object(w.F.base_image(x));
        AddMorphism phi_fx = w.unit.at(w.F.base_image(x)); // FX -> FGFX
        FMatrix m = w.F.hom_matrix(AddObject::base(x), gfx);
        auto u = solve_linear(m, phi_fx.coords);
        require(u.has_value(), "normalize_counit: unit component not in the image of F");
        AddMorphism ux = c.make_morphism(AddObject::base(x), gfx, *u);
        auto inv = c.inverse(ux);
        require(inv.has_value(), "normalize_counit: derived component not invertible");
        comps.push_back(*inv);
    }
    EquivalenceWitness out = w;
    out.counit = NatTransform(compose_functors(w.G, w.F), AddFunctor::identity(w.F.source()),
                              std::move(comps));
    return out;
}

} // namespace fpcat

#endif
