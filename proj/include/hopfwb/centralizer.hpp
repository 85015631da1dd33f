#pragma once

#include "hopfwb/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfwb {

/// F : LMod_H -> D, either the forgetful functor to R-bimodules or the
/// identity of LMod_H. Both are strict monoidal in our presentations: F(V (x) W)
/// and F(V) (x) F(W) carry the same quotient presentation, so xi = id.
enum class FunctorKind { Restrict, Identity };
std::string_view to_string(FunctorKind k);

/// An object of D. `h` is filled only for FunctorKind::Identity.
struct TObject {
    std::size_t dim = 0;
    Bimodule bim;
    HModule h;
};

struct TTensor {
    TensorProduct carrier;
    TObject obj;
};

/// Left inner hom in D with its evaluation hev : X (x) [X,Y] -> Y.
struct TInnerHom {
    TObject carrier;
    Mat underlying; // column j: vectorised y x x map x -> hev(x (x) e_j)
    TensorProduct eval_domain;
    Mat hev;
    std::optional<InnerHom> bim;
    std::optional<InnerHomH> hmod;
};

class Target {
public:
    Target(Bialgebroid b, FunctorKind kind) : b_(std::move(b)), kind_(kind) {}

    const Bialgebroid& bialgebroid() const { return b_; }
    FunctorKind kind() const { return kind_; }
    const Field& field() const { return b_.field(); }
    std::string name() const;

    TObject apply(const HModule& v) const;
    TObject unit() const { return apply(unit_module(b_)); }
    TObject regular() const { return apply(regular_module(b_)); }
    TTensor tensor(const TObject& a, const TObject& c) const;
    Subspace morphisms(const TObject& a, const TObject& c) const;
    bool is_morphism(const TObject& a, const TObject& c, const Mat& f) const;
    /// Quotient object by a subobject (basis columns); throws if not a subobject.
    TObject quotient(const TObject& a, const Subquotient& q) const;
    /// Subobject generated by the columns of v.
    Subspace generated(const TObject& a, const Mat& v) const;

    Mat left_unitor(const TObject& x, const TTensor& ix) const;
    Mat right_unitor(const TObject& x, const TTensor& xi) const;
    /// r : R (x)_k X -> X, a (x) x -> a.x (ambient left action).
    Mat left_action(const TObject& x) const;

    TInnerHom inner_hom(const TObject& x, const TObject& y) const;
    /// hcoev : Y -> [X, X (x) Y].
    Mat hcoev(const TObject& x, const TObject& y, const TTensor& xy, const TInnerHom& hom) const;

private:
    Bialgebroid b_;
    FunctorKind kind_;
};

/// (X, c_H) with c_H : X (x) F(H) -> F(H) (x) X the component at the regular
/// module; all other components are induced from it.
struct HalfBraidedObject {
    std::string label;
    TObject x;
    Mat c;
};

CheckReport check_half_braiding(const Target& t, const HalfBraidedObject& obj);

/// Solves C * a = rhs for C when a is surjective; throws IllDefinedAction
/// when rhs does not vanish on ker(a).
Mat solve_through_epi(const Mat& a, const Mat& rhs);

/// c_{X,V} induced through the epimorphism H^m -> V given by generators (columns).
Mat induce_component_with(const Target& t, const HalfBraidedObject& obj, const HModule& v, const Mat& generators);
/// As above with greedy module generators, recomputed with all basis vectors
/// as a second presentation; throws IllDefinedAction if they disagree.
Mat induce_component(const Target& t, const HalfBraidedObject& obj, const HModule& v);

HalfBraidedObject tensor_braided(const Target& t, const HalfBraidedObject& a, const HalfBraidedObject& c);
/// c_{X, lT}^{-1} from the zig-zag with ev/db of a rigid T; throws Singular if it
/// is not a two-sided inverse.
Mat invert_braiding_at_dual(const Target& t, const HalfBraidedObject& obj, const RigidWitness& w);

/// Invertibility of induced components on a family of H-modules.
CheckReport is_central(const Target& t, const HalfBraidedObject& obj, const std::vector<HModule>& family);

/// Morphisms of half-braided objects.
Subspace wlc_morphisms(const Target& t, const HalfBraidedObject& a, const HalfBraidedObject& c);

HalfBraidedObject unit_object(const Target& t);
/// c(x (x) v) = sum delta(x)[h, x'] (h.v) (x) x' for a lift of a coaction
/// delta : X -> H (x)_k X (columns). Throws IllDefinedAction without descent.
HalfBraidedObject coaction_object(const Target& t, std::string label, const TObject& x, const Mat& coaction);
/// X = H with left and right actions through s and c(x (x) v) = x_(1) v (x) x_(2).
HalfBraidedObject regular_comodule_object(const Target& t);
/// Identity functor: X = H with h |> x = h_+ x h_- and coaction Delta. Only
/// returned when the action is well defined and the checks pass.
std::optional<HalfBraidedObject> adjoint_regular_object(const Target& t);
/// X = H regular with coaction x -> x_+(1) x_- (x) x_+(2) from the translation map.
std::optional<HalfBraidedObject> coadjoint_object(const Target& t);
/// Quotient by the half-braided subobject generated by v, if proper and valid.
std::optional<HalfBraidedObject> quotient_object(const Target& t, const HalfBraidedObject& obj, const Mat& v);

HalfBraidedObject direct_sum_object(const Target& t, const HalfBraidedObject& a, const HalfBraidedObject& c);

/// Unit, a regular object, then proper quotients; only objects passing
/// check_half_braiding are kept.
std::vector<HalfBraidedObject> braided_test_grid(const Target& t, std::size_t size);

/// WRC(F) over B is WLC(F) over the coopposite, with tensor factors swapped.
/// Converts an invertible left half-braiding into the left half-braiding of the
/// coopposite target given by its inverse.
Target coopposite_target(const Target& t);
HalfBraidedObject mirror_object(const Target& t, const Target& cop, const HalfBraidedObject& obj);

} // namespace hopfwb
