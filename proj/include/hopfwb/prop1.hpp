#pragma once

#include "hopfwb/centralizer.hpp"

namespace hopfwb {

class NonUnique : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves a * x = b when a has full column rank, by inverting a maximal
/// independent set of rows and checking the rest. Throws NonUnique if a has
/// a kernel and NoSolution if b is not in the image.
Mat solve_injective(const Mat& a, const Mat& b);

struct HomBraidingOptions {
    /// Also build c from the explicit zig-zag and compare.
    bool zigzag_cross_check = false;
};

/// Component c_{[X,Y],T} of the half-braiding on the inner hom, the unique
/// solution of the defining square against every x (x) l (x) phi (x) u:
///   ev_Y-path:  X lU [X,Y] U -> lU X [X,Y] U -> lU Y U -> lU U Y -> Y
///   c-path:     X lU [X,Y] U -> X lU U [X,Y] -> X [X,Y] -> Y
/// Throws NonUnique or NoSolution when rigidity or naturality is broken.
Mat hom_half_braiding(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y, const TInnerHom& hom,
                      const RigidWitness& w, const HomBraidingOptions& opts = {});

struct HomObject {
    HalfBraidedObject obj;
    TInnerHom hom;
};

/// Rigid witness for the regular module; throws when it is not rigid.
RigidWitness regular_witness(const Bialgebroid& b);

/// Inner hom [X,Y] of the target category with the half-braiding at T = Hreg.
HomObject hom_object_in_WLC(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y,
                            const HomBraidingOptions& opts = {});
HomObject hom_object_in_WLC(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y,
                            const RigidWitness& regular, const HomBraidingOptions& opts = {});

/// (i) hev : X (x) [X,Y] -> Y and (ii) hcoev : Y -> [X, X (x) Y] are
/// morphisms of half-braided objects.
CheckReport verify_adjunction_morphisms(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y,
                                        const HomObject& h, const RigidWitness& regular);

/// The hev/hcoev square with an arbitrary candidate braiding on [X,Y]; used
/// to show that corrupting c is detected.
CheckReport verify_hev_square(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y,
                              const HomObject& h);

/// WLC(X (x) V, Y) = WLC(V, [X,Y]) for every V of the family: dimensions and
/// currying as an explicit bijection.
CheckReport check_wlc_adjunction(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y,
                                 const HomObject& h, const std::vector<HalfBraidedObject>& family);

struct Extension {
    Mat c;
    CheckReport report;
};

/// c_{X,M} for an arbitrary finite-dimensional M through two presentations
/// by free modules, with naturality against Hom_H(H, M), Hom_H(M, M) and
/// Hom_H(M, unit).
Extension extend_half_braiding(const Target& t, const HalfBraidedObject& obj, const HModule& m);

} // namespace hopfwb
