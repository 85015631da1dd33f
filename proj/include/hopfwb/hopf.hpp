#pragma once

#include "hopfwb/bialgebroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfwb {

/// beta : H (x)_{R^op} H -> H (x)_R H, g (x) h -> g_(1) (x) g_(2) h.
/// Domain relation: g t(a) (x) h = g (x) t(a) h.
struct GaloisMap {
    Subquotient domain;
    Mat ambient; // H (x)_k H -> H (x)_k H
    Mat matrix;  // codomain quotient x domain quotient
};

/// Throws IllDefinedAction if beta does not descend.
GaloisMap galois_map(const Bialgebroid& b);

/// For each basis element h a lift h_+ (x) h_- in H (x)_k H of beta^{-1}(h (x) 1).
struct TranslationMap {
    std::vector<Mat> lifts;
};

struct HopfVerdict {
    bool hopf = false;
    std::size_t rank = 0;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::optional<TranslationMap> translation;
    /// When not Hopf: a kernel vector of beta (domain coordinates) if any,
    /// and a codomain vector outside the image if any.
    Mat kernel_witness;
    Mat cokernel_witness;
};

HopfVerdict is_hopf(const Bialgebroid& b);
/// is_hopf of the coopposite.
HopfVerdict is_anti_hopf(const Bialgebroid& b);
CheckReport check_translation_map(const Bialgebroid& b, const TranslationMap& tm);
CheckReport hopf_report(const HopfVerdict& v, std::string id);

/// Projectivity of H as a left R^op-module (through t) and as a left
/// R-module (through s).
struct Finiteness {
    ProjectivityResult left;
    ProjectivityResult right;
};
Finiteness finiteness(const Bialgebroid& b);

/// Inner hom in LMod_H.
///   Left:  hom_l(X,Y) = Hom_H(X (x)_R H, Y), (h.phi)(x (x) k) = phi(x (x) k h),
///          eval = hev : X (x)_R hom_l -> Y, x (x) phi -> phi(x (x) 1).
///   Right: hom_r(X,Y) = Hom_H(H (x)_R X, Y), (h.phi)(k (x) x) = phi(k h (x) x),
///          eval = ev : hom_r (x)_R X -> Y, phi (x) x -> phi(1 (x) x).
struct InnerHomH {
    Side side = Side::Left;
    std::size_t x_dim = 0;
    std::size_t y_dim = 0;
    HTensor with_regular; // X (x) H or H (x) X
    Subspace maps;        // vectorised y_dim x with_regular.dim maps
    HModule carrier;
    HTensor eval_domain;
    Mat eval;

    Mat as_map(const Mat& carrier_vector) const;
    Mat coordinates_of(const Mat& map) const;
    /// The k-linear map X -> Y underlying a carrier vector (phi(x (x) 1) or
    /// phi(1 (x) x)).
    Mat underlying(const Bialgebroid& b, const Mat& carrier_vector) const;
};

InnerHomH inner_hom_H(const Bialgebroid& b, const HModule& x, const HModule& y, Side side);
/// hcoev : Y -> hom_l(X, X (x) Y), y -> (x (x) h -> x (x) h y), where
/// `hom` = inner_hom_H(X, X (x) Y, Left) and xy its target tensor.
Mat hcoev(const Bialgebroid& b, const HModule& x, const HModule& y, const HTensor& xy, const InnerHomH& hom);
/// coev : Y -> hom_r(X, Y (x) X), y -> (h (x) x -> h y (x) x).
Mat coev(const Bialgebroid& b, const HModule& x, const HModule& y, const HTensor& yx, const InnerHomH& hom);

/// Hom_H(X (x) W, Y) = Hom_H(W, hom_l(X,Y)) (and the mirror), via uncurrying.
CheckReport check_hom_adjunction_H(const Bialgebroid& b, const HModule& x, const HModule& y, const HModule& w, Side side);

/// Canonical morphism restrict(hom^H(X,Y)) -> hom^{R^e}(restrict X, restrict Y)
/// and its bijectivity.
CheckReport check_hom_preservation(const Bialgebroid& b, const HModule& x, const HModule& y, Side side);

/// Regular module, unit module and quotients of the regular module by
/// principal submodules (generated by basis vectors and pairwise sums and
/// differences), deduplicated, at most max_members.
std::vector<HModule> hom_test_family(const Bialgebroid& b, std::size_t max_members = 6);

struct RigidWitness {
    HModule object;
    HModule dual;
    Mat ev; // dual (x)_R object -> unit
    Mat db; // unit -> object (x)_R dual
};

struct DualResult {
    std::optional<RigidWitness> witness;
    std::string reason;
    bool rigid() const { return witness.has_value(); }
};

/// Where duals are sought. Projective: the rigid source category of
/// finitely generated projective H-modules (non-projective P is NotRigid
/// without further search). AllModules: any finite-dimensional H-module.
enum class DualScope { Projective, AllModules };

/// Left dual candidate hom_r(P, I) with ev from the adjunction; db solved
/// from both triangle identities.
DualResult left_dual_module(const Bialgebroid& b, const HModule& p, DualScope scope = DualScope::Projective);

/// Both triangle identities in R-bimodules for the given data.
CheckReport check_triangle_identities(const Algebra& r, const Bimodule& p, const Bimodule& dual, const Mat& ev, const Mat& db);

} // namespace hopfwb
