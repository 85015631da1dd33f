#pragma once

#include "hopfwb/linalg.hpp"
#include "hopfwb/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfwb {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i * e_j = sum_k c(i, j, k) e_k.
class Algebra {
public:
    /// `mul` is the dim x dim^2 matrix sending e_i (x) e_j to e_i e_j.
    /// Throws AlgebraError for dim 0 or inconsistent shapes; the axioms are
    /// not checked here (see check_algebra).
    Algebra(Mat unit, Mat mul);

    const Field& field() const { return unit_.field(); }
    std::size_t dim() const { return unit_.rows(); }
    const Mat& unit() const { return unit_; }
    const Mat& mul() const { return mul_; }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return mul_(k, i * dim() + j); }

    Mat basis(std::size_t i) const { return Mat::unit_vector(field(), dim(), i); }
    Mat product(const Mat& a, const Mat& b) const;
    /// x -> e_i x
    const Mat& left_mul(std::size_t i) const { return left_[i]; }
    /// x -> x e_i
    const Mat& right_mul(std::size_t i) const { return right_[i]; }
    Mat left_mul_by(const Mat& a) const;
    Mat right_mul_by(const Mat& a) const;

    /// Basis indices generating the algebra (valid algebras only).
    const std::vector<std::size_t>& generators() const;

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.unit_ == b.unit_ && a.mul_ == b.mul_; }

private:
    Mat unit_;
    Mat mul_;
    std::vector<Mat> left_;
    std::vector<Mat> right_;
    mutable std::optional<std::vector<std::size_t>> generators_;
};

Algebra opposite(const Algebra& a);
/// R (x) R^op with basis index a * dim R + b for a (x) b.
Algebra enveloping(const Algebra& r);
/// Tensor product of algebras (a (x) b)(c (x) d) = ac (x) bd.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

CheckReport check_algebra(const Algebra& a);

struct AlgebraMap {
    Mat matrix; // target.dim x source.dim
};

CheckReport check_algebra_map(const Algebra& source, const Algebra& target, const AlgebraMap& f, std::string id);

/// Left module over an algebra: action[i] is the matrix of e_i.
struct ModuleObject {
    std::size_t dim = 0;
    std::vector<Mat> action;

    Mat act(const Algebra& a, const Mat& element) const;
};

ModuleObject regular_module(const Algebra& a);
CheckReport check_module(const Algebra& a, const ModuleObject& m);
/// Submodule generated by the columns of v (basis as columns).
Subspace generated_submodule(const Algebra& a, const ModuleObject& m, const Mat& v);
/// A small generating set (vectors as columns), chosen greedily from the basis.
Mat module_generators(const Algebra& a, const ModuleObject& m);
/// Quotient module m / sub.
ModuleObject quotient_module(const ModuleObject& m, const Subquotient& q);

/// An R-bimodule, i.e. a left R^e-module: left[a] is x -> e_a x,
/// right[a] is x -> x e_a.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Mat> left;
    std::vector<Mat> right;

    friend bool operator==(const Bimodule& a, const Bimodule& b) = default;
};

Bimodule regular_bimodule(const Algebra& r);
CheckReport check_bimodule(const Algebra& r, const Bimodule& m);
ModuleObject as_enveloping_module(const Algebra& r, const Bimodule& m);
Bimodule from_enveloping_module(const Algebra& r, const ModuleObject& m);
/// The same space seen as an R^op-bimodule (left and right swapped).
Bimodule swap_sides(const Bimodule& m);

/// Maps f: x -> y with f A_i = B_i f for all pairs, as vectors in row-major
/// vectorisation (index y * dim x + x).
Subspace intertwiners(std::size_t dim_x, std::size_t dim_y, const std::vector<Mat>& on_x, const std::vector<Mat>& on_y);
Subspace bimodule_maps(const Algebra& r, const Bimodule& x, const Bimodule& y);

/// M (x)_R N as a quotient of M (x)_k N by (m.a) (x) n - m (x) (a.n).
struct TensorProduct {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    Subquotient pres;
    Bimodule result;

    std::size_t dim() const { return result.dim; }
    const Mat& proj() const { return pres.proj(); }
    const Mat& sec() const { return pres.sec(); }
};

TensorProduct tensor_over_R(const Algebra& r, const Bimodule& m, const Bimodule& n);
/// Presentation of M (x)_k N modulo (m.a) (x) n - m (x) (a.n), given only the
/// operators of a generating family: right_on_m[i] is m -> m.a_i and
/// left_on_n[i] is n -> a_i.n.
Subquotient balanced_tensor(const Field& field, std::size_t dim_m, std::size_t dim_n,
                            const std::vector<Mat>& right_on_m, const std::vector<Mat>& left_on_n);

/// f (x)_R g between tensor products (all maps in quotient coordinates).
Mat tensor_maps(const TensorProduct& src, const TensorProduct& tgt, const Mat& f, const Mat& g);
/// Induced matrix of an ambient-level map src (x)_k -> tgt (x)_k.
Mat induced(const TensorProduct& src, const TensorProduct& tgt, const Mat& ambient_map);

/// R (x)_R M -> M and M (x)_R R -> M.
Mat left_unitor(const Algebra& r, const Bimodule& m, const TensorProduct& rm);
Mat right_unitor(const Algebra& r, const Bimodule& m, const TensorProduct& mr);
/// (A B) C -> A (B C).
Mat associator(const TensorProduct& ab, const TensorProduct& ab_c, const TensorProduct& bc, const TensorProduct& a_bc);

enum class Side { Left, Right };
std::string_view to_string(Side s);

/// Inner hom in R-bimodules.
///   Left:  hom_l(X,Y) = left-R-linear maps, (a.f.b)(x) = f(x.a).b,
///          eval = hev : X (x)_R hom_l(X,Y) -> Y, x (x) f -> f(x).
///   Right: hom_r(X,Y) = right-R-linear maps, (a.f.b)(x) = a.f(b.x),
///          eval = ev : hom_r(X,Y) (x)_R X -> Y, f (x) x -> f(x).
struct InnerHom {
    Side side = Side::Left;
    std::size_t x_dim = 0;
    std::size_t y_dim = 0;
    Bimodule carrier;
    Subspace maps; // carrier basis as vectorised y x x matrices
    TensorProduct eval_domain;
    Mat eval;

    /// The k-linear map X -> Y of a carrier vector.
    Mat as_map(const Mat& carrier_vector) const;
    /// Carrier coordinates of a k-linear map X -> Y (must lie in the carrier).
    Mat coordinates_of(const Mat& map) const;
};

InnerHom inner_hom_bimod(const Algebra& r, const Bimodule& x, const Bimodule& y, Side side);
/// Rebuilds eval for a hom object whose carrier was altered.
void rebuild_eval(const Algebra& r, const Bimodule& x, InnerHom& hom);

/// Curry g : X (x)_R Z -> Y (left) or Z (x)_R X -> Y (right) into Z -> hom.
Mat curry(const InnerHom& hom, const TensorProduct& xz, std::size_t z_dim, const Mat& g);

CheckReport hom_adjunction_check(const Algebra& r, const Bimodule& x, const Bimodule& y, const Bimodule& z, Side side);
CheckReport hom_adjunction_check(const Algebra& r, const Bimodule& x, const Bimodule& y, const Bimodule& z, const InnerHom& hom);

/// Dual basis {(e_i, phi_i)} of a projective module: sum phi_i(p) . e_i = p.
struct DualBasis {
    std::vector<Mat> elements;     // vectors of P
    std::vector<Mat> functionals;  // A-linear maps P -> A (dim A x dim P)
};

struct ProjectivityResult {
    std::optional<DualBasis> basis;
    Mat epimorphism;         // free cover A^m -> P
    std::string obstruction; // empty when projective

    bool projective() const { return basis.has_value(); }
};

ProjectivityResult dual_basis(const Algebra& a, const ModuleObject& p);
bool verify_dual_basis(const Algebra& a, const ModuleObject& p, const DualBasis& db);

} // namespace hopfwb
