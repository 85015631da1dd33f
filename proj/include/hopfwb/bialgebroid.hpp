#pragma once

#include "hopfwb/algebra.hpp"

#include <memory>
#include <string>

namespace hopfwb {

class IllDefinedAction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Left bialgebroid over R given by structure constants.
///   s : R -> H, t : R^op -> H           (dim H x dim R)
///   delta : H -> H (x)_k H              (dim H^2 x dim H), a lift of the
///                                       comultiplication into H (x)_R H
///   eps : H -> R                        (dim R x dim H)
/// H is an R-bimodule through a.h.b = s(a) t(b) h.
class Bialgebroid {
public:
    Bialgebroid(std::string name, Algebra r, Algebra h, Mat s, Mat t, Mat delta, Mat eps);

    const std::string& name() const { return name_; }
    const Field& field() const { return h_.field(); }
    const Algebra& R() const { return r_; }
    const Algebra& H() const { return h_; }
    const Mat& s() const { return s_; }
    const Mat& t() const { return t_; }
    const Mat& delta() const { return delta_; }
    const Mat& eps() const { return eps_; }
    std::size_t dim_R() const { return r_.dim(); }
    std::size_t dim_H() const { return h_.dim(); }

    /// s(a), t(a) for a basis element a, as vectors of H.
    Mat s_of(std::size_t a) const { return s_.col(a); }
    Mat t_of(std::size_t a) const { return t_.col(a); }
    /// Left multiplication operators by s(e_a), t(e_a) on H.
    const Mat& left_s(std::size_t a) const;
    const Mat& left_t(std::size_t a) const;

    /// H as an R-bimodule (left s, right t, both by left multiplication).
    const Bimodule& h_bimodule() const;
    /// H (x)_R H: relation t(a) g (x) h = g (x) s(a) h.
    const TensorProduct& hh() const;

    Bialgebroid with_name(std::string name) const;

private:
    struct Cache;
    std::string name_;
    Algebra r_;
    Algebra h_;
    Mat s_;
    Mat t_;
    Mat delta_;
    Mat eps_;
    std::shared_ptr<Cache> cache_;
};

/// One leaf per axiom family; failures carry the first failing basis tuple.
CheckReport check_bialgebroid(const Bialgebroid& b);

/// Left H-module (action[i] is the matrix of the H basis element e_i).
using HModule = ModuleObject;

/// M (x)_R N with H acting through the comultiplication.
struct HTensor {
    TensorProduct carrier;
    HModule module;
};

/// Throws IllDefinedAction when the diagonal action does not descend.
HTensor module_tensor(const Bialgebroid& b, const HModule& m, const HModule& n);
/// R with h.a = eps(h s(a)).
HModule unit_module(const Bialgebroid& b);
HModule regular_module(const Bialgebroid& b);
/// Underlying R-bimodule: a.m.b = s(a) t(b) m.
Bimodule restrict(const Bialgebroid& b, const HModule& m);
/// Coopposite bialgebroid over R^op: s and t swapped, flipped comultiplication.
Bialgebroid coopposite(const Bialgebroid& b);

/// H-linear maps between two modules (row-major vectorised).
Subspace h_linear_maps(const Bialgebroid& b, const HModule& x, const HModule& y);
bool is_h_linear(const Bialgebroid& b, const HModule& x, const HModule& y, const Mat& f);

/// Unitors and associator of module_tensor are H-linear and restrict to the
/// bimodule coherences.
CheckReport check_monoidal(const Bialgebroid& b, const HModule& m, const HModule& n, const HModule& p);

} // namespace hopfwb
