#pragma once

// Construction X over GF(p^2): extend a linear code C by e = n - k - dim(hull)
// coordinates so the extended code E contains its Hermitian dual.
//
//        [ M | 0   ]   M: basis of C ∩ C^⊥h
//   G =  [ A | 0   ]   A: completes M to a basis of C
//        [ B | c·I ]   B: orthonormal, completes M to a basis of C^⊥h
//
// c is any constant with c^(p+1) = -1, so every row of [B | c·I] has
// Hermitian norm 1 + (-1) = 0.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qconx/cyclic.hpp"
#include "qconx/distance.hpp"
#include "qconx/field.hpp"
#include "qconx/linalg.hpp"

namespace qconx {

/// A vector in span(basis) with Hermitian norm k. For k = 0 returns a nonzero
/// isotropic vector when one is found, else the zero vector. Throws
/// std::invalid_argument if the span is totally isotropic (and k != 0).
Vector find_norm_k_vector(const Field& f, std::span<const Vector> basis, FieldElement k);

struct OrthonormalCompletion {
    Matrix hull_basis;  ///< M, basis of D ∩ D^⊥h
    Matrix orthonormal; ///< B, one row per vector; Gram matrix is the identity
};

/// M ∪ B is a basis of D. Throws std::logic_error if no unit vector can be found.
OrthonormalCompletion orthonormal_complete(const Field& f, const LinearCode& d);

/// c with c^(p+1) = -1: sqrt_minus_one when its norm is -1, else a norm preimage of -1.
FieldElement extension_constant(const Field& f);

struct QuantumCodeParams {
    std::size_t N = 0;
    long K = 0;
    std::size_t d_lower = 1;
    std::optional<std::size_t> d_exact;  ///< minimum weight of E, when certified
    std::uint32_t p = 0;

    std::size_t d() const { return d_exact ? *d_exact : d_lower; }
};

struct RowCheck {
    std::size_t row = 0;
    FieldElement self_ip;     ///< <s, s>
    bool orthogonal = true;   ///< <s, t> = 0 for every other S row t
};

struct ConstructionResult {
    std::string source;  ///< "linear", "cyclic" or "defining_set"
    std::size_t n = 0, k = 0, s = 0, e = 0;
    Matrix hull_basis, complement, extension;  ///< M, A, B
    FieldElement extension_constant;
    Matrix G;
    LinearCode E;
    QuantumCodeParams params;
    std::vector<RowCheck> witness;

    std::optional<Polynomial> generator;       ///< cyclic input only
    std::optional<DefiningSet> defining_set;   ///< defining-set input only
    std::vector<std::size_t> extension_roots;  ///< Z ∩ -pZ, defining-set input only

    std::optional<DistanceReport> wt_c, wt_sum, wt_cu, wt_e;
};

struct ConstructionOptions {
    bool verify = true;
    bool compute_distances = true;
    /// Also certify the minimum weight of E (the pure distance).
    bool compute_exact = false;
    DistanceOptions distance;
};

/// Throws std::invalid_argument on the zero code and std::logic_error when a
/// verified invariant fails.
ConstructionResult construction_x(const Field& f, const LinearCode& c, const ConstructionOptions& opt = {});
/// Same, with distances taken through the cyclic structure of C.
ConstructionResult construction_x(const Field& f, const CyclicCode& c, const ConstructionOptions& opt = {});

/// Defining-set variant: needs (p^2-1) | n and every x in Z ∩ -pZ of the form
/// t·n/(p^2-1) with (p-1) | t. B rows are the normalized
/// b_t(x) = (x^n - 1)/(x - w^t). Bound: min{wt(C), wt(C_u)+1, wt(C + C^⊥h)+2}.
ConstructionResult construction_x_cyclic(const Field& f, const DefiningSet& z, const ConstructionOptions& opt = {});

/// Coefficients of (x^n - 1)/(x - root), lowest degree first.
Vector b_vector(const Field& f, std::size_t n, FieldElement root);

/// min(wt(C), wt(C + C^⊥h) + 1), using certified lower bounds of each term.
std::size_t construction_lower_bound(const Field& f, const LinearCode& c, const DistanceOptions& opt = {});

/// Re-checks a construction: rank, E^⊥h ⊆ E, S rows, B ⊆ C^⊥h and Gram(B) = I.
/// Returns the first failure, or an empty string.
std::string check_construction(const Field& f, const LinearCode& c, const ConstructionResult& r);

}  // namespace qconx
