#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "splitcount/classtype.hpp"
#include "splitcount/qpoly.hpp"
#include "splitcount/subspace.hpp"

namespace splitcount {

// Cap for brute-force enumerations, measured as q^N·[N k]_q for an ambient
// enumeration of k-dim subspaces of F_q^N. Reads SPLITCOUNT_SCALE_LIMIT from
// the environment, defaulting to 10^7. Oracles take an explicit limit so
// sweeps can authorize bigger runs deliberately.
std::uint64_t default_scale_limit();

// Throws ScaleLimitError when the (ambient, dim) enumeration over the field
// exceeds the limit under the metric above.
void check_enumeration_scale(const Field& field, std::size_t ambient, std::size_t dim,
                             std::uint64_t limit);

// Substitute an operator into a polynomial: f(T) = Σ c_i·T^i.
Matrix apply_poly(const FqPoly& f, const Matrix& t);

// Matrix of T restricted to a T-invariant subspace, written in the
// coordinates of the subspace's canonical basis. Throws InvalidParamsError
// if the subspace is not invariant.
Matrix restrict_to_invariant(const Matrix& t, const Subspace& w);

// Subgroup-count polynomial α_λ(μ;p) with p = q^e: the number of subgroups
// of type μ inside a finite abelian p-group of type λ, as a polynomial in p,
// inflated to q^e. Zero when μ ⊄ λ. Computed by the conjugate-partition
// product formula
//   α_λ(μ;p) = Π_{i≥1} p^{μ'_{i+1}(λ'_i−μ'_i)} · [λ'_i−μ'_{i+1} over μ'_i−μ'_{i+1}]_p.
// The formula is validated against brute_invariant_subspaces in the test
// suite before anything downstream relies on it.
QPoly alpha_poly(const Partition& lambda, const Partition& mu, unsigned e);

// A flag-counting query: dims must be weakly decreasing with dims[0] ≤
// size(tau); r = 0 (empty dims) is legal and counts the empty flag once.
struct PhiQuery {
  ClassType tau;
  std::vector<unsigned> dims;
};

// Number of flags W_1 ⊇ ... ⊇ W_r of T-invariant subspaces with
// dim W_i = dims[i], for any operator T of class type tau, as a polynomial
// in q valid for every prime power q ≥ q0(tau). Memoized.
//
// Primary types recurse on restrictions (a subspace of type μ ⊆ λ is chosen
// in α_λ(μ;q^e) ways); general types convolve their primary parts over all
// column-monotone dimension splits.
QPoly phi_poly(const ClassType& tau, const std::vector<unsigned>& dims);
QPoly phi_poly(const PhiQuery& query);

// Exhaustive count of k-dimensional T-invariant subspaces: enumerate every
// subspace, keep the invariant ones. Independent of all polynomial formulas.
Int brute_invariant_subspaces(const Matrix& t, std::size_t k,
                              std::uint64_t scale_limit = default_scale_limit());

// Exhaustive count of invariant flags with the given dimension profile
// (weakly decreasing). Enumerates invariant subspaces of the top dimension,
// then recurses inside the restriction.
Int brute_invariant_flags(const Matrix& t, const std::vector<unsigned>& dims,
                          std::uint64_t scale_limit = default_scale_limit());

// For a primary operator of type {(e,λ)} with irreducible p: bucket the
// invariant subspaces of dimension e·k by the partition type of the
// restricted operator. The map carries one entry per occurring type μ
// (so Σ values = brute_invariant_subspaces(t, e·k)).
std::map<Partition, Int> classify_invariant_subspaces(
    const Matrix& t, const FqPoly& p, unsigned e, unsigned k,
    std::uint64_t scale_limit = default_scale_limit());

}  // namespace splitcount
