#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "splitcount/classtype.hpp"
#include "splitcount/flagrec.hpp"
#include "splitcount/lattice.hpp"
#include "splitcount/matrix.hpp"
#include "splitcount/qpoly.hpp"

namespace splitcount {

using Rat = mpq_class;

// A σ-counting request: m-dimensional splitting subspaces for operators of
// similarity class type tau acting on a space of dimension m·d = size(tau).
struct SigmaQuery {
  unsigned m = 1;
  unsigned d = 1;
  ClassType tau;
};

// The flag-dimension tuple (((d−1)m,(d−2)m),...,(2m,m),(m,0)) with ambient
// N = md whose flag count equals σ(m,d;T); the empty tuple when d = 1.
FlagTuple splitting_tuple(unsigned m, unsigned d);

// σ_q(m,d;τ) as a polynomial in q. Throws SizeMismatchError when
// m·d ≠ size(tau); d = 1 gives the constant 1.
QPoly sigma_poly(unsigned m, unsigned d, const ClassType& tau);
QPoly sigma_poly(const SigmaQuery& query);

// σ_q(m,d;τ) evaluated at a concrete prime power q. Throws
// NotPrimePowerError for bad q and FieldTooSmallError when q < q0(tau).
Int sigma_at(unsigned m, unsigned d, const ClassType& tau, std::uint64_t q);
Int sigma_at(const SigmaQuery& query, std::uint64_t q);

// Closed form for the type {(md,(1))} (the operator's minimal polynomial is
// a single irreducible of degree md): (q^{md}−1)/(q^m−1) · q^{m(m−1)(d−1)}.
QPoly sigma_closed_irreducible(unsigned m, unsigned d);

// Closed form for the cyclic nilpotent (or unipotent) type {(1,(md))}:
// q^{m²(d−1)}.
QPoly sigma_closed_cyclic_nilpotent(unsigned m, unsigned d);

// For the one-block nilpotent shift on an N-dimensional space with N ≥ md:
// the number of m-dim W whose span chain W + TW + ... + T^{d−1}W is direct,
// equal to [N−md+m choose m]_q · q^{m²(d−1)}. Throws InvalidParamsError when
// N < md.
QPoly shift_partial_splitting_count(std::size_t n, unsigned m, unsigned d);

// For the cyclic nilpotent operator on t.ambient dimensions: the flag count
// of a valid tuple as the closed product
// Π_i [a_{i−1,1}−a_{i,1} choose a_{i,1}−a_{i,2}]·[a_{i,1}−a_{i+1,1} choose
// a_{i,2}−a_{i+1,1}]·q^{(a_{i,1}−a_{i,2})²}. Throws InvalidParamsError on an
// invalid (empty-set) tuple.
QPoly cyclic_nilpotent_flag_closed(const FlagTuple& t);

// Exhaustive oracle: enumerate every m-dim subspace W of F_q^{md} and count
// those with V = W ⊕ TW ⊕ ... ⊕ T^{d−1}W (stacked bases reach rank md).
// Throws SizeMismatchError unless T is md×md; ScaleLimitError when the
// enumeration exceeds the cap.
Int brute_sigma(const Matrix& t, unsigned m, unsigned d,
                std::uint64_t scale_limit = default_scale_limit());

// Probability that the order-d Krylov subspace of a uniformly random
// m-element set generates everything: γ_m(q)·σ_q(m,d;τ) / q^{m²d}, reduced.
Rat kappa(const SigmaQuery& query, std::uint64_t q);
Rat kappa(unsigned m, unsigned d, const ClassType& tau, std::uint64_t q);

// Number of invertible md×md matrices whose d column blocks are successive
// one-row downward shifts of the first md×m block. The formula path
// evaluates γ_m(q)·q^{m²(d−1)}; the brute path enumerates all q^{m²d}
// fillings of the first block and counts nonsingular results.
Int toeplitz_count(std::uint64_t q, unsigned m, unsigned d, bool brute = false,
                   std::uint64_t scale_limit = default_scale_limit());

}  // namespace splitcount
