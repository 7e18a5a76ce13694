#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lff/galois.hpp"
#include "lff/reps.hpp"

namespace lff {

// Witness that a generic product is distinguished by the linear period: a
// partition of the segment indices into dual pairs, segments passing the
// discrete-series parity criterion, and for odd dimension the extracted
// alpha |.|^{-1/2} factor.
struct DistinctionCertificate {
  std::vector<std::pair<std::size_t, std::size_t>> pairing;  // (i, j), seg j = seg i dual
  struct RestCriterion {
    std::size_t index;
    int k;
    bool wedge_side;  // pole of wedge^2 at 0 (k odd) vs Sym^2 (k even)
  };
  std::vector<RestCriterion> rest;
  std::optional<std::size_t> odd_tail;

  std::string str(const GLRep& pi) const;
};

// Discrete-series criterion: never for odd k r or a non-unitary central
// character; otherwise St_k(rho) is distinguished iff the cuspidal wedge
// (k odd) or sym (k even) square factor has a pole at 0, i.e. contains the
// root 1. Only the trivial-alpha criterion is known; anything else throws.
bool is_distinguished_discrete(const Segment& d, const Cuspidal& alpha);

// Classification for generic products: even dimension needs a partition into
// dual pairs plus criterion-passing rest; odd dimension first extracts a
// character factor equal to alpha |.|^{-1/2} and classifies the remainder.
// For nontrivial alpha only pairing-complete certificates are decidable.
std::optional<DistinctionCertificate> classify_generic(const GLRep& pi, const Cuspidal& alpha);

// Agreement between the classifier at trivial alpha and the symplectic-form
// test on the parameter side; returns the agreement bit.
bool symplectic_equivalence_check(const GLRep& pi);

}  // namespace lff
