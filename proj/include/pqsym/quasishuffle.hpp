#ifndef PQSYM_QUASISHUFFLE_HPP
#define PQSYM_QUASISHUFFLE_HPP

#include "pqsym/composition.hpp"

#include <map>

namespace pqsym {

// Integer combination of compositions; every term of a product of
// homogeneous inputs shares the weight wt(α)+wt(β).
using CompositionSum = std::map<Composition, Int, WllLess>;

// α⋈β via the three-term recursion:
//   α⋈β = (a1)*(α'⋈β) + (b1)*(α⋈β') + (a1+b1)*(α'⋈β').
// Memoized on the wll-smaller-first argument pair; computed with an
// iterative suffix-pair table, so no call depth depends on the input.
CompositionSum qshuffle(const Composition& alpha, const Composition& beta);

// Same product, bypassing the (symmetric) memo cache. Exists so that
// commutativity can be tested without reading it back from the cache.
CompositionSum qshuffle_uncached(const Composition& alpha, const Composition& beta);

// α^{⋈n}. For Lyndon α the wll-largest term is α^{*n} with coefficient n!.
CompositionSum qshuffle_power(const Composition& alpha, int n);

CompositionSum qsum_add(const CompositionSum& a, const CompositionSum& b);
CompositionSum qsum_multiply(const CompositionSum& a, const CompositionSum& b);

}  // namespace pqsym

#endif
