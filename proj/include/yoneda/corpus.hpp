#pragma once

#include <string>
#include <vector>

#include "yoneda/instance.hpp"

namespace yoneda {

// Standard algebra families. Each constructor returns a validated algebra
// whose basis has a fixed, documented meaning so that corpus instances and
// samplers can name elements by index.

// Full matrix algebra M_n(k). Basis: E_{rc} at index r*n + c (row-major).
AlgebraPtr make_matrix_full(const FieldSpec& fs, int n);

// Upper triangular n x n matrices. Basis: E_{rc} for r <= c, enumerated in
// row-major order (E_00, E_01, ..., E_0{n-1}, E_11, ...).
AlgebraPtr make_upper_triangular(const FieldSpec& fs, int n);

// k[x]/(x^d - low_{d-1} x^{d-1} - ... - low_0), d = low.size() >= 1.
// Basis: 1, x, ..., x^{d-1}.
AlgebraPtr make_truncated_polynomial(const FieldSpec& fs, const Vec& low);

// Group algebra of the cyclic group C_m. Basis: g^0, ..., g^{m-1}.
AlgebraPtr make_group_algebra_cyclic(const FieldSpec& fs, int m);

// Direct product x * y with basis: x's basis followed by y's basis.
AlgebraPtr make_product_algebra(const AlgebraPtr& x, const AlgebraPtr& y);

// Hand-verified reference instances, addressable as corpus:<name> on the CLI.
// Every instance carries named ideals, modules, and families plus an expected-fact
// table whose values were derived by hand; corpus_instance re-derives each fact
// through the engine and refuses to load on any mismatch, so the corpus doubles
// as a regression anchor for the whole library.
std::vector<std::string> corpus_names();
Instance corpus_instance(const std::string& name);

}  // namespace yoneda
