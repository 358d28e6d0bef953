#pragma once

#include "tableau_lab/core.hpp"

namespace tableau_lab {

/// [n] \ C in increasing order. n = 0 is allowed (complement within the
/// empty ground set); entries of C beyond n are a domain error.
Column column_complement(const Column& c, int n);

/// u ≼ v: |u| ≥ |v| and u_i ≤ v_i for every i ≤ |v|. Adjacent columns of a
/// semistandard tableau satisfy this; incomparable pairs return false.
bool column_precedes(const Column& u, const Column& v);

/// Column i of the result is the complement of column w−i+1 of P within
/// [n]; columns of P beyond its width count as empty. An involution.
Tableau tableau_complement(const Tableau& p, int w, int n);

}  // namespace tableau_lab
