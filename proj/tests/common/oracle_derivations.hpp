#pragma once

// Independent dense derivation-space oracle.  Solves for ALL dim^2
// entries of the unknown map (no block-restricted variables), imposing
// the parity pattern as extra equations, and row-reduces with the
// test-local gauss_jordan -- no code shared with the library solver.

#include "bihom/algebra.hpp"
#include "bihom/derivations.hpp"
#include "oracle_linalg.hpp"

namespace oracle {

using bihom::BiHomSuperalgebra;
using bihom::Parity;

// Basis of degree-d exponent-k derivations as flattened dim^2 rows
// (row-major), in the oracle's own order.
inline std::vector<Row> derivation_basis(const BiHomSuperalgebra& l, int k, Parity degree) {
    const int dim = l.dim();
    const int nvars = dim * dim;
    auto var = [dim](int i, int j) { return i * dim + j; };

    const auto& alpha = l.alpha().entries();
    const auto& beta = l.beta().entries();
    const auto bk = bihom::beta_power(l, k).entries();
    const auto& mu = l.product();

    Table t;
    // parity pattern: D[i][j] = 0 unless |e_i| = |e_j| + d
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (l.parity(i) != l.parity(j) + degree) {
                Row row(nvars, Rational(0));
                row[var(i, j)] = 1;
                t.push_back(std::move(row));
            }
    // D s = s D for s in {alpha, beta}
    for (const auto* s : {&alpha, &beta})
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Row row(nvars, Rational(0));
                for (int m = 0; m < dim; ++m) {
                    row[var(i, m)] += s->at(m, j);
                    row[var(m, j)] -= s->at(i, m);
                }
                t.push_back(std::move(row));
            }
    // D mu(e_a,e_b) = mu(D e_a, bk e_b) + (-1)^{|e_a| d} mu(bk e_a, D e_b)
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const int sign = (l.parity(a).bit() & degree.bit()) ? -1 : 1;
            for (int comp = 0; comp < dim; ++comp) {
                Row row(nvars, Rational(0));
                for (int m = 0; m < dim; ++m) row[var(comp, m)] += mu.c(a, b, m);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) {
                        if (!bk.at(j, b).is_zero())
                            row[var(i, a)] -= bk.at(j, b) * mu.c(i, j, comp);
                        if (!bk.at(j, a).is_zero())
                            row[var(i, b)] -= Rational(sign) * bk.at(j, a) * mu.c(j, i, comp);
                    }
                t.push_back(std::move(row));
            }
        }
    return null_basis(std::move(t));
}

}  // namespace oracle
