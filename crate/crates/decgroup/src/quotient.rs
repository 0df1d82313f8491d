//! Multiplication matrices of the quotient algebra.
//!
//! For a zero-dimensional basis the quotient ring is a finite-dimensional
//! vector space on the standard monomials; multiplication by each variable
//! is a linear map whose matrix drives everything downstream: the per-
//! variable characteristic polynomials, the variable partition, and the
//! tagged block polynomials.

use crate::error::{Error, Result};
use crate::groebner::{normal_form, quotient_basis, GroebnerBasis, QuotientBasis};
use crate::matrix::{char_poly_rat, char_poly_sym, RatMatrix};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::rat;

/// Standard-monomial basis plus the n multiplication matrices.
///
/// Column `j` of matrix `i` holds the coordinates of
/// `normal_form(x_i * b_j)` in the basis. The matrices commute pairwise
/// (the quotient algebra is commutative); construction re-checks that in
/// debug builds.
#[derive(Debug, Clone)]
pub struct QuotientStructure {
    basis: QuotientBasis,
    matrices: Vec<RatMatrix>,
}

impl QuotientStructure {
    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn matrices(&self) -> &[RatMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, var: usize) -> &RatMatrix {
        &self.matrices[var]
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    pub fn num_vars(&self) -> usize {
        self.matrices.len()
    }

    /// Pairwise commutativity audit.
    pub fn matrices_commute(&self) -> bool {
        for i in 0..self.matrices.len() {
            for j in i + 1..self.matrices.len() {
                let ab = self.matrices[i].mul(&self.matrices[j]);
                let ba = self.matrices[j].mul(&self.matrices[i]);
                if ab != ba {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds all n multiplication matrices over the quotient by `g`.
pub fn mult_matrices(g: &GroebnerBasis) -> Result<QuotientStructure> {
    let basis = quotient_basis(g)?;
    let n = g.arity();
    let dim = basis.dimension();
    let mut matrices = Vec::with_capacity(n);
    for var in 0..n {
        let mut m = RatMatrix::zeros(dim, dim);
        for (j, b) in basis.monomials().iter().enumerate() {
            let shifted = b.mul(&Monomial::var(n, var, 1));
            let prod = Polynomial::from_terms(
                vec![(shifted, rat(1))],
                n,
                g.order().clone(),
            );
            let nf = normal_form(&prod, g);
            for (mono, coeff) in nf.terms() {
                let row = basis.index_of(mono).ok_or_else(|| {
                    Error::DimensionMismatch(
                        "normal form left the standard-monomial span".into(),
                    )
                })?;
                *m.at_mut(row, j) = coeff.clone();
            }
        }
        matrices.push(m);
    }
    let q = QuotientStructure { basis, matrices };
    debug_assert!(q.matrices_commute(), "multiplication matrices must commute");
    Ok(q)
}

/// Characteristic polynomial of each multiplication matrix, univariate and
/// monic of degree equal to the quotient dimension. Over the algebraic
/// closure the roots of the i-th polynomial are exactly the i-th
/// coordinates of the zero set, with multiplicity.
pub fn variable_char_polys(q: &QuotientStructure) -> Result<Vec<Polynomial>> {
    q.matrices.iter().map(char_poly_rat).collect()
}

/// Tagged characteristic polynomial of one block of variables:
/// `det(lambda*Id - sum_{i in block} t_i * M_i)` in the ring
/// `(lambda, t_1..t_n)`. Monic in lambda of degree N and jointly
/// homogeneous of degree N in `(lambda, t)`.
pub fn block_char_poly(q: &QuotientStructure, block: &[usize]) -> Result<Polynomial> {
    if block.is_empty() {
        return Err(Error::EmptyMatrixList);
    }
    let pairs: Vec<(usize, &RatMatrix)> =
        block.iter().map(|&i| (i, &q.matrices[i])).collect();
    char_poly_sym(&pairs, q.num_vars())
}
