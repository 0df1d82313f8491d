//! Exact dense linear algebra over the rationals and over polynomial rings.
//!
//! Characteristic polynomials use the Faddeev–LeVerrier trace recurrence,
//! which stays valid over any commutative ring containing the rationals, so
//! the same code path serves rational matrices and matrices of polynomials
//! in the tag variables. A fraction-free Bareiss determinant over
//! polynomial entries is provided as well; tests use it as an independent
//! route to the same characteristic polynomials.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::rational::{rat, Rat};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![rat(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = rat(1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Integer literal rows; test and example convenience.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rat(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }
}

/// Dense matrix of polynomials sharing one ring context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    arity: usize,
    order: MonomialOrder,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, arity: usize, order: MonomialOrder) -> Self {
        PolyMatrix {
            rows,
            cols,
            arity,
            order: order.clone(),
            data: vec![Polynomial::zero(arity, order); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.data[i * self.cols + j]
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.arity, self.order.clone());
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        PolyMatrix { data, ..self.clone() }
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMatrix {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        PolyMatrix { data, ..self.clone() }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.arity, self.order.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let prod = a.mul(b);
                        *out.at_mut(i, j) = out.at(i, j).add(&prod);
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Characteristic polynomials
// ---------------------------------------------------------------------------

/// Ring used for univariate characteristic and minimal polynomials.
pub fn lambda_ring() -> MonomialOrder {
    MonomialOrder::degrevlex()
}

/// `det(lambda*Id - M)` as a monic univariate polynomial of degree N,
/// by the Faddeev–LeVerrier recurrence.
pub fn char_poly_rat(m: &RatMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NonSquareMatrix { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let order = lambda_ring();
    let mut coeffs = vec![rat(0); n + 1];
    coeffs[n] = rat(1);
    let mut aux = m.clone();
    let id = RatMatrix::identity(n);
    for k in 1..=n {
        let c = -aux.trace() / rat(k as i64);
        coeffs[n - k] = c.clone();
        if k < n {
            aux = m.mul(&aux.add(&id.scale(&c)));
        }
    }
    Ok(crate::poly::univariate_from_coeffs(&coeffs, 0, 1, order))
}

/// `det(lambda*Id - sum_i t_i*M_i)` over the ring `(lambda, t_1..t_n)`,
/// where each pair tags matrix `M_i` with ambient variable index `i`
/// (0-based). Monic in `lambda` of degree N.
pub fn char_poly_sym(pairs: &[(usize, &RatMatrix)], ambient_vars: usize) -> Result<Polynomial> {
    if pairs.is_empty() {
        return Err(Error::EmptyMatrixList);
    }
    let n = pairs[0].1.rows;
    for (_, m) in pairs {
        if !m.is_square() {
            return Err(Error::NonSquareMatrix { rows: m.rows, cols: m.cols });
        }
        if m.rows != n {
            return Err(Error::DimensionMismatch(format!(
                "matrices of size {} and {}",
                n, m.rows
            )));
        }
    }
    let arity = ambient_vars + 1; // lambda first, then t_1..t_n
    let order = MonomialOrder::degrevlex();
    let mut sum = PolyMatrix::zeros(n, n, arity, order.clone());
    for &(var, m) in pairs {
        assert!(var < ambient_vars, "tag variable out of range");
        let t = Monomial::var(arity, var + 1, 1);
        for i in 0..n {
            for j in 0..n {
                let c = m.at(i, j);
                if !c.is_zero() {
                    let term = Polynomial::from_terms(
                        vec![(t.clone(), c.clone())],
                        arity,
                        order.clone(),
                    );
                    *sum.at_mut(i, j) = sum.at(i, j).add(&term);
                }
            }
        }
    }
    // Faddeev-LeVerrier over Q[t_1..t_n]
    let mut coeffs = vec![Polynomial::zero(arity, order.clone()); n + 1];
    coeffs[n] = Polynomial::one(arity, order.clone());
    let mut aux = sum.clone();
    for k in 1..=n {
        let c = aux.trace().scale(&(-Rat::one() / rat(k as i64)));
        coeffs[n - k] = c.clone();
        if k < n {
            let mut shifted = aux.clone();
            for i in 0..n {
                *shifted.at_mut(i, i) = shifted.at(i, i).add(&c);
            }
            aux = sum.mul(&shifted);
        }
    }
    let mut out = Polynomial::zero(arity, order.clone());
    for (e, c) in coeffs.iter().enumerate() {
        let lam = Polynomial::from_terms(
            vec![(Monomial::var(arity, 0, e as u32), rat(1))],
            arity,
            order.clone(),
        );
        out = out.add(&lam.mul(c));
    }
    Ok(out)
}

/// Monic minimal polynomial of a square rational matrix: the lcm of the
/// annihilators of Krylov chains seeded from standard basis vectors.
pub fn min_poly(m: &RatMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NonSquareMatrix { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let order = lambda_ring();
    if n == 0 {
        return Ok(Polynomial::one(1, order));
    }
    // global span of all Krylov vectors seen so far: (pivot, unit-pivot row)
    let mut span: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut min = Polynomial::one(1, order.clone());
    for seed in 0..n {
        let mut e = vec![rat(0); n];
        e[seed] = rat(1);
        if reduce_against(&span, e.clone()).is_none() {
            continue; // seed already inside an invariant subspace we covered
        }
        let ann = krylov_annihilator(m, &e, &order);
        let lead = univariate_lcm(&min, &ann);
        min = lead;
        // fold the chain's vectors into the global span
        let mut v = e;
        while let Some(row) = reduce_against(&span, v.clone()) {
            span.push(row);
            v = m.mul_vec(&v);
        }
        if min.total_degree() as usize == n {
            break;
        }
    }
    Ok(min)
}

// Reduces v against the unit-pivot rows; returns the normalized nonzero
// remainder with its pivot, or None when v lies in the span.
fn reduce_against(span: &[(usize, Vec<Rat>)], mut v: Vec<Rat>) -> Option<(usize, Vec<Rat>)> {
    for (pivot, row) in span {
        if !v[*pivot].is_zero() {
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &f * r;
            }
        }
    }
    let pivot = v.iter().position(|x| !x.is_zero())?;
    let lead = v[pivot].clone();
    for x in v.iter_mut() {
        *x = &*x / &lead;
    }
    Some((pivot, v))
}

// Monic annihilator of the Krylov chain from v: the lowest-degree monic p
// with p(M) v = 0.
fn krylov_annihilator(m: &RatMatrix, v: &[Rat], order: &MonomialOrder) -> Polynomial {
    // rows: (pivot, vector with unit pivot, combination over chain powers)
    let mut rows: Vec<(usize, Vec<Rat>, Vec<Rat>)> = Vec::new();
    let mut cur = v.to_vec();
    let mut power = 0usize;
    loop {
        let mut tag = vec![rat(0); power + 1];
        tag[power] = rat(1);
        let mut w = cur.clone();
        for (pivot, row, rtag) in &rows {
            if !w[*pivot].is_zero() {
                let f = w[*pivot].clone();
                for (x, r) in w.iter_mut().zip(row) {
                    *x -= &f * r;
                }
                for (i, t) in rtag.iter().enumerate() {
                    tag[i] -= &f * t;
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                let lead = w[pivot].clone();
                for x in w.iter_mut() {
                    *x = &*x / &lead;
                }
                for t in tag.iter_mut() {
                    *t = &*t / &lead;
                }
                rows.push((pivot, w, tag));
            }
            None => {
                // dependency: tag holds the monic annihilator coefficients
                return crate::poly::univariate_from_coeffs(&tag, 0, 1, order.clone());
            }
        }
        cur = m.mul_vec(&cur);
        power += 1;
    }
}

fn univariate_lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.arity(), a.order().clone());
    }
    let g = crate::poly::univariate_gcd(a, b).expect("univariate inputs");
    a.mul(b).div_exact(&g).expect("gcd divides the product").monic()
}

// ---------------------------------------------------------------------------
// Fraction-free determinants
// ---------------------------------------------------------------------------

/// Determinant of a square polynomial matrix by fraction-free Bareiss
/// elimination (exact divisions, row pivoting with sign tracking).
pub fn det_bareiss(m: &PolyMatrix) -> Result<Polynomial> {
    if m.rows != m.cols {
        return Err(Error::NonSquareMatrix { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let order = m.order.clone();
    let arity = m.arity;
    if n == 0 {
        return Ok(Polynomial::one(arity, order));
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.at(i, j).clone()).collect())
        .collect();
    let mut sign = false;
    let mut prev = Polynomial::one(arity, order.clone());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(Polynomial::zero(arity, order)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            a[i][k] = Polynomial::zero(arity, order.clone());
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

/// `det(lambda*Id - M)` computed by Bareiss elimination; independent of the
/// Faddeev–LeVerrier route.
pub fn char_poly_bareiss(m: &RatMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NonSquareMatrix { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let order = lambda_ring();
    let mut pm = PolyMatrix::zeros(n, n, 1, order.clone());
    let lambda = Polynomial::variable(0, 1, order.clone());
    for i in 0..n {
        for j in 0..n {
            let c = Polynomial::constant(m.at(i, j).clone(), 1, order.clone());
            *pm.at_mut(i, j) = if i == j { lambda.sub(&c) } else { c.neg() };
        }
    }
    det_bareiss(&pm)
}

/// Substitutes matrices for the variables of `p` (empty product = identity).
/// Used to check annihilation identities such as Cayley–Hamilton.
pub fn eval_poly_at_matrices(p: &Polynomial, mats: &[RatMatrix]) -> RatMatrix {
    assert_eq!(p.arity(), mats.len());
    let n = mats.first().map_or(1, |m| m.rows());
    let mut acc = RatMatrix::zeros(n, n);
    for (mono, c) in p.terms() {
        let mut term = RatMatrix::identity(n).scale(c);
        for (i, &e) in mono.exps().iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&mats[i]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::univariate_from_coeffs;

    fn upoly(coeffs: &[i64]) -> Polynomial {
        let cs: Vec<Rat> = coeffs.iter().map(|&c| rat(c)).collect();
        univariate_from_coeffs(&cs, 0, 1, lambda_ring())
    }

    #[test]
    fn char_poly_of_identity() {
        let m = RatMatrix::identity(2);
        assert_eq!(char_poly_rat(&m).unwrap(), upoly(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_of_multiplication_matrix() {
        // row convention; the characteristic polynomial is transpose-invariant
        let m = RatMatrix::from_rows(&[
            &[0, 1, 0, 0],
            &[-2, 3, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, -2, 3],
        ]);
        let f = char_poly_rat(&m).unwrap();
        assert_eq!(f, upoly(&[4, -12, 13, -6, 1]));
        // Cayley-Hamilton
        assert!(eval_poly_at_matrices(&f, std::slice::from_ref(&m)).is_zero());
        // the Bareiss determinant route agrees
        assert_eq!(char_poly_bareiss(&m).unwrap(), f);
    }

    #[test]
    fn char_poly_agrees_with_bareiss_on_random_matrices() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=4 {
            for trial in 0..8 {
                let mut m = RatMatrix::from_fn(n, n, |_, _| rat((next() % 11) as i64 - 5));
                if trial % 2 == 0 {
                    // force zero pivots so Bareiss must row-swap
                    for k in 0..n.min(2) {
                        *m.at_mut(k, k) = rat(0);
                    }
                }
                let fl = char_poly_rat(&m).unwrap();
                let br = char_poly_bareiss(&m).unwrap();
                assert_eq!(fl, br);
                assert!(eval_poly_at_matrices(&fl, &[m]).is_zero());
            }
        }
    }

    #[test]
    fn char_poly_similarity_invariant() {
        let m = RatMatrix::from_rows(&[&[1, 2, 0], &[0, -1, 1], &[3, 0, 2]]);
        let mut state = 0x51u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for _ in 0..8 {
            // random shear P = I + c*E_ij (i != j); inverse is I - c*E_ij
            let i = (next().rem_euclid(3)) as usize;
            let j = (next().rem_euclid(3)) as usize;
            if i == j {
                continue;
            }
            let c = next();
            let mut p = RatMatrix::identity(3);
            *p.at_mut(i, j) = rat(c);
            let mut p_inv = RatMatrix::identity(3);
            *p_inv.at_mut(i, j) = rat(-c);
            let conj = p.mul(&m).mul(&p_inv);
            assert_eq!(char_poly_rat(&m).unwrap(), char_poly_rat(&conj).unwrap());
        }
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&RatMatrix::identity(3)).unwrap(), upoly(&[-1, 1]));
        let m = RatMatrix::from_rows(&[
            &[0, 1, 0, 0],
            &[-2, 3, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, -2, 3],
        ]);
        let p = min_poly(&m).unwrap();
        assert_eq!(p, upoly(&[2, -3, 1]));
        assert!(eval_poly_at_matrices(&p, &[m]).is_zero());
        let nil = RatMatrix::from_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(min_poly(&nil).unwrap(), upoly(&[0, 0, 1]));
    }

    #[test]
    fn min_poly_divides_char_poly() {
        let m = RatMatrix::from_rows(&[&[2, 0, 0], &[0, 2, 1], &[0, 0, 2]]);
        let f = char_poly_rat(&m).unwrap();
        let p = min_poly(&m).unwrap();
        assert!(f.div_exact(&p).is_some());
        assert_eq!(p, upoly(&[4, -4, 1])); // (lambda-2)^2
    }

    #[test]
    fn sym_char_poly_single_matrix() {
        // det(lambda I - t1 * 0) = lambda for the 1x1 zero matrix
        let z = RatMatrix::zeros(1, 1);
        let f = char_poly_sym(&[(0, &z)], 1).unwrap();
        let order = MonomialOrder::degrevlex();
        assert_eq!(f, Polynomial::variable(0, 2, order));
    }

    #[test]
    fn sym_char_poly_specializes_to_rat() {
        let m = RatMatrix::from_rows(&[&[1, 2], &[0, 3]]);
        let f = char_poly_sym(&[(0, &m)], 2).unwrap();
        // t1 = 1, t2 = 0 recovers char_poly_rat
        let spec = specialize_tags(&f, &[rat(1), rat(0)]);
        assert_eq!(spec, char_poly_rat(&m).unwrap());
    }

    #[test]
    fn non_square_rejected() {
        let m = RatMatrix::zeros(2, 3);
        assert!(matches!(char_poly_rat(&m), Err(Error::NonSquareMatrix { .. })));
        assert!(matches!(min_poly(&m), Err(Error::NonSquareMatrix { .. })));
        assert!(matches!(char_poly_sym(&[], 1), Err(Error::EmptyMatrixList)));
    }

    // maps a (lambda, t_1..t_n) polynomial to univariate lambda by fixing tags
    fn specialize_tags(f: &Polynomial, tags: &[Rat]) -> Polynomial {
        let mut terms: Vec<(Monomial, Rat)> = Vec::new();
        for (m, c) in f.terms() {
            let mut coeff = c.clone();
            for (i, t) in tags.iter().enumerate() {
                for _ in 0..m.exp(i + 1) {
                    coeff *= t;
                }
            }
            terms.push((Monomial::var(1, 0, m.exp(0)), coeff));
        }
        Polynomial::from_terms(terms, 1, lambda_ring())
    }
}
