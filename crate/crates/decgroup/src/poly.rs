//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept strictly descending under the polynomial's monomial order
//! with no zero coefficients and no duplicate monomials; the zero polynomial
//! has no terms. Every constructor and arithmetic routine restores that
//! normal form, and a debug-mode audit re-checks it.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};
use crate::rational::{rat, Rat};

#[derive(Debug, Clone)]
pub struct Polynomial {
    arity: usize,
    order: MonomialOrder,
    /// `(monomial, coefficient)` pairs, strictly descending under `order`.
    terms: Vec<(Monomial, Rat)>,
}

impl Polynomial {
    pub fn zero(arity: usize, order: MonomialOrder) -> Self {
        Polynomial { arity, order, terms: Vec::new() }
    }

    pub fn one(arity: usize, order: MonomialOrder) -> Self {
        Self::constant(rat(1), arity, order)
    }

    pub fn constant(c: Rat, arity: usize, order: MonomialOrder) -> Self {
        let mut p = Self::zero(arity, order);
        if !c.is_zero() {
            p.terms.push((Monomial::one(arity), c));
        }
        p
    }

    /// The monomial `x_{index+1}` as a polynomial.
    pub fn variable(index: usize, arity: usize, order: MonomialOrder) -> Self {
        assert!(index < arity);
        Polynomial {
            arity,
            order,
            terms: vec![(Monomial::var(arity, index, 1), rat(1))],
        }
    }

    /// Builds from arbitrary `(monomial, coefficient)` pairs: sorts,
    /// combines duplicates, drops zeros.
    pub fn from_terms(
        terms: Vec<(Monomial, Rat)>,
        arity: usize,
        order: MonomialOrder,
    ) -> Self {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.arity(), arity, "monomial arity mismatch");
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        let p = Polynomial { arity, order, terms: out };
        debug_assert!(p.audit());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value when `is_constant`, else `None`.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(rat(0))
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    /// Variables with a positive exponent somewhere.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.arity];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..self.arity).filter(|&i| used[i]).collect()
    }

    /// Normal-form audit: strictly descending, zero-free.
    pub fn audit(&self) -> bool {
        self.terms.iter().all(|(m, c)| m.arity() == self.arity && !c.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| self.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    /// Same polynomial re-tagged (and re-sorted) under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if self.order == order {
            let mut p = self.clone();
            p.order = order;
            return p;
        }
        Polynomial::from_terms(self.terms.clone(), self.arity, order)
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        assert_eq!(self.order, other.order, "polynomial order mismatch");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if negate { -cb.clone() } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| {
            (m.clone(), if negate { -c.clone() } else { c.clone() })
        }));
        let p = Polynomial { arity: self.arity, order: self.order.clone(), terms: out };
        debug_assert!(p.audit());
        p
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { arity: self.arity, order: self.order.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity, self.order.clone());
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { arity: self.arity, order: self.order.clone(), terms }
    }

    /// `c * x^m * self`; multiplicativity of the order keeps terms sorted.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity, self.order.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), tc * c))
            .collect();
        let p = Polynomial { arity: self.arity, order: self.order.clone(), terms };
        debug_assert!(p.audit());
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.arity, self.order.clone());
        }
        // accumulate by repeated merging of term-shifted copies; the shorter
        // factor drives the loop
        let (short, long) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut cross: Vec<(Monomial, Rat)> =
            Vec::with_capacity(short.terms.len() * long.terms.len());
        for (m, c) in &short.terms {
            for (tm, tc) in &long.terms {
                cross.push((m.mul(tm), c * tc));
            }
        }
        Polynomial::from_terms(cross, self.arity, self.order.clone())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.arity, self.order.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Monic rescale (leading coefficient 1). Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Primitive integer form: integer coefficients, content 1, positive
    /// leading coefficient. The result is a positive rational multiple of
    /// `self`; zero stays zero.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut nums: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for n in &nums {
            content = content.gcd(n);
        }
        if nums[0].is_negative() {
            content = -content;
        }
        for n in &mut nums {
            *n = &*n / &content;
        }
        let terms = self
            .terms
            .iter()
            .zip(nums)
            .map(|((m, _), n)| (m.clone(), Rat::from_integer(n)))
            .collect();
        let p = Polynomial { arity: self.arity, order: self.order.clone(), terms };
        debug_assert!(p.audit());
        p
    }

    /// `a*self - c*x^m*g` in one merge pass; the workhorse of polynomial
    /// reduction.
    pub fn combine(&self, a: &Rat, c: &Rat, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.assert_compatible(g);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < g.terms.len() {
            let (ma, ca) = &self.terms[i];
            let mb = g.terms[j].0.mul(m);
            match self.order.cmp(ma, &mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca * a));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, -(&g.terms[j].1 * c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = ca * a - &g.terms[j].1 * c;
                    if !v.is_zero() {
                        out.push((mb, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (ma, ca) in &self.terms[i..] {
            out.push((ma.clone(), ca * a));
        }
        for (mb, cb) in &g.terms[j..] {
            out.push((mb.mul(m), -(cb * c)));
        }
        let p = Polynomial { arity: self.arity, order: self.order.clone(), terms: out };
        debug_assert!(p.audit());
        p
    }

    /// Variable substitution `x_i -> x_{sigma(i)}` for a bijection `images`
    /// of `0..arity`. A ring homomorphism: it distributes over `+` and `*`.
    pub fn permute_vars(&self, images: &[usize]) -> Polynomial {
        assert_eq!(images.len(), self.arity, "permutation degree mismatch");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permute(images), c.clone()))
            .collect();
        Polynomial::from_terms(terms, self.arity, self.order.clone())
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.arity, "point arity mismatch");
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Embeds into a larger ring: variable `i` becomes variable
    /// `i + offset` among `new_arity` variables.
    pub fn extend_arity(&self, new_arity: usize, offset: usize, order: MonomialOrder) -> Polynomial {
        assert!(self.arity + offset <= new_arity);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; new_arity];
                exps[offset..offset + self.arity].copy_from_slice(m.exps());
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(terms, new_arity, order)
    }

    /// Exact division by `divisor`, `None` when it does not divide.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.assert_compatible(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, Rat)> = Vec::new();
        let dlm = divisor.leading_monomial().unwrap();
        let dlc = divisor.leading_coeff().unwrap();
        while !rem.is_zero() {
            let (rm, rc) = rem.terms[0].clone();
            let q = dlm.try_div(&rm)?;
            let qc = rc / dlc;
            rem = rem.combine(&Rat::one(), &qc, &q, divisor);
            quo.push((q, qc));
        }
        Some(Polynomial::from_terms(quo, self.arity, self.order.clone()))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.arity != other.arity {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        // different order tags: compare as term sets
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let key = |p: &Polynomial| {
            let mut v: Vec<(Vec<u32>, Rat)> = p
                .terms
                .iter()
                .map(|(m, c)| (m.exps().to_vec(), c.clone()))
                .collect();
            v.sort();
            v
        };
        key(self) == key(other)
    }
}

impl Eq for Polynomial {}

// ---------------------------------------------------------------------------
// Univariate utilities (formal derivative, gcd, squarefree part)
// ---------------------------------------------------------------------------

/// Error for operations that require an effectively univariate input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotUnivariate;

impl std::fmt::Display for NotUnivariate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "polynomial is not univariate")
    }
}

impl std::error::Error for NotUnivariate {}

/// The single active variable of `p`, or `None` for constants.
/// Errors when two or more variables occur.
pub fn active_variable(p: &Polynomial) -> Result<Option<usize>, NotUnivariate> {
    let support = p.support();
    match support.len() {
        0 => Ok(None),
        1 => Ok(Some(support[0])),
        _ => Err(NotUnivariate),
    }
}

/// Dense coefficient vector `[c_0, c_1, ..., c_d]` of an effectively
/// univariate polynomial, together with the variable it lives in (constants
/// report variable `fallback`).
pub fn univariate_coeffs(
    p: &Polynomial,
    fallback: usize,
) -> Result<(usize, Vec<Rat>), NotUnivariate> {
    let var = active_variable(p)?.unwrap_or(fallback);
    let d = p.degree_in(var) as usize;
    let mut coeffs = vec![rat(0); d + 1];
    for (m, c) in p.terms() {
        coeffs[m.exp(var) as usize] = c.clone();
    }
    Ok((var, coeffs))
}

/// Rebuilds a polynomial from dense coefficients in variable `var`.
pub fn univariate_from_coeffs(
    coeffs: &[Rat],
    var: usize,
    arity: usize,
    order: MonomialOrder,
) -> Polynomial {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (Monomial::var(arity, var, e as u32), c.clone()))
        .collect();
    Polynomial::from_terms(terms, arity, order)
}

/// Formal derivative of an effectively univariate polynomial.
pub fn derivative(p: &Polynomial) -> Result<Polynomial, NotUnivariate> {
    let (var, coeffs) = univariate_coeffs(p, 0)?;
    let deriv: Vec<Rat> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(e, c)| c * rat(e as i64))
        .collect();
    Ok(univariate_from_coeffs(&deriv, var, p.arity(), p.order().clone()))
}

/// Monic gcd of two effectively univariate polynomials in the same variable.
pub fn univariate_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, NotUnivariate> {
    let va = active_variable(a)?;
    let vb = active_variable(b)?;
    if let (Some(x), Some(y)) = (va, vb) {
        if x != y {
            return Err(NotUnivariate);
        }
    }
    let var = va.or(vb).unwrap_or(0);
    let mut f = univariate_coeffs(a, var)?.1;
    let mut g = univariate_coeffs(b, var)?.1;
    trim(&mut f);
    trim(&mut g);
    while !g.is_empty() {
        let r = poly_rem(&f, &g);
        f = g;
        g = r;
    }
    if f.is_empty() {
        return Ok(Polynomial::zero(a.arity(), a.order().clone()));
    }
    let lead = f.last().unwrap().clone();
    for c in &mut f {
        *c = &*c / &lead;
    }
    Ok(univariate_from_coeffs(&f, var, a.arity(), a.order().clone()))
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

// dense remainder of f mod g, both trimmed, g nonzero
fn poly_rem(f: &[Rat], g: &[Rat]) -> Vec<Rat> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lg = g.last().unwrap();
    while r.len() > dg && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = r.len() - 1 - dg;
        let q = lr / lg;
        for (i, gc) in g.iter().enumerate() {
            let v = gc * &q;
            r[shift + i] -= v;
        }
        trim(&mut r);
    }
    trim(&mut r);
    r
}

/// Monic squarefree part `p / gcd(p, p')`.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, NotUnivariate> {
    if p.is_zero() || p.is_constant() {
        return Ok(p.monic());
    }
    let d = derivative(p)?;
    let g = univariate_gcd(p, &d)?;
    let q = p
        .div_exact(&g)
        .expect("gcd divides its first argument");
    Ok(q.monic())
}

/// `true` when gcd(p, p') is constant.
pub fn is_squarefree(p: &Polynomial) -> Result<bool, NotUnivariate> {
    if p.is_zero() || p.is_constant() {
        return Ok(true);
    }
    let d = derivative(p)?;
    Ok(univariate_gcd(p, &d)?.is_constant())
}
