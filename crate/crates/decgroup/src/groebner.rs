//! Buchberger's algorithm, normal forms, and zero-dimensional ideal tools.
//!
//! Pair handling uses the normal selection strategy (smallest lcm degree
//! first, ties broken by the monomial order and then generator indices)
//! with the Gebauer–Möller formulation of Buchberger's two criteria.
//! Internally every basis element is kept in primitive integer form and
//! reductions are fraction-free; the finished basis is monic, auto-reduced
//! and sorted ascending by leading term, so output is bit-reproducible for
//! a fixed input and order.

use std::time::Instant;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::min_poly;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{self, Polynomial};
use crate::rational::{rat, Rat};

/// Cooperative resource limit for basis completion.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_deadline(deadline: Instant) -> Self {
        Budget { deadline: Some(deadline) }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Reduced Gröbner basis: monic generators, no generator term divisible by
/// another generator's leading term, sorted ascending by leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    arity: usize,
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// `true` for the zero ideal.
    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// `true` for the whole ring (basis `{1}`, empty zero set).
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant() && !self.gens[0].is_zero()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().map(|g| {
            g.leading_monomial().expect("reduced basis has no zero generator")
        })
    }

    fn reducible(&self, m: &Monomial) -> bool {
        self.leading_monomials().any(|lt| lt.divides(m))
    }

    /// Rebuilds a basis from generators already known to be reduced (e.g.
    /// loaded from a cache). Validates monicity and mutual irreducibility
    /// of leading terms; does not re-run completion.
    pub fn from_reduced_generators(
        gens: Vec<Polynomial>,
        arity: usize,
        order: &MonomialOrder,
    ) -> Result<GroebnerBasis> {
        let mut gens: Vec<Polynomial> = gens
            .into_iter()
            .map(|g| g.with_order(order.clone()).monic())
            .collect();
        gens.sort_by(|a, b| {
            match (a.leading_monomial(), b.leading_monomial()) {
                (Some(x), Some(y)) => order.cmp(x, y),
                _ => std::cmp::Ordering::Equal,
            }
        });
        let candidate = GroebnerBasis { order: order.clone(), arity, gens };
        for g in &candidate.gens {
            if g.is_zero() {
                return Err(Error::Usage("cached basis contains a zero generator".into()));
            }
            if g.arity() != arity {
                return Err(Error::DimensionMismatch("cached basis arity".into()));
            }
            let lt = g.leading_monomial().unwrap();
            if candidate
                .leading_monomials()
                .filter(|m| m.divides(lt))
                .count()
                != 1
            {
                return Err(Error::Usage("cached basis is not auto-reduced".into()));
            }
        }
        Ok(candidate)
    }
}

/// Reduced Gröbner basis of the ideal generated by `ps` under `order`.
pub fn buchberger(ps: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ps, order, &Budget::unlimited())
}

pub fn buchberger_with(
    ps: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let arity = ps.first().map(|p| p.arity()).unwrap_or(0);
    for p in ps {
        if p.arity() != arity {
            return Err(Error::DimensionMismatch(format!(
                "generators of arity {} and {}",
                arity,
                p.arity()
            )));
        }
    }
    let mut basis: Vec<Polynomial> = ps
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.with_order(order.clone()).primitive())
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis { order: order.clone(), arity, gens: Vec::new() });
    }
    basis.sort_by(|a, b| {
        order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    basis.dedup();

    let mut pairs: Vec<Pair> = Vec::new();
    let mut active: Vec<Polynomial> = Vec::new();
    for g in basis {
        let t = active.len();
        update_pairs(&mut pairs, &active, &g, t);
        active.push(g);
    }
    while let Some(best) = select_pair(&pairs, order) {
        if budget.expired() {
            return Err(Error::Timeout { pairs_left: pairs.len(), basis_size: active.len() });
        }
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&active[pair.i], &active[pair.j], &pair.lcm);
        let r = pseudo_reduce(&s, &active);
        if !r.is_zero() {
            let t = active.len();
            update_pairs(&mut pairs, &active, &r, t);
            active.push(r);
        }
    }
    Ok(finalize(active, order.clone(), arity))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn select_pair(pairs: &[Pair], order: &MonomialOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (idx, p) in pairs.iter().enumerate() {
        let better = match best {
            None => true,
            Some(b) => {
                let q = &pairs[b];
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                    .is_lt()
            }
        };
        if better {
            best = Some(idx);
        }
    }
    best
}

// Gebauer-Möller update when generator `new` (index t) joins the basis.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[Polynomial], new: &Polynomial, t: usize) {
    let lt_new = new.leading_monomial().expect("nonzero").clone();

    // chain criterion on surviving old pairs
    pairs.retain(|p| {
        let li = basis[p.i].leading_monomial().unwrap();
        let lj = basis[p.j].leading_monomial().unwrap();
        !(lt_new.divides(&p.lcm)
            && li.lcm(&lt_new) != p.lcm
            && lj.lcm(&lt_new) != p.lcm)
    });

    // candidate pairs (i, t)
    let cand: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: basis[i].leading_monomial().unwrap().lcm(&lt_new),
        })
        .collect();

    // drop candidates whose lcm is a proper multiple of another candidate's
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b {
                continue;
            }
            if cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(&cand[a].lcm) {
                keep[a] = false;
                break;
            }
        }
    }

    // equal-lcm classes: a coprime member kills the class, else keep one
    let mut survivors: Vec<Pair> = Vec::new();
    let mut used = vec![false; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] || used[a] {
            continue;
        }
        let mut class = vec![a];
        for b in a + 1..cand.len() {
            if keep[b] && !used[b] && cand[b].lcm == cand[a].lcm {
                class.push(b);
                used[b] = true;
            }
        }
        let coprime = class.iter().any(|&k| {
            basis[cand[k].i].leading_monomial().unwrap().coprime(&lt_new)
        });
        if !coprime {
            survivors.push(cand[class[0]].clone());
        }
    }
    pairs.extend(survivors);
}

// S-polynomial of primitive integer polynomials, kept integer.
fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let cf = f.leading_coeff().unwrap();
    let cg = g.leading_coeff().unwrap();
    let d = cf.numer().gcd(cg.numer());
    let af = Rat::from_integer(cg.numer() / &d);
    let ag = Rat::from_integer(cf.numer() / &d);
    let mf = lf.try_div(lcm).unwrap();
    let mg = lg.try_div(lcm).unwrap();
    f.mul_term(&mf, &af).combine(&Rat::one(), &ag, &mg, g)
}

// Full fraction-free reduction modulo `basis`; the result is primitive (or
// zero) and equals a positive rational multiple of the true normal form.
fn pseudo_reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut work = p.clone();
    let mut tail: Vec<(Monomial, Rat)> = Vec::new();
    let mut steps = 0usize;
    'outer: while !work.is_zero() {
        let lm = work.leading_monomial().unwrap().clone();
        for g in basis {
            let lg = g.leading_monomial().unwrap();
            if lg.divides(&lm) {
                let cg = g.leading_coeff().unwrap();
                let cw = work.leading_coeff().unwrap();
                let d = cw.numer().gcd(cg.numer());
                let a = Rat::from_integer(cg.numer() / &d);
                let c = Rat::from_integer(cw.numer() / &d);
                let m = lg.try_div(&lm).unwrap();
                work = work.combine(&a, &c, &m, g);
                if !a.is_one() {
                    for (_, t) in tail.iter_mut() {
                        *t *= &a;
                    }
                }
                steps += 1;
                if steps.is_multiple_of(16) {
                    strip_common_content(&mut work, &mut tail);
                }
                continue 'outer;
            }
        }
        let (m, c) = work.terms()[0].clone();
        tail.push((m, c));
        work = Polynomial::from_terms(
            work.terms()[1..].to_vec(),
            work.arity(),
            work.order().clone(),
        );
    }
    Polynomial::from_terms(tail, p.arity(), p.order().clone()).primitive()
}

// Rescales (work, tail) jointly to primitive integer form; the pair is only
// ever meaningful up to a positive scalar.
fn strip_common_content(work: &mut Polynomial, tail: &mut [(Monomial, Rat)]) {
    let mut den_lcm = num_bigint::BigInt::one();
    let mut num_gcd = num_bigint::BigInt::zero();
    for (_, c) in work.terms().iter().chain(tail.iter()) {
        den_lcm = den_lcm.lcm(c.denom());
        num_gcd = num_gcd.gcd(c.numer());
    }
    if num_gcd.is_zero() || (num_gcd.is_one() && den_lcm.is_one()) {
        return;
    }
    let scale = Rat::new(den_lcm, num_gcd);
    *work = work.scale(&scale);
    for (_, c) in tail.iter_mut() {
        *c *= &scale;
    }
}

// Minimalization + autoreduction + monic normalization.
fn finalize(mut basis: Vec<Polynomial>, order: MonomialOrder, arity: usize) -> GroebnerBasis {
    basis.retain(|g| !g.is_zero());
    if basis.iter().any(|g| g.is_constant()) {
        return GroebnerBasis {
            order: order.clone(),
            arity,
            gens: vec![Polynomial::one(arity, order)],
        };
    }
    basis.sort_by(|a, b| {
        order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.num_terms().cmp(&b.num_terms()))
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    // tails reduce against the other generators; leading terms are stable
    loop {
        let mut changed = false;
        for k in 0..minimal.len() {
            let g = minimal[k].clone();
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, h)| h.clone())
                .collect();
            let r = pseudo_reduce(&g, &others);
            debug_assert!(!r.is_zero(), "minimal generator reduced to zero");
            if r != g {
                minimal[k] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let gens = minimal.into_iter().map(|g| g.monic()).collect();
    GroebnerBasis { order, arity, gens }
}

/// Unique remainder of `f` modulo the reduced basis: no remainder term is
/// divisible by any leading term, and `f - normal_form(f)` lies in the
/// ideal. Zero exactly for ideal members.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Polynomial {
    assert_eq!(f.arity(), g.arity, "arity mismatch");
    assert_eq!(*f.order(), g.order, "order mismatch; re-tag with with_order first");
    let mut work = f.clone();
    let mut tail: Vec<(Monomial, Rat)> = Vec::new();
    'outer: while !work.is_zero() {
        let lm = work.leading_monomial().unwrap().clone();
        for gen in &g.gens {
            let lg = gen.leading_monomial().unwrap();
            if lg.divides(&lm) {
                let c = work.leading_coeff().unwrap().clone();
                let m = lg.try_div(&lm).unwrap();
                work = work.combine(&Rat::one(), &c, &m, gen);
                continue 'outer;
            }
        }
        let (m, c) = work.terms()[0].clone();
        tail.push((m, c));
        work = Polynomial::from_terms(
            work.terms()[1..].to_vec(),
            work.arity(),
            work.order().clone(),
        );
    }
    Polynomial::from_terms(tail, f.arity(), f.order().clone())
}

/// Fast membership test: fraction-free reduction to zero. Equivalent to
/// `normal_form(f, g).is_zero()`.
pub fn reduces_to_zero(f: &Polynomial, g: &GroebnerBasis) -> bool {
    let f = f.with_order(g.order.clone()).primitive();
    pseudo_reduce(&f, &g.gens).is_zero()
}

/// Finiteness criterion: every variable has a pure-power leading term.
/// Errors on the unit ideal (empty zero set) so callers handle it
/// explicitly; the zero ideal reports `false` for any positive arity.
pub fn is_zero_dimensional(g: &GroebnerBasis) -> Result<bool> {
    if g.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    Ok((0..g.arity).all(|i| {
        g.leading_monomials()
            .any(|m| m.exp(i) > 0 && m.is_pure_power_of(i))
    }))
}

/// Standard monomials (those not divisible by any leading term), sorted
/// ascending under the basis order. A vector-space basis of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    arity: usize,
    order: MonomialOrder,
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|b| b == m)
    }
}

pub fn quotient_basis(g: &GroebnerBasis) -> Result<QuotientBasis> {
    if !is_zero_dimensional(g)? {
        return Err(Error::NotZeroDimensional);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = vec![Monomial::one(g.arity)];
    let mut out = Vec::new();
    while let Some(m) = queue.pop() {
        if seen.contains(m.exps()) || g.reducible(&m) {
            continue;
        }
        seen.insert(m.exps().to_vec());
        for i in 0..g.arity {
            queue.push(m.mul(&Monomial::var(g.arity, i, 1)));
        }
        out.push(m);
    }
    out.sort_by(|a, b| g.order.cmp(a, b));
    Ok(QuotientBasis { arity: g.arity, order: g.order.clone(), monomials: out })
}

/// `true` when each minimal univariate polynomial in the ideal is
/// squarefree; for zero-dimensional ideals over the rationals this is
/// exactly radicality.
pub fn is_radical(g: &GroebnerBasis) -> Result<bool> {
    let q = crate::quotient::mult_matrices(g)?;
    for m in q.matrices() {
        let p = min_poly(m)?;
        if !poly::is_squarefree(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Radical of a zero-dimensional ideal: adjoins the squarefree part of each
/// minimal univariate polynomial and recomputes the basis. The flag reports
/// whether anything changed; unchanged exactly when the input is radical.
pub fn radicalize(g: &GroebnerBasis) -> Result<(GroebnerBasis, bool)> {
    radicalize_with(g, &Budget::unlimited())
}

pub fn radicalize_with(g: &GroebnerBasis, budget: &Budget) -> Result<(GroebnerBasis, bool)> {
    let q = crate::quotient::mult_matrices(g)?;
    let mut extra: Vec<Polynomial> = Vec::new();
    for (i, m) in q.matrices().iter().enumerate() {
        let p = min_poly(m)?;
        if !poly::is_squarefree(&p)? {
            let sf = poly::squarefree_part(&p)?;
            let (_, coeffs) = poly::univariate_coeffs(&sf, 0)?;
            extra.push(poly::univariate_from_coeffs(
                &coeffs,
                i,
                g.arity,
                g.order.clone(),
            ));
        }
    }
    if extra.is_empty() {
        return Ok((g.clone(), false));
    }
    let mut gens = g.gens.clone();
    gens.extend(extra);
    let radical = buchberger_with(&gens, &g.order, budget)?;
    Ok((radical, true))
}

/// Does `f` vanish on the ideal's zero set? Implemented by adjoining a
/// fresh variable `z` and testing whether `1 - z*f` makes the ideal trivial.
pub fn radical_membership(f: &Polynomial, g: &GroebnerBasis) -> Result<bool> {
    radical_membership_with(f, g, &Budget::unlimited())
}

pub fn radical_membership_with(
    f: &Polynomial,
    g: &GroebnerBasis,
    budget: &Budget,
) -> Result<bool> {
    assert_eq!(f.arity(), g.arity, "arity mismatch");
    if f.is_zero() || g.is_unit_ideal() {
        return Ok(true);
    }
    let n = g.arity;
    let order = MonomialOrder::degrevlex();
    let mut gens: Vec<Polynomial> = g
        .gens
        .iter()
        .map(|p| p.extend_arity(n + 1, 0, order.clone()))
        .collect();
    let lifted = f.extend_arity(n + 1, 0, order.clone());
    let z = Polynomial::variable(n, n + 1, order.clone());
    gens.push(Polynomial::one(n + 1, order.clone()).sub(&z.mul(&lifted)));
    let basis = buchberger_with(&gens, &order, budget)?;
    Ok(basis.is_unit_ideal())
}

/// Buchberger–Möller: reduced Gröbner basis of the vanishing ideal of
/// finitely many distinct rational points. The quotient dimension equals
/// the number of points and the result is radical.
pub fn ideal_of_points(points: &[Vec<Rat>], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let arity = points.first().map(|p| p.len()).unwrap_or(0);
    for p in points {
        if p.len() != arity {
            return Err(Error::DimensionMismatch("ragged point coordinates".into()));
        }
    }
    {
        let mut set = std::collections::BTreeSet::new();
        for p in points {
            if !set.insert(p.clone()) {
                return Err(Error::DuplicatePoints);
            }
        }
    }
    if points.is_empty() {
        return Ok(GroebnerBasis {
            order: order.clone(),
            arity,
            gens: vec![Polynomial::one(arity, order.clone())],
        });
    }
    let npts = points.len();
    let mut gens: Vec<Polynomial> = Vec::new();
    // echelon rows: (pivot, evaluation vector, polynomial evaluating to it)
    let mut rows: Vec<(usize, Vec<Rat>, Polynomial)> = Vec::new();
    let mut candidates: Vec<Monomial> = vec![Monomial::one(arity)];
    while let Some(t) = candidates.pop() {
        if gens
            .iter()
            .any(|g| g.leading_monomial().unwrap().divides(&t))
        {
            continue;
        }
        let mut vec: Vec<Rat> = points
            .iter()
            .map(|p| {
                let mut v = rat(1);
                for (i, &e) in t.exps().iter().enumerate() {
                    for _ in 0..e {
                        v *= &p[i];
                    }
                }
                v
            })
            .collect();
        let mut comb = Polynomial::from_terms(
            vec![(t.clone(), rat(1))],
            arity,
            order.clone(),
        );
        for (pivot, rvec, rpoly) in &rows {
            if !vec[*pivot].is_zero() {
                let f = vec[*pivot].clone() / rvec[*pivot].clone();
                for (x, r) in vec.iter_mut().zip(rvec) {
                    *x -= &f * r;
                }
                comb = comb.sub(&rpoly.scale(&f));
            }
        }
        match vec.iter().position(|x| !x.is_zero()) {
            None => gens.push(comb),
            Some(pivot) => {
                rows.push((pivot, vec, comb));
                if rows.len() > npts {
                    unreachable!("echelon exceeded point count");
                }
                for i in 0..arity {
                    let next = t.mul(&Monomial::var(arity, i, 1));
                    let pos = candidates
                        .binary_search_by(|c| order.cmp(&next, c))
                        .unwrap_or_else(|e| e);
                    if candidates.get(pos) != Some(&next) {
                        candidates.insert(pos, next);
                    }
                }
            }
        }
    }
    gens.sort_by(|a, b| {
        order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    Ok(GroebnerBasis { order: order.clone(), arity, gens })
}

/// Test support: verifies the defining property (every S-polynomial
/// reduces to zero) plus reducedness.
pub fn is_reduced_groebner(g: &GroebnerBasis) -> bool {
    for gen in &g.gens {
        if gen.leading_coeff().is_none_or(|c| !c.is_one()) {
            return false;
        }
        for (m, _) in gen.terms().iter().skip(1) {
            if g.reducible(m) {
                return false;
            }
        }
    }
    for (i, lt) in g.leading_monomials().enumerate() {
        for (j, other) in g.leading_monomials().enumerate() {
            if i != j && other.divides(lt) {
                return false;
            }
        }
    }
    for i in 0..g.gens.len() {
        for j in i + 1..g.gens.len() {
            let lcm = g.gens[i]
                .leading_monomial()
                .unwrap()
                .lcm(g.gens[j].leading_monomial().unwrap());
            let s = s_polynomial(&g.gens[i].primitive(), &g.gens[j].primitive(), &lcm);
            if !pseudo_reduce(&s, &g.gens).is_zero() {
                return false;
            }
        }
    }
    true
}
