//! Triangular sets, regularity, containment, and permutation orbits.
//!
//! A zero-dimensional triangular set lists one polynomial per variable,
//! `[f_1, ..., f_n]` with the main variable of `f_i` equal to `x_i` under
//! the ambient ranking `x_1 < ... < x_n`. Applying a variable permutation
//! to a triangular set can produce another triangular set over the same
//! ideal's zero set; `orbit_triangular` enumerates and re-verifies those.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with, radical_membership_with, Budget, GroebnerBasis,
};
use crate::matrix::{det_bareiss, PolyMatrix};
use crate::perm::{PermGroup, Permutation};
use crate::poly::Polynomial;

/// Ordered triangular set; `polys()[i]` has main variable `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularSet {
    polys: Vec<Polynomial>,
}

impl TriangularSet {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn arity(&self) -> usize {
        self.polys.len()
    }

    /// Canonical form: every polynomial primitive (integer coefficients,
    /// content 1, positive leading coefficient).
    pub fn canonical(&self) -> TriangularSet {
        TriangularSet { polys: self.polys.iter().map(|p| p.primitive()).collect() }
    }
}

/// Why a polynomial list fails to be triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangularDefect {
    /// A constant polynomial cannot introduce a variable.
    ConstantMember,
    /// No polynomial has this main variable (0-based).
    MissingMainVariable(usize),
    /// Two polynomials share this main variable (0-based).
    DuplicateMainVariable(usize),
    /// Fewer or more polynomials than variables.
    WrongCount { expected: usize, found: usize },
}

impl fmt::Display for TriangularDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangularDefect::ConstantMember => {
                write!(f, "a constant polynomial cannot introduce a variable")
            }
            TriangularDefect::MissingMainVariable(v) => {
                write!(f, "no polynomial has main variable x{}", v + 1)
            }
            TriangularDefect::DuplicateMainVariable(v) => {
                write!(f, "more than one polynomial has main variable x{}", v + 1)
            }
            TriangularDefect::WrongCount { expected, found } => {
                write!(f, "expected {expected} polynomials, found {found}")
            }
        }
    }
}

/// Highest variable index occurring in `p`, or `None` for constants.
pub fn main_variable(p: &Polynomial) -> Option<usize> {
    p.support().last().copied()
}

/// Sorts by main variable and checks that the main variables are exactly
/// `x_1..x_n`, one each. Failure is an ordinary reported outcome.
pub fn is_triangular(ps: &[Polynomial]) -> std::result::Result<TriangularSet, TriangularDefect> {
    let n = ps.first().map(|p| p.arity()).unwrap_or(0);
    if ps.len() != n {
        return Err(TriangularDefect::WrongCount { expected: n, found: ps.len() });
    }
    let mut slots: Vec<Option<Polynomial>> = vec![None; n];
    for p in ps {
        match main_variable(p) {
            None => return Err(TriangularDefect::ConstantMember),
            Some(v) => {
                if slots[v].is_some() {
                    return Err(TriangularDefect::DuplicateMainVariable(v));
                }
                slots[v] = Some(p.clone());
            }
        }
    }
    let mut polys = Vec::with_capacity(n);
    for (v, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(p) => polys.push(p),
            None => return Err(TriangularDefect::MissingMainVariable(v)),
        }
    }
    Ok(TriangularSet { polys })
}

/// Coefficient of `x_var^k` in `p`, as a polynomial in the other variables.
fn coeff_of(p: &Polynomial, var: usize, k: u32) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .filter(|(m, _)| m.exp(var) == k)
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps[var] = 0;
            (crate::monomial::Monomial::from_exps(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(terms, p.arity(), p.order().clone())
}

/// Leading coefficient of `p` with respect to `var`.
pub fn leading_coeff_in(p: &Polynomial, var: usize) -> Polynomial {
    coeff_of(p, var, p.degree_in(var))
}

/// Resultant of `f` and `g` with respect to `var`: the determinant of the
/// Sylvester matrix, computed fraction-free.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Polynomial> {
    let df = f.degree_in(var) as usize;
    let dg = g.degree_in(var) as usize;
    let arity = f.arity();
    let order = f.order().clone();
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(arity, order));
    }
    if df == 0 && dg == 0 {
        return Ok(Polynomial::one(arity, order));
    }
    if df == 0 {
        return Ok(f.pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g.pow(df as u32));
    }
    let size = df + dg;
    let mut m = PolyMatrix::zeros(size, size, arity, order.clone());
    for row in 0..dg {
        for k in 0..=df {
            *m.at_mut(row, row + k) = coeff_of(f, var, (df - k) as u32);
        }
    }
    for row in 0..df {
        for k in 0..=dg {
            *m.at_mut(dg + row, row + k) = coeff_of(g, var, (dg - k) as u32);
        }
    }
    det_bareiss(&m)
}

/// Regularity: for each `j >= 2` the iterated resultant of the leading
/// coefficient of `f_j` against `f_{j-1}, ..., f_1` (eliminating
/// `x_{j-1}, ..., x_1` in that order) must be nonzero.
pub fn is_regular(t: &TriangularSet) -> Result<bool> {
    for j in 1..t.arity() {
        let mut r = leading_coeff_in(&t.polys[j], j);
        for k in (0..j).rev() {
            if r.is_zero() {
                return Ok(false);
            }
            if r.is_constant() {
                break;
            }
            r = resultant(&r, &t.polys[k], k)?;
        }
        if r.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the zero set of `t` lie inside the zero set of `g`? Checked by
/// radical membership of every generator of `g` in the ideal of `t`.
pub fn verify_containment(t: &TriangularSet, g: &GroebnerBasis) -> Result<bool> {
    verify_containment_with(t, g, &Budget::unlimited())
}

pub fn verify_containment_with(
    t: &TriangularSet,
    g: &GroebnerBasis,
    budget: &Budget,
) -> Result<bool> {
    let gb_t = buchberger_with(&t.polys, g.order(), budget)?;
    for gen in g.generators() {
        if !radical_membership_with(gen, &gb_t, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// exponent/coefficient dump of a canonical set, used for deduplication
type CanonicalKey = Vec<Vec<(Vec<u32>, crate::rational::Rat)>>;

/// One orbit element: the permutation, the (canonicalized) image, and the
/// containment verdict.
#[derive(Debug, Clone)]
pub struct OrbitElement {
    pub sigma: Permutation,
    pub set: TriangularSet,
    pub verified: bool,
}

/// Applies every group element to `t`, keeps the images that are again
/// triangular, deduplicates by canonical form, and re-verifies containment
/// of each kept image. An unverified image is reported with
/// `verified = false`, never dropped.
pub fn orbit_triangular(
    t: &TriangularSet,
    group: &PermGroup,
    g: &GroebnerBasis,
    budget: &Budget,
) -> Result<Vec<OrbitElement>> {
    if group.degree() != t.arity() {
        return Err(Error::DegreeMismatch { expected: t.arity(), found: group.degree() });
    }
    if !verify_containment_with(t, g, budget)? {
        return Err(Error::NotContained);
    }
    let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut out = Vec::new();
    for sigma in group.elements() {
        let image = crate::dec::apply_perm_polys(sigma, &t.polys);
        let tri = match is_triangular(&image) {
            Ok(tri) => tri.canonical(),
            Err(_) => continue,
        };
        let key: CanonicalKey = tri
            .polys
            .iter()
            .map(|p| {
                p.terms()
                    .iter()
                    .map(|(m, c)| (m.exps().to_vec(), c.clone()))
                    .collect()
            })
            .collect();
        if !seen.insert(key) {
            continue;
        }
        let verified = verify_containment_with(&tri, g, budget)?;
        out.push(OrbitElement { sigma: sigma.clone(), set: tri, verified });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::monomial::MonomialOrder;
    use crate::parse::{parse_poly, parse_system};

    fn ord() -> MonomialOrder {
        MonomialOrder::degrevlex()
    }

    const T1: &str = "vars: x1 x2 x3 x4 x5
x1 + 1
x2 + 1
1 + x3
1 - 3*x4 + x4^2
-3 + x4 + x5
";

    fn t1() -> (Vec<String>, TriangularSet) {
        let (names, polys) = parse_system(T1, &ord()).unwrap();
        (names, is_triangular(&polys).unwrap())
    }

    #[test]
    fn recognizes_triangular_lists() {
        let (_, t) = t1();
        assert_eq!(t.arity(), 5);
        assert_eq!(main_variable(&t.polys()[3]), Some(3));

        let names = vec!["x1".to_string(), "x2".to_string()];
        let bad = vec![
            parse_poly("x1*x2", &names, &ord(), 1).unwrap(),
            parse_poly("x2 + 1", &names, &ord(), 1).unwrap(),
        ];
        assert_eq!(
            is_triangular(&bad),
            Err(TriangularDefect::DuplicateMainVariable(1))
        );
        let short = vec![parse_poly("x1", &names, &ord(), 1).unwrap()];
        assert_eq!(
            is_triangular(&short),
            Err(TriangularDefect::WrongCount { expected: 2, found: 1 })
        );
    }

    #[test]
    fn permuted_set_sorts_into_triangular_form() {
        let (names, t) = t1();
        // swap x1 and x4
        let sigma = Permutation::from_cycles(5, &[vec![0, 3]]).unwrap();
        let image: Vec<Polynomial> =
            t.polys().iter().map(|p| p.permute_vars(sigma.images())).collect();
        let tri = is_triangular(&image).unwrap().canonical();
        let t2_src = "vars: x1 x2 x3 x4 x5
x1^2 - 3*x1 + 1
x2 + 1
1 + x3
1 + x4
x1 - 3 + x5
";
        let (_, t2_polys) = parse_system(t2_src, &ord()).unwrap();
        let t2 = is_triangular(&t2_polys).unwrap().canonical();
        assert_eq!(tri, t2);
        let _ = names;
    }

    #[test]
    fn swap_on_two_variables() {
        let names = vec!["x1".to_string(), "x2".to_string()];
        let polys = vec![
            parse_poly("x1^2 - 3*x1 + 1", &names, &ord(), 1).unwrap(),
            parse_poly("x2 + 1", &names, &ord(), 1).unwrap(),
        ];
        let t = is_triangular(&polys).unwrap();
        let sigma = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        let image: Vec<Polynomial> =
            t.polys().iter().map(|p| p.permute_vars(sigma.images())).collect();
        let tri = is_triangular(&image).unwrap();
        assert_eq!(main_variable(&tri.polys()[0]), Some(0));
        assert_eq!(tri.polys()[0], parse_poly("x1 + 1", &names, &ord(), 1).unwrap());
        assert_eq!(
            tri.polys()[1],
            parse_poly("x2^2 - 3*x2 + 1", &names, &ord(), 1).unwrap()
        );
    }

    #[test]
    fn resultant_of_univariates() {
        let names = vec!["x1".to_string()];
        let f = parse_poly("x1^2 - 1", &names, &ord(), 1).unwrap();
        let g = parse_poly("x1 - 1", &names, &ord(), 1).unwrap();
        // shared root 1
        assert!(resultant(&g, &f, 0).unwrap().is_zero());
        let h = parse_poly("x1 - 3", &names, &ord(), 1).unwrap();
        // res(x-3, x^2-1) = (3)^2 - 1 = 8
        let r = resultant(&h, &f, 0).unwrap();
        assert_eq!(r, Polynomial::constant(crate::rational::rat(8), 1, ord()));
    }

    #[test]
    fn regularity_of_unit_leading_coeffs() {
        let (_, t) = t1();
        assert!(is_regular(&t).unwrap());
    }

    #[test]
    fn non_regular_chain_detected() {
        let names = vec!["x1".to_string(), "x2".to_string()];
        let polys = vec![
            parse_poly("x1^2 - 1", &names, &ord(), 1).unwrap(),
            parse_poly("(x1 - 1)*x2 + 1", &names, &ord(), 1).unwrap(),
        ];
        let t = is_triangular(&polys).unwrap();
        assert!(!is_regular(&t).unwrap());
    }

    #[test]
    fn containment_checks() {
        let names = vec!["x1".to_string()];
        let gb_x = buchberger(&[parse_poly("x1", &names, &ord(), 1).unwrap()], &ord()).unwrap();
        let gb_xsq =
            buchberger(&[parse_poly("x1^2", &names, &ord(), 1).unwrap()], &ord()).unwrap();
        let t_x = is_triangular(&[parse_poly("x1", &names, &ord(), 1).unwrap()]).unwrap();
        let t_x1 =
            is_triangular(&[parse_poly("x1 - 1", &names, &ord(), 1).unwrap()]).unwrap();
        // same zero set
        assert!(verify_containment(&t_x, &gb_xsq).unwrap());
        // disjoint zero sets
        assert!(!verify_containment(&t_x1, &gb_x).unwrap());
    }

    #[test]
    fn orbit_under_trivial_group_returns_input() {
        let names = vec!["x1".to_string(), "x2".to_string()];
        let polys = vec![
            parse_poly("x1^2 - 3*x1 + 1", &names, &ord(), 1).unwrap(),
            parse_poly("x2 + 1", &names, &ord(), 1).unwrap(),
        ];
        let t = is_triangular(&polys).unwrap();
        let gb = buchberger(&polys, &ord()).unwrap();
        let orbit = orbit_triangular(
            &t,
            &PermGroup::trivial(2),
            &gb,
            &Budget::unlimited(),
        )
        .unwrap();
        assert_eq!(orbit.len(), 1);
        assert!(orbit[0].verified);
        assert_eq!(orbit[0].set, t.canonical());
    }

    #[test]
    fn orbit_rejects_uncontained_seed() {
        let names = vec!["x1".to_string()];
        let t = is_triangular(&[parse_poly("x1 - 1", &names, &ord(), 1).unwrap()]).unwrap();
        let gb = buchberger(&[parse_poly("x1", &names, &ord(), 1).unwrap()], &ord()).unwrap();
        let r = orbit_triangular(&t, &PermGroup::trivial(1), &gb, &Budget::unlimited());
        assert!(matches!(r, Err(Error::NotContained)));
    }
}
