//! Monomials (power products) and monomial orders.
//!
//! A monomial is a fixed-length exponent vector over the ambient variables.
//! Orders are total, multiplicative and well-founded; `lex`, `grlex` and
//! `degrevlex` are provided, each optionally re-ranking the variables.
//! The default ranking is declaration order with the first declared
//! variable most significant, so `lex` on `vars: x1 x2 x3 x4` eliminates
//! `x1` first.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Power product of the ambient variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn var(arity: usize, index: usize, power: u32) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = power;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `true` when the only variable with a positive exponent is `i`
    /// (constants qualify).
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.exps.iter().enumerate().all(|(j, &e)| j == i || e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when it divides.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Leading monomials coprime, i.e. the lcm is the plain product.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Moves the exponent of variable `i` to position `sigma(i)`.
    pub fn permute(&self, images: &[usize]) -> Monomial {
        debug_assert_eq!(images.len(), self.arity());
        let mut exps = vec![0; self.arity()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[images[i]] = e;
        }
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Comparison scheme for equal-arity monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    Lex,
    GrLex,
    #[default]
    DegRevLex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrLex => "grlex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    pub fn from_name(s: &str) -> Option<OrderKind> {
        match s {
            "lex" => Some(OrderKind::Lex),
            "grlex" => Some(OrderKind::GrLex),
            "degrevlex" => Some(OrderKind::DegRevLex),
            _ => None,
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Monomial order: an [`OrderKind`] plus an optional variable re-ranking.
///
/// `ranking` lists variable indices from most to least significant; `None`
/// means declaration order. Cheap to clone (the ranking is shared).
#[derive(Debug, Clone, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Option<Arc<[usize]>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, ranking: None }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn grlex() -> Self {
        Self::new(OrderKind::GrLex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    /// Order with an explicit ranking (most significant variable first).
    /// Panics unless `ranking` is a permutation of `0..ranking.len()`.
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Self {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &i in &ranking {
            assert!(i < n && !seen[i], "ranking must be a permutation");
            seen[i] = true;
        }
        if ranking.iter().enumerate().all(|(pos, &i)| pos == i) {
            return MonomialOrder { kind, ranking: None };
        }
        MonomialOrder {
            kind,
            ranking: Some(ranking.into()),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a, b),
            OrderKind::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.cmp_lex(a, b)),
            OrderKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.cmp_revlex(a, b)),
        }
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.ranking {
            None => {
                for (x, y) in a.exps().iter().zip(b.exps()) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            Some(rank) => {
                for &i in rank.iter() {
                    if a.exp(i) != b.exp(i) {
                        return a.exp(i).cmp(&b.exp(i));
                    }
                }
                Ordering::Equal
            }
        }
    }

    // Tie-break for degrevlex: scan from the least significant variable;
    // the monomial with the smaller exponent at the first difference wins.
    fn cmp_revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.ranking {
            None => {
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            Some(rank) => {
                for &i in rank.iter().rev() {
                    if a.exp(i) != b.exp(i) {
                        return b.exp(i).cmp(&a.exp(i));
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl PartialEq for MonomialOrder {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && match (&self.ranking, &other.ranking) {
                (None, None) => true,
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_first_variable_most_significant() {
        let lex = MonomialOrder::lex();
        // x1 > x2^3 under lex with x1 ranked highest
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
        assert_eq!(lex.cmp(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_standard_example() {
        let o = MonomialOrder::degrevlex();
        // x1*x2^2 > x1^2*x3 at equal degree (last difference favours fewer
        // trailing-variable exponents)
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn grlex_degree_then_lex() {
        let o = MonomialOrder::grlex();
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn ranking_reverses_significance() {
        // rank x2 above x1: under lex, x2 now beats x1^3
        let o = MonomialOrder::with_ranking(OrderKind::Lex, vec![1, 0]);
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[0, 1])), Ordering::Less);
        // identity ranking collapses to the default representation
        let id = MonomialOrder::with_ranking(OrderKind::Lex, vec![0, 1]);
        assert_eq!(id, MonomialOrder::lex());
    }

    #[test]
    fn multiplicative_and_well_founded() {
        let orders = [
            MonomialOrder::lex(),
            MonomialOrder::grlex(),
            MonomialOrder::degrevlex(),
        ];
        let monos: Vec<Monomial> = (0..3u32)
            .flat_map(|a| (0..3u32).flat_map(move |b| (0..3u32).map(move |c| Monomial::from_exps(vec![a, b, c]))))
            .collect();
        for o in &orders {
            let one = Monomial::one(3);
            for a in &monos {
                // 1 is minimal
                assert_ne!(o.cmp(&one, a), Ordering::Greater);
                for b in &monos {
                    let ab = o.cmp(a, b);
                    for c in &monos {
                        // a < b implies ac < bc
                        assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), ab);
                    }
                }
            }
        }
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 1, 3]));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert_eq!(m(&[1, 0, 0]).try_div(&a), Some(m(&[1, 1, 0])));
        assert_eq!(b.try_div(&a), None);
        assert!(m(&[0, 1, 0]).coprime(&m(&[1, 0, 1])));
        assert!(!a.coprime(&b));
    }

    #[test]
    fn permute_moves_exponents() {
        // sigma = (1 2) as images [1, 0, 2]: x1^2*x2 -> x2^2*x1
        assert_eq!(m(&[2, 1, 0]).permute(&[1, 0, 2]), m(&[1, 2, 0]));
    }
}
