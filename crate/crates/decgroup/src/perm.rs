//! Permutations of `{1..n}` and explicit permutation groups.
//!
//! Groups are stored as full, canonically sorted element lists; at the
//! scale this crate targets (blocks of a handful of variables) that keeps
//! membership filtering trivial. Composition applies right-to-left:
//! `(sigma * tau)(i) = sigma(tau(i))`. All I/O uses cycle notation on
//! 1-based points, identity printed `()`.

use std::fmt;

use crate::error::{Error, Result};

/// Bijection of `0..n`; `images[i]` is the image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Usage("images do not form a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From disjoint cycles over 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p >= n {
                    return Err(Error::DegreeMismatch { expected: n, found: p + 1 });
                }
                if touched[p] {
                    return Err(Error::Usage(format!(
                        "point {} repeated across cycles",
                        p + 1
                    )));
                }
                touched[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` after `other`: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: (0..self.degree()).map(|i| self.images[other.images[i]]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Points moved by this permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    /// Disjoint cycles (fixed points omitted), each starting at its
    /// smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses cycle notation: `(1 2)(3 4)` or `(1,2)`, identity `()`.
/// Top-level commas separate multiple permutations.
pub fn parse_cycles(text: &str, n: usize) -> Result<Vec<Permutation>> {
    let mut perms = Vec::new();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut cur: Option<Vec<usize>> = None;
    let mut num: Option<usize> = None;
    let mut saw_any = false;
    let bad = |msg: &str| Error::Usage(format!("invalid cycle notation: {msg}"));
    for c in text.chars() {
        match c {
            '(' => {
                if cur.is_some() {
                    return Err(bad("nested '('"));
                }
                cur = Some(Vec::new());
                saw_any = true;
            }
            ')' => {
                let mut cy = cur.take().ok_or_else(|| bad("unmatched ')'"))?;
                if let Some(v) = num.take() {
                    cy.push(v);
                }
                if !cy.is_empty() {
                    cycles.push(cy);
                }
            }
            '0'..='9' => {
                if cur.is_none() {
                    return Err(bad("digit outside parentheses"));
                }
                let d = c.to_digit(10).unwrap() as usize;
                num = Some(num.unwrap_or(0) * 10 + d);
            }
            ' ' | '\t' => {
                if let (Some(cy), Some(v)) = (cur.as_mut(), num.take()) {
                    cy.push(v);
                }
            }
            ',' => {
                if let Some(cy) = cur.as_mut() {
                    if let Some(v) = num.take() {
                        cy.push(v);
                    }
                } else {
                    // generator separator
                    if !saw_any {
                        return Err(bad("empty permutation before ','"));
                    }
                    perms.push(build_perm(&cycles, n)?);
                    cycles = Vec::new();
                    saw_any = false;
                }
            }
            _ => return Err(bad(&format!("unexpected character '{c}'"))),
        }
    }
    if cur.is_some() {
        return Err(bad("unterminated cycle"));
    }
    if !saw_any && cycles.is_empty() {
        return Err(bad("empty permutation"));
    }
    perms.push(build_perm(&cycles, n)?);
    Ok(perms)
}

fn build_perm(cycles: &[Vec<usize>], n: usize) -> Result<Permutation> {
    let mut zero_based = Vec::new();
    for cy in cycles {
        let mut z = Vec::new();
        for &p in cy {
            if p == 0 {
                return Err(Error::Usage("cycle points are 1-based".into()));
            }
            z.push(p - 1);
        }
        zero_based.push(z);
    }
    Permutation::from_cycles(n, &zero_based)
}

/// Subgroup of `S_n` as an explicit sorted element list: contains the
/// identity, closed under composition and inverse, duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

/// Guard for explicit enumerations: up to 10 fully permuted points.
const MAX_ELEMENTS: usize = 3_628_800;

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup { degree: n, elements: vec![Permutation::identity(n)] }
    }

    /// Full symmetric group on the points of `block` (others fixed).
    pub fn symmetric_on_block(n: usize, block: &[usize]) -> Result<Self> {
        let size: usize = (1..=block.len()).product();
        if size > MAX_ELEMENTS {
            return Err(Error::EnumerationTooLarge(format!(
                "S_{} on a block has {} elements",
                block.len(),
                size
            )));
        }
        let mut elements = Vec::with_capacity(size);
        for arr in arrangements(block) {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &p) in block.iter().enumerate() {
                images[p] = arr[k];
            }
            elements.push(Permutation { images });
        }
        elements.sort();
        Ok(PermGroup { degree: n, elements })
    }

    /// Full `S_n`.
    pub fn symmetric(n: usize) -> Result<Self> {
        let block: Vec<usize> = (0..n).collect();
        Self::symmetric_on_block(n, &block)
    }

    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let g = PermGroup { degree, elements };
        if !g.is_closed() {
            return Err(Error::Usage("element list is not a group".into()));
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Closure and inverse audit.
    pub fn is_closed(&self) -> bool {
        if !self.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        self.elements.iter().all(|p| {
            self.contains(&p.inverse())
                && self.elements.iter().all(|q| self.contains(&p.compose(q)))
        })
    }

    /// Smallest group containing the generators (breadth-first closure).
    pub fn closure(n: usize, gens: &[Permutation]) -> Result<Self> {
        for g in gens {
            if g.degree() != n {
                return Err(Error::DegreeMismatch { expected: n, found: g.degree() });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![Permutation::identity(n)];
        seen.insert(queue[0].clone());
        while let Some(p) = queue.pop() {
            for g in gens {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    if seen.len() > MAX_ELEMENTS {
                        return Err(Error::EnumerationTooLarge(
                            "group closure exceeded the element cap".into(),
                        ));
                    }
                    queue.push(q);
                }
            }
        }
        let elements: Vec<Permutation> = seen.into_iter().collect();
        Ok(PermGroup { degree: n, elements })
    }

    /// Direct product of groups acting on pairwise disjoint blocks; each
    /// factor must fix everything outside its block.
    pub fn direct_product_on_blocks(
        n: usize,
        factors: &[(Vec<usize>, PermGroup)],
    ) -> Result<Self> {
        let mut owner = vec![None; n];
        for (k, (block, group)) in factors.iter().enumerate() {
            if group.degree != n {
                return Err(Error::DegreeMismatch { expected: n, found: group.degree });
            }
            for &p in block {
                if p >= n || owner[p].is_some() {
                    return Err(Error::Usage("blocks overlap".into()));
                }
                owner[p] = Some(k);
            }
            for el in &group.elements {
                for i in 0..n {
                    if el.images[i] != i && !block.contains(&i) {
                        return Err(Error::Usage(
                            "factor moves a point outside its block".into(),
                        ));
                    }
                }
            }
        }
        let total: usize = factors.iter().map(|(_, g)| g.order()).product();
        if total > MAX_ELEMENTS {
            return Err(Error::EnumerationTooLarge(format!(
                "direct product has {total} elements"
            )));
        }
        let mut elements = vec![Permutation::identity(n)];
        for (_, group) in factors {
            let mut next = Vec::with_capacity(elements.len() * group.order());
            for a in &elements {
                for b in &group.elements {
                    next.push(a.compose(b));
                }
            }
            elements = next;
        }
        elements.sort();
        elements.dedup();
        let g = PermGroup { degree: n, elements };
        debug_assert_eq!(
            g.order(),
            factors.iter().map(|(_, f)| f.order()).product::<usize>()
        );
        Ok(g)
    }

    /// Deterministic small generating set (greedy closure growth).
    pub fn generating_set(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut have = PermGroup::trivial(self.degree);
        for p in &self.elements {
            if !have.contains(p) {
                gens.push(p.clone());
                have = PermGroup::closure(self.degree, &gens)
                    .expect("closure of a subgroup stays within the group");
            }
            if have.order() == self.order() {
                break;
            }
        }
        gens
    }

    /// Canonical report: order, generators, and a name tag when the group
    /// provably equals a recognizable one.
    pub fn describe(&self) -> GroupReport {
        GroupReport {
            order: self.order(),
            generators: self.generating_set(),
            tag: self.name_tag(),
        }
    }

    fn name_tag(&self) -> Option<String> {
        if self.order() == 1 {
            return Some("trivial".to_string());
        }
        let mut support: Vec<usize> = Vec::new();
        for p in &self.elements {
            for s in p.support() {
                if !support.contains(&s) {
                    support.push(s);
                }
            }
        }
        support.sort();
        let k = support.len();
        let fact: usize = (1..=k).product();
        if self.order() == fact {
            // order |support|! forces the full symmetric group on the support
            if k == self.degree {
                return Some(format!("S_{k}"));
            }
            let pts: Vec<String> = support.iter().map(|p| (p + 1).to_string()).collect();
            return Some(format!("S_{} on {{{}}}", k, pts.join(",")));
        }
        if self.degree == 4 && self.order() == 8 && self.is_dihedral_on_square() {
            return Some("D_4 (dihedral on 4 points)".to_string());
        }
        None
    }

    // Conjugacy test against <(1 2 3 4), (1 3)> over all relabelings.
    fn is_dihedral_on_square(&self) -> bool {
        let rot = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let flip = Permutation::from_cycles(4, &[vec![0, 2]]).unwrap();
        let reference = PermGroup::closure(4, &[rot, flip]).unwrap();
        let all = PermGroup::symmetric(4).unwrap();
        all.elements.iter().any(|tau| {
            let tau_inv = tau.inverse();
            let conj: Vec<Permutation> = reference
                .elements
                .iter()
                .map(|p| tau.compose(p).compose(&tau_inv))
                .collect();
            match PermGroup::from_elements(4, conj) {
                Ok(g) => g == *self,
                Err(_) => false,
            }
        })
    }
}

/// All arrangements of `items`, in lexicographic order.
pub(crate) fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    fn rec(remaining: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            cur.push(v);
            rec(remaining, cur, out);
            cur.pop();
            remaining.insert(i, v);
        }
    }
    let mut sorted = items.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    rec(&mut sorted, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let report = self.describe();
        write!(f, "order {}", report.order)?;
        if let Some(tag) = &report.tag {
            write!(f, " ({tag})")?;
        }
        let gens: Vec<String> = report.generators.iter().map(|g| g.to_string()).collect();
        if !gens.is_empty() {
            write!(f, ", generators {}", gens.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupReport {
    pub order: usize,
    pub generators: Vec<Permutation>,
    pub tag: Option<String>,
}
