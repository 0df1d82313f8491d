//! The decomposition group of a zero-dimensional ideal.
//!
//! `Dec(I)` is the subgroup of `S_n` of variable permutations that map the
//! ideal onto itself. Two routes are implemented:
//!
//! * the quotient-ring pipeline (`dec_group`): Gröbner basis, multiplication
//!   matrices, per-variable characteristic polynomials, the equal-polynomial
//!   partition of the variables, and per-block tagged characteristic
//!   polynomials whose symmetric groups assemble a candidate group;
//! * the direct route from an explicit finite zero set (`dec_from_points`).
//!
//! The candidate product of block symmetric groups always contains `Dec(I)`
//! but can be strictly larger (see `candidate_gap` in the examples), so every
//! candidate element is confirmed against the definition: `sigma` belongs to
//! `Dec(I)` exactly when every permuted generator reduces to zero. For a
//! zero-dimensional ideal the generator test suffices: it shows the permuted
//! ideal is contained in the original, and equality follows because both
//! quotients have the same finite dimension.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with, is_zero_dimensional, radicalize_with, reduces_to_zero, Budget,
    GroebnerBasis,
};
use crate::monomial::MonomialOrder;
use crate::perm::{arrangements, PermGroup, Permutation};
use crate::poly::Polynomial;
use crate::quotient::{block_char_poly, mult_matrices, variable_char_polys};
use crate::rational::Rat;

/// Partition of the variable indices (0-based) by equality of their
/// characteristic polynomials. Blocks hold sorted members and are sorted by
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariablePartition {
    blocks: Vec<Vec<usize>>,
}

impl VariablePartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn singletons(n: usize) -> Self {
        VariablePartition { blocks: (0..n).map(|i| vec![i]).collect() }
    }
}

impl fmt::Display for VariablePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, i) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Groups variable indices by exact equality of their polynomials.
pub fn partition_variables(fs: &[Polynomial]) -> VariablePartition {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        match blocks.iter_mut().find(|b| &fs[b[0]] == f) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    VariablePartition { blocks }
}

/// Symmetric group of a polynomial restricted to a block.
///
/// `f` lives in a ring whose last `n` variables are the permutable ones
/// (leading variables such as the `lambda` of a characteristic polynomial
/// stay fixed). Returns the permutations of `block` (0-based
/// ambient indices, everything else fixed) that leave `f` unchanged, found
/// by brute force over the `|block|!` arrangements in lexicographic order.
pub fn sym_group(f: &Polynomial, n: usize, block: &[usize]) -> Result<PermGroup> {
    let prefix = f
        .arity()
        .checked_sub(n)
        .ok_or(Error::DegreeMismatch { expected: n, found: f.arity() })?;
    for i in f.support() {
        if i >= prefix && !block.contains(&(i - prefix)) {
            return Err(Error::SupportOutsideBlock);
        }
    }
    let table: HashMap<&[u32], &Rat> =
        f.terms().iter().map(|(m, c)| (m.exps(), c)).collect();
    let mut kept = Vec::new();
    for arr in arrangements(block) {
        let mut ring_images: Vec<usize> = (0..f.arity()).collect();
        for (k, &p) in block.iter().enumerate() {
            ring_images[prefix + p] = prefix + arr[k];
        }
        if fixes(f, &ring_images, &table) {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &p) in block.iter().enumerate() {
                images[p] = arr[k];
            }
            kept.push(Permutation::from_images(images).expect("bijective by construction"));
        }
    }
    PermGroup::from_elements(n, kept)
}

// Term-by-term fixed-point check with early exit; the substitution permutes
// terms bijectively, so mapping every term into the table is enough.
fn fixes(f: &Polynomial, ring_images: &[usize], table: &HashMap<&[u32], &Rat>) -> bool {
    for (m, c) in f.terms() {
        let pm = m.permute(ring_images);
        match table.get(pm.exps()) {
            Some(&tc) if tc == c => {}
            _ => return false,
        }
    }
    true
}

/// Applies the variable substitution `x_i -> x_{sigma(i)}` to every
/// polynomial in the list.
pub fn apply_perm_polys(sigma: &Permutation, ps: &[Polynomial]) -> Vec<Polynomial> {
    ps.iter().map(|p| p.permute_vars(sigma.images())).collect()
}

/// Membership test straight from the definition: every permuted generator
/// must lie in the ideal.
pub fn dec_oracle_member(sigma: &Permutation, g: &GroebnerBasis) -> Result<bool> {
    if sigma.degree() != g.arity() {
        return Err(Error::DegreeMismatch { expected: g.arity(), found: sigma.degree() });
    }
    Ok(g
        .generators()
        .iter()
        .all(|gen| reduces_to_zero(&gen.permute_vars(sigma.images()), g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadicalPolicy {
    /// Radicalize silently when needed and report that it happened.
    #[default]
    Auto,
    /// Error out on non-radical input.
    Strict,
    /// Proceed on the ideal as given.
    Off,
}

impl RadicalPolicy {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "auto" => Some(RadicalPolicy::Auto),
            "strict" => Some(RadicalPolicy::Strict),
            "off" => Some(RadicalPolicy::Off),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Candidate group assembled from block symmetric groups.
    Symbolic,
    /// Candidate group is all block-preserving permutations (used above the
    /// symbolic cutoff); the membership oracle does all the work.
    OracleOnly,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Symbolic => write!(f, "symbolic"),
            Strategy::OracleOnly => write!(f, "oracle-only"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecOptions {
    pub radical_policy: RadicalPolicy,
    /// Largest quotient dimension for which tagged characteristic
    /// polynomials are expanded symbolically.
    pub symbolic_cutoff: usize,
    pub budget: Budget,
}

impl Default for DecOptions {
    fn default() -> Self {
        DecOptions {
            radical_policy: RadicalPolicy::Auto,
            symbolic_cutoff: 16,
            budget: Budget::unlimited(),
        }
    }
}

/// Everything the pipeline learned about one ideal.
#[derive(Debug, Clone)]
pub struct DecResult {
    /// Basis the group was computed against (post-radicalization when that
    /// was applied).
    pub gb: GroebnerBasis,
    pub quotient_dimension: usize,
    /// Characteristic polynomial of multiplication by each variable,
    /// univariate in lambda.
    pub char_polys: Vec<Polynomial>,
    pub partition: VariablePartition,
    /// Per-block tagged characteristic polynomials (symbolic strategy only),
    /// parallel to `partition.blocks()`.
    pub block_polys: Vec<Polynomial>,
    /// Per-block symmetric groups (symbolic strategy only).
    pub block_sym_groups: Vec<PermGroup>,
    /// Product of the block groups (or of the full block-preserving groups
    /// in oracle-only mode); always contains the confirmed group.
    pub candidate_group: PermGroup,
    /// The confirmed decomposition group.
    pub dec_group: PermGroup,
    pub radicalized: bool,
    pub strategy: Strategy,
    pub warnings: Vec<String>,
}

/// Full pipeline from raw generators.
pub fn dec_group(
    ps: &[Polynomial],
    order: &MonomialOrder,
    options: &DecOptions,
) -> Result<DecResult> {
    if ps.is_empty() {
        return Err(Error::Usage("no generators given".into()));
    }
    let gb = buchberger_with(ps, order, &options.budget)?;
    dec_group_from_basis(&gb, options)
}

/// Pipeline from an already-computed reduced basis.
pub fn dec_group_from_basis(gb: &GroebnerBasis, options: &DecOptions) -> Result<DecResult> {
    let n = gb.arity();
    let mut warnings = Vec::new();

    if gb.is_unit_ideal() {
        // degenerate: the zero set is empty, every permutation fixes <1>
        warnings.push(
            "ideal is the unit ideal (empty zero set); every permutation fixes it".into(),
        );
        let full = PermGroup::symmetric(n)?;
        return Ok(DecResult {
            gb: gb.clone(),
            quotient_dimension: 0,
            char_polys: Vec::new(),
            partition: VariablePartition::singletons(n),
            block_polys: Vec::new(),
            block_sym_groups: Vec::new(),
            candidate_group: full.clone(),
            dec_group: full,
            radicalized: false,
            strategy: Strategy::OracleOnly,
            warnings,
        });
    }
    if !is_zero_dimensional(gb)? {
        return Err(Error::NotZeroDimensional);
    }

    let mut basis = gb.clone();
    let mut radicalized = false;
    match options.radical_policy {
        RadicalPolicy::Off => {}
        policy => {
            let (rad, changed) = radicalize_with(&basis, &options.budget)?;
            if changed {
                if policy == RadicalPolicy::Strict {
                    return Err(Error::NotRadical);
                }
                warnings.push("input ideal was not radical; replaced by its radical".into());
                basis = rad;
                radicalized = true;
            }
        }
    }

    let quotient = mult_matrices(&basis)?;
    let dim = quotient.dimension();
    let char_polys = variable_char_polys(&quotient)?;
    let partition = partition_variables(&char_polys);

    let strategy = if dim <= options.symbolic_cutoff {
        Strategy::Symbolic
    } else {
        Strategy::OracleOnly
    };
    let mut block_polys = Vec::new();
    let mut block_sym_groups = Vec::new();
    let mut factors: Vec<(Vec<usize>, PermGroup)> = Vec::new();
    for block in partition.blocks() {
        let group = match strategy {
            Strategy::Symbolic => {
                let f = block_char_poly(&quotient, block)?;
                let sym = sym_group(&f, n, block)?;
                block_polys.push(f);
                block_sym_groups.push(sym.clone());
                sym
            }
            Strategy::OracleOnly => PermGroup::symmetric_on_block(n, block)?,
        };
        factors.push((block.clone(), group));
    }
    let candidate_group = PermGroup::direct_product_on_blocks(n, &factors)?;

    let mut confirmed = Vec::new();
    for sigma in candidate_group.elements() {
        if dec_oracle_member(sigma, &basis)? {
            confirmed.push(sigma.clone());
        }
    }
    let dec_group = PermGroup::from_elements(n, confirmed)
        .expect("the ideal stabilizer is a group");
    debug_assert!(dec_group.is_subgroup_of(&candidate_group));

    Ok(DecResult {
        gb: basis,
        quotient_dimension: dim,
        char_polys,
        partition,
        block_polys,
        block_sym_groups,
        candidate_group,
        dec_group,
        radicalized,
        strategy,
        warnings,
    })
}

/// Result of the direct method on an explicit zero set.
#[derive(Debug, Clone)]
pub struct PointsDecResult {
    /// The set of i-th coordinates across all points, per variable.
    pub coordinate_sets: Vec<BTreeSet<Rat>>,
    pub partition: VariablePartition,
    /// All block-preserving permutations.
    pub candidate_group: PermGroup,
    /// Permutations mapping the point set onto itself.
    pub dec_group: PermGroup,
}

/// Coordinate sets and their equality partition.
pub fn partition_from_points(
    points: &[Vec<Rat>],
) -> Result<(Vec<BTreeSet<Rat>>, VariablePartition)> {
    if points.is_empty() {
        return Err(Error::Usage("no points given".into()));
    }
    let n = points[0].len();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch("ragged point coordinates".into()));
        }
    }
    let sets: Vec<BTreeSet<Rat>> = (0..n)
        .map(|i| points.iter().map(|p| p[i].clone()).collect())
        .collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match blocks.iter_mut().find(|b| sets[b[0]] == sets[i]) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    Ok((sets, VariablePartition { blocks }))
}

/// Direct method: the decomposition group of the vanishing ideal of a
/// finite rational point set, by testing block-preserving permutations
/// against the set itself.
pub fn dec_from_points(points: &[Vec<Rat>]) -> Result<PointsDecResult> {
    let (coordinate_sets, partition) = partition_from_points(points)?;
    let n = points[0].len();
    {
        let mut set = BTreeSet::new();
        for p in points {
            if !set.insert(p.clone()) {
                return Err(Error::DuplicatePoints);
            }
        }
    }
    let factors: Vec<(Vec<usize>, PermGroup)> = partition
        .blocks()
        .iter()
        .map(|b| Ok((b.clone(), PermGroup::symmetric_on_block(n, b)?)))
        .collect::<Result<_>>()?;
    let candidate_group = PermGroup::direct_product_on_blocks(n, &factors)?;
    let point_set: BTreeSet<&[Rat]> = points.iter().map(|p| p.as_slice()).collect();
    let mut confirmed = Vec::new();
    for sigma in candidate_group.elements() {
        let ok = points.iter().all(|p| {
            let image: Vec<Rat> = (0..n).map(|i| p[sigma.apply(i)].clone()).collect();
            point_set.contains(image.as_slice())
        });
        if ok {
            confirmed.push(sigma.clone());
        }
    }
    let dec_group =
        PermGroup::from_elements(n, confirmed).expect("point-set stabilizer is a group");
    Ok(PointsDecResult { coordinate_sets, partition, candidate_group, dec_group })
}
