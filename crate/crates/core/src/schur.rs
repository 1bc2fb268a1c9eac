//! Schur-functor decomposition algebra.
//!
//! Provides:
//! - [`lr_decompose`] — Littlewood–Richardson products by explicit
//!   enumeration of LR skew tableaux (lattice-word condition);
//! - [`sym_wedge_decompose`] — the two-hook decomposition of `S^a ⊗ ∧^b`;
//! - [`tensor_power_decompose`] — iterated tensor powers of the standard
//!   representation;
//! - [`weyl_dim`] — exact dimensions of irreducible `GL(d)` modules by the
//!   Weyl product formula, in arbitrary precision;
//! - [`relative_forms_decompose`] — the decomposition of the exterior powers
//!   of the relative cotangent bundle of a Grassmann-bundle fibration into
//!   `S_u Q^* ⊗ ∧_u S` terms.
//!
//! Multiplicities and dimensions are exact; dimensions use [`BigUint`]
//! because the Weyl product overflows 64 bits already for moderate shapes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::partitions::{partitions_in_box, HookShape, IntPartition};
use crate::{ensure, Error, Result};

/// A dominant `GL(d)` weight: a finite non-increasing sequence of integers.
/// Unlike a partition, entries may be zero or negative (duals and
/// determinant twists).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    entries: Vec<i64>,
}

impl WeightVector {
    /// Validates that `entries` is non-increasing.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Self { entries })
        } else {
            Err(Error::InvalidWeight(entries))
        }
    }

    /// A partition read as a (non-negative) weight.
    pub fn from_partition(u: &IntPartition) -> Self {
        Self {
            entries: u.parts().iter().map(|&p| p as i64).collect(),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entrywise shift by `c` (tensoring with the `c`-th power of the
    /// determinant character); preserves dominance.
    pub fn shifted(&self, c: i64) -> WeightVector {
        WeightVector {
            entries: self.entries.iter().map(|&v| v + c).collect(),
        }
    }

    /// Reverse the entries and negate them: the highest weight of the dual
    /// module. Preserves dominance.
    pub fn reversed_negated(&self) -> WeightVector {
        WeightVector {
            entries: self.entries.iter().rev().map(|&v| -v).collect(),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A formal sum of Schur functors: pairwise-distinct partitions with positive
/// multiplicities. All terms of a product `u ⊗ v` share weight `|u| + |v|`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurDecomposition {
    terms: BTreeMap<IntPartition, u64>,
}

impl SchurDecomposition {
    /// The single term `{u: 1}`.
    pub fn single(u: IntPartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(u, 1);
        Self { terms }
    }

    fn add(&mut self, u: IntPartition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(u).or_insert(0) += mult;
        }
    }

    /// Terms in lexicographic partition order, each with its multiplicity.
    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, u64)> {
        self.terms.iter().map(|(u, &m)| (u, m))
    }

    /// Multiplicity of `u` (0 if absent).
    pub fn multiplicity(&self, u: &IntPartition) -> u64 {
        self.terms.get(u).copied().unwrap_or(0)
    }

    /// Number of distinct partitions present.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Total dimension on a `d`-dimensional space: the multiplicity-weighted
    /// sum of `weyl_dim`. Terms with more than `d` rows are the zero functor
    /// there and contribute nothing.
    pub fn dimension_in(&self, d: usize) -> BigUint {
        self.terms
            .iter()
            .filter(|(u, _)| u.len() <= d)
            .map(|(u, &m)| {
                weyl_dim(&WeightVector::from_partition(u), d)
                    .expect("partitions with at most d rows are dominant")
                    * m
            })
            .sum()
    }
}

impl fmt::Display for SchurDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (u, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

/// The Littlewood–Richardson product: all `λ` with `c^λ_{u,v} > 0`, each with
/// its coefficient. The coefficient is computed by enumerating semistandard
/// skew tableaux of shape `λ/u` and content `v` whose reverse reading word
/// (right-to-left, top-to-bottom) is a lattice word. The zero-partition is
/// the identity; the result does not depend on the argument order.
pub fn lr_decompose(u: &IntPartition, v: &IntPartition) -> SchurDecomposition {
    if u.is_empty() {
        return SchurDecomposition::single(v.clone());
    }
    if v.is_empty() {
        return SchurDecomposition::single(u.clone());
    }
    let total = u.weight() + v.weight();
    let max_len = u.len() + v.len();
    let max_first = u.part(0) + v.part(0);
    let mut out = SchurDecomposition::default();
    for lambda in partitions_in_box(total, max_len, max_first) {
        if !lambda.contains(u) {
            continue;
        }
        let coeff = lr_tableau_count(&lambda, u, v);
        out.add(lambda, coeff);
    }
    out
}

/// Number of LR skew tableaux of shape `lambda/inner` with content `content`.
fn lr_tableau_count(lambda: &IntPartition, inner: &IntPartition, content: &IntPartition) -> u64 {
    // Cells in reading order: rows top to bottom, right to left within a row,
    // so the word formed by the entries as placed is exactly the reverse
    // reading word whose prefixes must satisfy the lattice condition.
    let mut cells = Vec::new();
    for i in 0..lambda.len() {
        for j in (inner.part(i)..lambda.part(i)).rev() {
            cells.push((i, j as usize));
        }
    }

    struct Search<'a> {
        lambda: &'a IntPartition,
        inner: &'a IntPartition,
        content: &'a IntPartition,
        cells: &'a [(usize, usize)],
        grid: Vec<Vec<u64>>,
        counts: Vec<u64>,
    }

    impl Search<'_> {
        fn fill(&mut self, idx: usize) -> u64 {
            let Some(&(i, j)) = self.cells.get(idx) else {
                // Weights match, so a complete filling has content exactly v.
                return 1;
            };
            // Strictly below the skew cell above (inner cells impose nothing).
            let min = if i > 0 && (j as u64) >= self.inner.part(i - 1) {
                self.grid[i - 1][j] + 1
            } else {
                1
            };
            // Weakly left of the already-placed right neighbour.
            let max = if (j as u64) + 1 < self.lambda.part(i) {
                self.grid[i][j + 1]
            } else {
                self.content.len() as u64
            };
            let mut total = 0;
            for t in min..=max {
                let ti = t as usize;
                // Content bound and the lattice condition: after placing t,
                // every prefix must contain at least as many t−1 as t.
                if self.counts[ti] >= self.content.part(ti - 1) {
                    continue;
                }
                if t > 1 && self.counts[ti - 1] <= self.counts[ti] {
                    continue;
                }
                self.grid[i][j] = t;
                self.counts[ti] += 1;
                total += self.fill(idx + 1);
                self.counts[ti] -= 1;
                self.grid[i][j] = 0;
            }
            total
        }
    }

    let grid = (0..lambda.len())
        .map(|i| vec![0u64; lambda.part(i) as usize])
        .collect();
    let mut search = Search {
        lambda,
        inner,
        content,
        cells: &cells,
        grid,
        counts: vec![0; content.len() + 1],
    };
    search.fill(0)
}

/// The decomposition of `S^α ⊗ ∧^β`: for `α, β ≥ 1` exactly the two hooks
/// `Γ^α_{α+β} ⊕ Γ^{α−1}_{α+β}`; a lone `S^α` or `∧^β` when the other factor
/// is trivial. Both zero is rejected.
pub fn sym_wedge_decompose(alpha: u64, beta: u64) -> Result<SchurDecomposition> {
    ensure!(
        (alpha, beta) != (0, 0),
        "S^0 ⊗ ∧^0 is the trivial functor; no decomposition to report"
    );
    let k = alpha + beta;
    let mut out = SchurDecomposition::default();
    // Γ^α_{α+β} has first row α+1, which needs β ≥ 1 to fit inside weight k.
    if beta >= 1 {
        out.add(HookShape::new(alpha, k)?.shape(), 1);
    }
    // Γ^{α−1}_{α+β} has first row α; at β = 0 it is the single row S^α.
    if alpha >= 1 {
        out.add(HookShape::new(alpha - 1, k)?.shape(), 1);
    }
    Ok(out)
}

/// The full decomposition of the `α`-fold tensor power of the standard
/// representation, by iterated Littlewood–Richardson products with a single
/// box. The row `(α)` always appears with multiplicity 1 and strictly
/// dominates every other term.
pub fn tensor_power_decompose(alpha: u64) -> Result<SchurDecomposition> {
    ensure!(alpha >= 1, "tensor power needs alpha >= 1, got {alpha}");
    let box_ = IntPartition::new(vec![1]).expect("(1) is a partition");
    let mut acc = SchurDecomposition::single(box_.clone());
    for _ in 1..alpha {
        let mut next = SchurDecomposition::default();
        for (lambda, mult) in acc.terms() {
            for (nu, c) in lr_decompose(lambda, &box_).terms() {
                next.add(nu.clone(), mult * c);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Dimension of the irreducible `GL(d)` module with highest weight `lambda`,
/// by the Weyl product formula `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`, exact.
///
/// `lambda` is padded with zeros to length `d` and must still be
/// non-increasing after padding (so a weight with negative entries must
/// already have length `d`). More than `d` entries is a domain error.
pub fn weyl_dim(lambda: &WeightVector, d: usize) -> Result<BigUint> {
    ensure!(d >= 1, "weyl_dim needs d >= 1");
    ensure!(
        lambda.len() <= d,
        "weight {lambda} has {} entries but the group is GL({d})",
        lambda.len()
    );
    let mut padded = lambda.entries().to_vec();
    padded.resize(d, 0);
    if !padded.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::InvalidWeight(padded));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in (i + 1)..d {
            let factor = (padded[i] as i128 - padded[j] as i128) + (j - i) as i128;
            num *= BigUint::from(u64::try_from(factor).expect("dominant factors are positive"));
            den *= BigUint::from((j - i) as u64);
        }
    }
    let dim = &num / &den;
    debug_assert_eq!(&dim * &den, num, "Weyl product must divide exactly");
    Ok(dim)
}

/// One summand `S_u Q^* ⊗ ∧_u S` of an exterior power of the relative
/// cotangent bundle of a Grassmann-bundle fibration, where `∧_u = S_ũ` is the
/// Schur functor of the conjugate shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeFormsTerm {
    u: IntPartition,
    conjugate: IntPartition,
}

impl RelativeFormsTerm {
    /// The indexing partition `u`.
    pub fn shape(&self) -> &IntPartition {
        &self.u
    }

    /// The conjugate `ũ`, which is the Schur index acting on the sub-bundle.
    pub fn conjugate(&self) -> &IntPartition {
        &self.conjugate
    }

    /// Description of the quotient-side factor, `S_u Q^*`.
    pub fn quotient_factor(&self) -> String {
        format!("S_{} Q*", self.u)
    }

    /// Description of the sub-side factor, `∧_u S = S_ũ S`.
    pub fn sub_factor(&self) -> String {
        format!("∧_{} S", self.u)
    }
}

impl fmt::Display for RelativeFormsTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{} Q* ⊗ ∧_{} S", self.u, self.u)
    }
}

/// The decomposition of the `m`-th exterior power of the relative cotangent
/// bundle of a Grassmann bundle with tautological quotient rank `r` and
/// sub-bundle rank `s`: one term `S_u Q^* ⊗ ∧_u S` for every partition `u` of
/// weight `m` with at most `r` rows and first part at most `s` (both factors
/// non-vanishing). Terms are listed in descending lexicographic order of `u`.
pub fn relative_forms_decompose(m: u64, r: u64, s: u64) -> Result<Vec<RelativeFormsTerm>> {
    ensure!(
        r >= 1 && s >= 1,
        "factor ranks must be positive, got r={r}, s={s}"
    );
    let r = usize::try_from(r).expect("rank r exceeds the address space");
    Ok(partitions_in_box(m, r, s)
        .into_iter()
        .map(|u| {
            let conjugate = u.transpose();
            RelativeFormsTerm { u, conjugate }
        })
        .collect())
}
