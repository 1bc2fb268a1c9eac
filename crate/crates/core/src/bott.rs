//! Bott's algorithm on the Grassmannian.
//!
//! Computes the cohomology of the homogeneous bundle `S_a Q ⊗ S_b S` on the
//! Grassmannian `Gr(r, d)` of rank-`r` quotients of a `d`-dimensional space:
//! concatenate the two weight blocks into `v = (a, b)` (quotient block
//! first), subtract the staircase `c(d) = (1, 2, …, d)`, and read the answer
//! off the resulting vector `w`:
//!
//! - a repeated entry in `w` means every cohomology group vanishes;
//! - otherwise exactly one degree survives — the inversion count
//!   `i(w) = #{(i,j) : i < j, w_i < w_j}` — and the group there is the
//!   irreducible module of highest weight `ψ = sort_desc(w) + c(d)`.
//!
//! [`pm_forms_cohomology`] specializes this engine to twisted holomorphic
//! forms `Ω^p(t)` on projective `m`-space (`Gr(m, m+1)`), and
//! [`serre_dual_input`] / [`optimality_input`] build the dual twist and the
//! family that realizes the vanishing bound's boundary exactly.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::schur::{weyl_dim, WeightVector};
use crate::{ensure, Result};

/// A homogeneous bundle `S_a Q ⊗ S_b S` on `Gr(r, d)`: `a` acts on the
/// rank-`r` tautological quotient (first block), `b` on the rank-`(d−r)`
/// sub-bundle. Both blocks must be non-empty, so `1 ≤ r < d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottInput {
    a: WeightVector,
    b: WeightVector,
}

impl BottInput {
    pub fn new(a: WeightVector, b: WeightVector) -> Result<Self> {
        ensure!(
            !a.is_empty() && !b.is_empty(),
            "both weight blocks must be non-empty (need 1 <= r < d)"
        );
        Ok(Self { a, b })
    }

    /// Rank of the quotient factor.
    pub fn r(&self) -> usize {
        self.a.len()
    }

    /// Dimension of the ambient space; `dim Gr(r, d) = r(d−r)`.
    pub fn d(&self) -> usize {
        self.a.len() + self.b.len()
    }

    /// Weight on the tautological quotient.
    pub fn a(&self) -> &WeightVector {
        &self.a
    }

    /// Weight on the tautological sub-bundle.
    pub fn b(&self) -> &WeightVector {
        &self.b
    }
}

/// Cohomology of a homogeneous bundle: either everything vanishes, or
/// exactly one degree carries an irreducible module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottResult {
    /// Every cohomology group is zero (the shifted weight had a repeat).
    Zero,
    /// `H^degree` is the irreducible module of highest weight `psi`; all
    /// other degrees vanish. `degree ≤ r(d−r)` always.
    NonZero {
        degree: u64,
        psi: WeightVector,
        dim: BigUint,
    },
}

impl BottResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottResult::Zero)
    }
}

/// Runs Bott's algorithm on `S_a Q ⊗ S_b S`.
pub fn bott_cohomology(input: &BottInput) -> BottResult {
    let d = input.d();
    let w: Vec<i64> = input
        .a()
        .entries()
        .iter()
        .chain(input.b().entries())
        .zip(1..)
        .map(|(&v, i)| v - i)
        .collect();

    let mut sorted = w.clone();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.windows(2).any(|pair| pair[0] == pair[1]) {
        return BottResult::Zero;
    }

    // Pairwise inversion count; d is small, clarity over cleverness.
    let degree = (0..d)
        .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] < w[j])
        .count() as u64;

    let psi = WeightVector::new(sorted.iter().zip(1..).map(|(&v, i)| v + i).collect())
        .expect("distinct entries sorted descending stay dominant after the staircase shift");
    let dim = weyl_dim(&psi, d).expect("psi has length d and is dominant");
    BottResult::NonZero { degree, psi, dim }
}

/// The bundle `S^f Q ⊗ (det S)^{⊗(d−1)}` on `Gr(r, d)` with `d = f + r`:
/// `a = (f, 0, …, 0)` (r entries), `b = (d−1, …, d−1)` (f entries).
///
/// This family realizes the vanishing bound's boundary exactly: its only
/// cohomology is one copy of `(det V)^{⊗f}` in degree `f(r−1)`.
pub fn optimality_input(r: u64, f: u64) -> Result<BottInput> {
    ensure!(
        r >= 1 && f >= 1,
        "optimality family needs r, f >= 1, got r={r}, f={f}"
    );
    let d = (f + r) as i64;
    let mut a = vec![0i64; r as usize];
    a[0] = f as i64;
    let b = vec![d - 1; f as usize];
    BottInput::new(
        WeightVector::new(a).expect("(f, 0, …, 0) is non-increasing"),
        WeightVector::new(b).expect("a constant vector is non-increasing"),
    )
}

/// The input computing `F^* ⊗ K`, where `K` is the canonical bundle of the
/// Grassmannian: each block is reversed and negated (dualization), and the
/// canonical twist `(det Q^*)^{⊗d}` is applied on the quotient block.
///
/// Pairing `F` with its dual-canonical twist exhibits Serre duality: zero
/// status matches, the two degrees sum to `r(d−r)`, and dimensions agree.
pub fn serre_dual_input(input: &BottInput) -> BottInput {
    let d = input.d() as i64;
    BottInput {
        a: input.a().reversed_negated().shifted(-d),
        b: input.b().reversed_negated(),
    }
}

/// Cohomology of the twisted holomorphic forms `Ω^p(t)` on projective
/// `m`-space, encoded on `Gr(m, m+1)` with the rank-`m` quotient first:
/// `a = (t, …, t, t−1, …, t−1)` with `p` trailing `t−1` entries, `b = (p)`.
///
/// Returns the (at most one) nonzero degree with its dimension; an empty map
/// means all cohomology vanishes. Requires `1 ≤ m` and `0 ≤ p ≤ m`.
pub fn pm_forms_cohomology(m: u64, p: u64, t: i64) -> Result<BTreeMap<u64, BigUint>> {
    ensure!(
        m >= 1,
        "projective space dimension must be positive, got m={m}"
    );
    ensure!(
        p <= m,
        "form degree p={p} out of range on projective {m}-space"
    );
    let mut a = vec![t; (m - p) as usize];
    a.extend(std::iter::repeat_n(t - 1, p as usize));
    let input = BottInput::new(
        WeightVector::new(a).expect("two-level vector is non-increasing"),
        WeightVector::new(vec![p as i64]).expect("a single entry is non-increasing"),
    )?;
    let mut out = BTreeMap::new();
    if let BottResult::NonZero { degree, dim, .. } = bott_cohomology(&input) {
        out.insert(degree, dim);
    }
    Ok(out)
}
