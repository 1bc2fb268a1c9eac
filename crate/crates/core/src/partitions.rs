//! Partition combinatorics underlying the vanishing bounds.
//!
//! Provides:
//! - [`delta`], the staircase inverse `x ↦ m` with `C(m,2) ≤ x < C(m+1,2)`;
//! - [`IntPartition`] with transposition, Durfee rank, and hook detection;
//! - [`HookShape`], the hooks `Γ^α_k` of weight `k` with arm `α`;
//! - [`dominance_compare`], the dominance pre-order extended to partitions of
//!   unequal weight by cross-scaling;
//! - [`phi`] / [`phi_compare`], the injection of `ℕ×ℕ` into triples and its
//!   lexicographic order.
//!
//! Everything is exact integer arithmetic; `delta` in particular never goes
//! through floating point, so triangular-number boundaries cannot misround.

use std::cmp::Ordering;
use std::fmt;

use crate::{ensure, Error, Result};

/// The binomial `C(m, 2) = m(m−1)/2`: the number of cells in a staircase with
/// `m − 1` steps.
pub fn choose2(m: u64) -> u64 {
    (m as u128 * m.saturating_sub(1) as u128 / 2)
        .try_into()
        .expect("C(m,2) overflows u64")
}

/// The unique `m ≥ 1` with `C(m,2) ≤ x < C(m+1,2)`.
///
/// First values: `delta(0) = 1`, `delta(1) = delta(2) = 2`,
/// `delta(3..=5) = 3`, `delta(6..=9) = 4`, `delta(10) = 5`.
///
/// Equals the integral part of `(sqrt(8x+1)+1)/2`, but is computed by an
/// integer square root plus exact adjustment against the defining
/// inequalities, so the answer is correct even at staircase boundaries.
pub fn delta(x: u64) -> u64 {
    let x = x as u128;
    let mut m = (8 * x + 1).isqrt().div_ceil(2);
    m = m.max(1);
    while m * (m - 1) / 2 > x {
        m -= 1;
    }
    while m * (m + 1) / 2 <= x {
        m += 1;
    }
    m as u64
}

/// A partition: a finite non-increasing sequence of positive integers.
///
/// The empty sequence is the zero-partition. Ordering (`Ord`) is
/// lexicographic on the part lists and exists so partitions can key ordered
/// maps; it is unrelated to dominance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPartition {
    parts: Vec<u64>,
}

impl IntPartition {
    /// Validates that `parts` is non-increasing with every part positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let valid = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if valid {
            Ok(Self { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// The zero-partition `()`.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The `i`-th part (0-indexed); indices past the length read as 0, which
    /// is the usual convention for prefix-sum and containment formulas.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the zero-partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts
            .iter()
            .map(|&p| p as u128)
            .sum::<u128>()
            .try_into()
            .expect("partition weight overflows u64")
    }

    /// The conjugate partition: the diagram reflected across the main
    /// diagonal. `transpose` is an involution and preserves weight.
    pub fn transpose(&self) -> IntPartition {
        let mut parts = Vec::with_capacity(self.part(0) as usize);
        for j in 1..=self.part(0) {
            // Column j has one cell for every row of length ≥ j; rows are
            // non-increasing, so those are exactly a prefix.
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count() as u64);
        }
        IntPartition { parts }
    }

    /// Durfee rank: the largest `ρ` with `u_ρ ≥ ρ`, i.e. the side of the
    /// largest square inside the diagram. The zero-partition has rank 0.
    pub fn rank(&self) -> usize {
        (1..=self.parts.len())
            .take_while(|&i| self.parts[i - 1] >= i as u64)
            .count()
    }

    /// A hook is a partition of rank exactly 1: shape `(a+1, 1, …, 1)`.
    pub fn is_hook(&self) -> bool {
        self.rank() == 1
    }

    /// Whether this partition's diagram contains `other`'s cell-for-cell.
    pub fn contains(&self, other: &IntPartition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Diagram statistics reported together: Durfee rank and hook-ness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeStats {
    pub rank: usize,
    pub is_hook: bool,
}

/// Rank and hook flag of a partition; the zero-partition has rank 0 and is
/// not a hook.
pub fn shape_stats(u: &IntPartition) -> ShapeStats {
    ShapeStats {
        rank: u.rank(),
        is_hook: u.is_hook(),
    }
}

/// All partitions of `weight` with at most `max_len` parts, each part at most
/// `max_part`, in descending lexicographic order. Weight 0 yields exactly the
/// zero-partition.
pub fn partitions_in_box(weight: u64, max_len: usize, max_part: u64) -> Vec<IntPartition> {
    fn rec(
        remaining: u64,
        max_part: u64,
        slots: usize,
        current: &mut Vec<u64>,
        out: &mut Vec<IntPartition>,
    ) {
        if remaining == 0 {
            out.push(IntPartition {
                parts: current.clone(),
            });
            return;
        }
        if slots == 0 || max_part == 0 {
            return;
        }
        // The largest next part first keeps the output in descending
        // lexicographic order; a part can never exceed what remains.
        for next in (1..=remaining.min(max_part)).rev() {
            current.push(next);
            rec(remaining - next, next, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// The hook `Γ^α_k`: the rank-1 partition of weight `k` with first row
/// `α + 1`, i.e. shape `(α+1, 1, …, 1)`. Requires `0 ≤ α ≤ k−1`; the edge
/// cases are `Γ^0_k = ∧^k` (a column) and `Γ^{k−1}_k = S^k` (a row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookShape {
    alpha: u64,
    k: u64,
}

impl HookShape {
    pub fn new(alpha: u64, k: u64) -> Result<Self> {
        ensure!(
            k >= 1 && alpha < k,
            "hook parameters need 0 <= alpha <= k-1, got alpha={alpha}, k={k}"
        );
        Ok(Self { alpha, k })
    }

    /// Arm length minus one of the first row: the first row is `alpha + 1`.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// Total number of cells `k`.
    pub fn weight(&self) -> u64 {
        self.k
    }

    /// The underlying partition `(α+1, 1, …, 1)` of weight `k`.
    pub fn shape(&self) -> IntPartition {
        let mut parts = vec![self.alpha + 1];
        parts.extend(std::iter::repeat_n(1, (self.k - self.alpha - 1) as usize));
        IntPartition { parts }
    }
}

/// Outcome of comparing two non-zero partitions in the weighted dominance
/// pre-order.
///
/// The relation is reported in its strictest applicable form:
/// `StrictlyGreater` means `greater_eq` holds and `Equivalent` does not.
/// [`Dominance::greater_eq`] / [`Dominance::less_eq`] recover the non-strict
/// reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    /// Both directions hold; the two partitions are proportional in the
    /// cross-scaled prefix-sum sense (e.g. `(3)` and `(1)`).
    Equivalent,
    StrictlyGreater,
    StrictlyLess,
    Incomparable,
}

impl Dominance {
    /// `u ⪰ v`.
    pub fn greater_eq(self) -> bool {
        matches!(self, Dominance::Equivalent | Dominance::StrictlyGreater)
    }

    /// `u ⪯ v`.
    pub fn less_eq(self) -> bool {
        matches!(self, Dominance::Equivalent | Dominance::StrictlyLess)
    }
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Dominance::Equivalent => "Equivalent",
            Dominance::StrictlyGreater => "StrictlyGreater",
            Dominance::StrictlyLess => "StrictlyLess",
            Dominance::Incomparable => "Incomparable",
        };
        f.write_str(name)
    }
}

/// Compares `u` against `v` in the dominance pre-order on non-zero
/// partitions of arbitrary weight: with `|u| = n` and `|v| = m`, `u ⪰ v` iff
/// every prefix sum of `m·u` weakly exceeds the matching prefix sum of `n·v`
/// (missing parts count as 0).
///
/// The zero-partition is outside the pre-order and is rejected. Prefix sums
/// are accumulated in 128-bit arithmetic with overflow reported as an error
/// rather than wrapping.
pub fn dominance_compare(u: &IntPartition, v: &IntPartition) -> Result<Dominance> {
    ensure!(
        !u.is_empty() && !v.is_empty(),
        "the zero partition is outside the dominance pre-order"
    );
    let n = u.weight() as u128;
    let m = v.weight() as u128;
    let mut sum_u = 0u128;
    let mut sum_v = 0u128;
    let mut ge = true;
    let mut le = true;
    for i in 0..u.len().max(v.len()) {
        sum_u = m
            .checked_mul(u.part(i) as u128)
            .and_then(|t| sum_u.checked_add(t))
            .ok_or(Error::Overflow("dominance prefix sums"))?;
        sum_v = n
            .checked_mul(v.part(i) as u128)
            .and_then(|t| sum_v.checked_add(t))
            .ok_or(Error::Overflow("dominance prefix sums"))?;
        ge &= sum_u >= sum_v;
        le &= sum_u <= sum_v;
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equivalent,
        (true, false) => Dominance::StrictlyGreater,
        (false, true) => Dominance::StrictlyLess,
        (false, false) => Dominance::Incomparable,
    })
}

/// The image `φ(x, α) = (δ(x)+α, x−C(δ(x),2), α)` of a pair under the
/// staircase injection. Ordered lexicographically (derived `Ord`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhiTriple(pub u64, pub u64, pub u64);

/// The injection `ℕ×ℕ → ℕ³`; its second coordinate satisfies
/// `0 ≤ x − C(δ(x),2) < δ(x)`.
pub fn phi(x: u64, alpha: u64) -> PhiTriple {
    let d = delta(x);
    PhiTriple(d + alpha, x - choose2(d), alpha)
}

/// The order `≤_φ` on pairs `(x, α)`: lexicographic comparison of the
/// `phi` triples. `Equal` occurs only on identical pairs.
pub fn phi_compare(a: (u64, u64), b: (u64, u64)) -> Ordering {
    phi(a.0, a.1).cmp(&phi(b.0, b.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(parts: &[u64]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    /// Exact integer square root by bisection, independent of the library's
    /// `isqrt`-based path.
    fn slow_isqrt(n: u64) -> u64 {
        let mut lo = 0u64;
        let mut hi = 1u64 << 32;
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if (mid as u128) * (mid as u128) <= n as u128 {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    #[test]
    fn delta_first_values() {
        let expected = [1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5];
        for (x, &d) in expected.iter().enumerate() {
            assert_eq!(delta(x as u64), d, "delta({x})");
        }
    }

    #[test]
    fn delta_defining_inequalities() {
        for x in 0..=5000u64 {
            let m = delta(x);
            assert!(choose2(m) <= x && x < choose2(m + 1), "delta({x}) = {m}");
            // Closed form, evaluated exactly.
            assert_eq!(m, slow_isqrt(8 * x + 1).div_ceil(2));
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(part(&[3]).transpose(), part(&[1, 1, 1]));
        assert_eq!(part(&[2, 1]).transpose(), part(&[2, 1]));
        assert_eq!(IntPartition::empty().transpose(), IntPartition::empty());
        assert_eq!(part(&[4, 2, 1]).transpose(), part(&[3, 2, 1, 1]));
    }

    #[test]
    fn rank_and_hooks() {
        assert_eq!(
            shape_stats(&part(&[3, 1])),
            ShapeStats {
                rank: 1,
                is_hook: true
            }
        );
        assert_eq!(
            shape_stats(&part(&[2, 2])),
            ShapeStats {
                rank: 2,
                is_hook: false
            }
        );
        assert_eq!(
            shape_stats(&IntPartition::empty()),
            ShapeStats {
                rank: 0,
                is_hook: false
            }
        );
        let hook = HookShape::new(2, 4).unwrap();
        assert_eq!(hook.shape(), part(&[3, 1]));
        assert!(hook.shape().is_hook());
        assert_eq!(HookShape::new(0, 3).unwrap().shape(), part(&[1, 1, 1]));
        assert_eq!(HookShape::new(2, 3).unwrap().shape(), part(&[3]));
        assert!(HookShape::new(3, 3).is_err());
        assert!(HookShape::new(0, 0).is_err());
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(IntPartition::new(vec![1, 2]).is_err());
        assert!(IntPartition::new(vec![2, 0]).is_err());
        assert!(IntPartition::new(vec![]).is_ok());
    }

    #[test]
    fn dominance_examples() {
        let cmp = |u: &[u64], v: &[u64]| dominance_compare(&part(u), &part(v)).unwrap();
        assert_eq!(cmp(&[2], &[1, 1]), Dominance::StrictlyGreater);
        assert_eq!(cmp(&[1, 1], &[1, 1, 1]), Dominance::StrictlyGreater);
        assert_eq!(cmp(&[3], &[1]), Dominance::Equivalent);
        assert_eq!(cmp(&[3, 1, 1, 1], &[2, 2, 2]), Dominance::Incomparable);
        assert_eq!(cmp(&[1, 1, 1], &[1, 1]), Dominance::StrictlyLess);
    }

    #[test]
    fn dominance_rejects_zero_partition() {
        let e = IntPartition::empty();
        assert!(dominance_compare(&e, &part(&[1])).is_err());
        assert!(dominance_compare(&part(&[1]), &e).is_err());
        assert!(dominance_compare(&e, &e).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0, 0), PhiTriple(1, 0, 0));
        assert_eq!(phi(5, 2), PhiTriple(5, 2, 2));
        assert_eq!(phi(8, 1), PhiTriple(5, 2, 1));
    }

    #[test]
    fn phi_compare_examples() {
        assert_eq!(phi_compare((8, 1), (5, 2)), Ordering::Less);
        assert_eq!(phi_compare((2, 3), (5, 2)), Ordering::Less);
        assert_eq!(phi_compare((5, 2), (5, 2)), Ordering::Equal);
    }

    #[test]
    fn partitions_in_box_enumeration() {
        assert_eq!(partitions_in_box(0, 4, 4), vec![IntPartition::empty()]);
        let of_four: Vec<_> = partitions_in_box(4, 4, 4);
        let expected: Vec<IntPartition> = [
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ]
        .into_iter()
        .map(|p| IntPartition::new(p).unwrap())
        .collect();
        assert_eq!(of_four, expected);
        // The box actually constrains.
        assert_eq!(partitions_in_box(4, 2, 4).len(), 3);
        assert_eq!(partitions_in_box(4, 4, 2).len(), 3);
        assert_eq!(partitions_in_box(3, 1, 2), Vec::<IntPartition>::new());
    }

    fn arb_partition(max_parts: usize, max_part: u64) -> impl Strategy<Value = IntPartition> {
        prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            IntPartition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn transpose_involution(u in arb_partition(8, 9)) {
            let t = u.transpose();
            prop_assert_eq!(t.weight(), u.weight());
            prop_assert_eq!(t.transpose(), u);
        }

        #[test]
        fn dominance_reflexive_and_transitive(
            u in arb_partition(5, 6),
            v in arb_partition(5, 6),
            w in arb_partition(5, 6),
        ) {
            prop_assume!(!u.is_empty() && !v.is_empty() && !w.is_empty());
            prop_assert_eq!(dominance_compare(&u, &u).unwrap(), Dominance::Equivalent);
            let uv = dominance_compare(&u, &v).unwrap();
            let vw = dominance_compare(&v, &w).unwrap();
            let uw = dominance_compare(&u, &w).unwrap();
            if uv.greater_eq() && vw.greater_eq() {
                prop_assert!(uw.greater_eq());
            }
            // Antisymmetry up to Equivalent is how the four-way report is built.
            let vu = dominance_compare(&v, &u).unwrap();
            prop_assert_eq!(uv.greater_eq() && uv.less_eq(), uv == Dominance::Equivalent);
            prop_assert_eq!(uv.greater_eq(), vu.less_eq());
        }

        #[test]
        fn delta_staircase_step(x in 0u64..20_000) {
            // delta increments by exactly 1 when stepping by delta(x).
            prop_assert_eq!(delta(x + delta(x)), delta(x) + 1);
        }
    }
}
