//! Numerical vanishing predicates for Dolbeault cohomology of
//! symmetric-times-exterior powers of ample bundles.
//!
//! Each predicate evaluates one of the vanishing bounds as exact integer
//! arithmetic and reports a [`VanishingVerdict`]: the bound's threshold, the
//! excess `q + p − n − threshold`, and whether the group `H^{p,q}` is
//! asserted to vanish (excess strictly positive). Boundary cases
//! (`excess = 0`) stay distinguishable from interior non-vanishing, which is
//! what the sharpness study needs.
//!
//! The predicates:
//! - [`vanish_main`] — hybrid powers `S^α E ⊗ ∧^β E ⊗ L` with the refined
//!   constant `r0 = min{β, δ(n−p), δ(n−q)}`;
//! - [`vanish_hook`] — the same bound stated for the hook functor `Γ^{α,k}`,
//!   with `β = k − α`;
//! - [`vanish_wedge`] — pure exterior powers (`α = 0` case);
//! - [`vanish_sym`] — pure symmetric powers (no `r0` refinement);
//! - [`vanish_nagoya`] — products `∧^{r_1}E_1 ⊗ ⋯ ⊗ ∧^{r_m}E_m ⊗ L`;
//! - [`vanish_sym_wedge_corollary`] — the unrefined hybrid bound
//!   `α(e−1) + β(e−β)`, the `r0 = β` specialization of the main bound.
//!
//! Ampleness hypotheses are reported as text only; deciding ampleness is out
//! of scope here (the harness decides it for split bundles).

use crate::partitions::delta;
use crate::{ensure, Error, Result};

/// Outcome of a vanishing predicate.
///
/// `vanishes` holds iff `excess = q + p − n − threshold` is strictly
/// positive. `r0` is the refinement constant `min{β, δ(n−p), δ(n−q)}` where
/// the bound uses one (absent for the pure-symmetric and unrefined bounds).
/// `hypothesis` records the ampleness assumption under which the verdict is
/// meaningful; it is metadata, never checked here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingVerdict {
    pub vanishes: bool,
    pub threshold: i64,
    pub excess: i64,
    pub r0: Option<u64>,
    pub hypothesis: String,
}

fn verdict(
    n: u64,
    p: u64,
    q: u64,
    threshold: i128,
    r0: Option<u64>,
    hypothesis: String,
) -> Result<VanishingVerdict> {
    let excess = q as i128 + p as i128 - n as i128 - threshold;
    let threshold = i64::try_from(threshold).map_err(|_| Error::Overflow("vanishing threshold"))?;
    let excess = i64::try_from(excess).map_err(|_| Error::Overflow("vanishing excess"))?;
    Ok(VanishingVerdict {
        vanishes: excess > 0,
        threshold,
        excess,
        r0,
        hypothesis,
    })
}

fn check_degrees(n: u64, p: u64, q: u64) -> Result<()> {
    ensure!(n >= 1, "the base dimension n must be positive");
    ensure!(
        p <= n && q <= n,
        "need 0 <= p, q <= n, got p={p}, q={q}, n={n}"
    );
    Ok(())
}

/// `min{β, δ(n−p), δ(n−q)}`, defined for `β ≥ 1`.
fn r0(n: u64, p: u64, q: u64, beta: u64) -> u64 {
    beta.min(delta(n - p)).min(delta(n - q))
}

/// The main hybrid bound: `H^{p,q}(X, S^α E ⊗ ∧^β E ⊗ L) = 0` once
/// `q + p − n > (r0 + α)(e + α − β) − α(α+1)`, under ampleness of
/// `S^{α+β} E ⊗ L`.
///
/// `α = 0` or `β = 0` (not both) degenerate to the pure exterior and pure
/// symmetric bounds; with `β = 0` there is no exterior factor, `r0` is
/// reported absent, and the formula self-reduces to `α(e−1)`.
pub fn vanish_main(
    n: u64,
    p: u64,
    q: u64,
    e: u64,
    alpha: u64,
    beta: u64,
) -> Result<VanishingVerdict> {
    check_degrees(n, p, q)?;
    ensure!(e >= 1, "the bundle rank e must be positive");
    ensure!(
        (alpha, beta) != (0, 0),
        "need alpha + beta >= 1: S^0 E ⊗ ∧^0 E is the trivial bundle"
    );
    let r0 = (beta >= 1).then(|| r0(n, p, q, beta));
    let (a, b, r) = (alpha as i128, beta as i128, r0.unwrap_or(0) as i128);
    let threshold = (r + a) * (e as i128 + a - b) - a * (a + 1);
    verdict(
        n,
        p,
        q,
        threshold,
        r0,
        format!("S^{} E ⊗ L is ample", alpha + beta),
    )
}

/// The hook form of the main bound, for the functor `Γ^{α,k}` (weight `k`,
/// arm `α`, `0 ≤ α ≤ k−1`): threshold `(r0 + α)(e − k + 2α) − α(α+1)` with
/// `β = k − α`. Formula-identical to [`vanish_main`] at `β = k − α`, since
/// `e − k + 2α = e + α − β`.
pub fn vanish_hook(n: u64, p: u64, q: u64, e: u64, alpha: u64, k: u64) -> Result<VanishingVerdict> {
    check_degrees(n, p, q)?;
    ensure!(e >= 1, "the bundle rank e must be positive");
    ensure!(
        k >= 1 && alpha < k,
        "hook parameters need 0 <= alpha <= k-1, got alpha={alpha}, k={k}"
    );
    let beta = k - alpha;
    let r0 = r0(n, p, q, beta);
    let (a, r) = (alpha as i128, r0 as i128);
    let threshold = (r + a) * (e as i128 - k as i128 + 2 * a) - a * (a + 1);
    verdict(
        n,
        p,
        q,
        threshold,
        Some(r0),
        format!("S^{k} E ⊗ L is ample"),
    )
}

/// The pure exterior-power bound: `H^{p,q}(X, ∧^β E ⊗ L) = 0` once
/// `q + p − n > r0(e − β)`, under ampleness of `S^β E ⊗ L`. Requires `β ≥ 1`.
pub fn vanish_wedge(n: u64, p: u64, q: u64, e: u64, beta: u64) -> Result<VanishingVerdict> {
    check_degrees(n, p, q)?;
    ensure!(e >= 1, "the bundle rank e must be positive");
    ensure!(beta >= 1, "the exterior power beta must be positive");
    let r0 = r0(n, p, q, beta);
    let threshold = r0 as i128 * (e as i128 - beta as i128);
    verdict(
        n,
        p,
        q,
        threshold,
        Some(r0),
        format!("S^{beta} E ⊗ L is ample"),
    )
}

/// The pure symmetric-power bound: `H^{p,q}(X, S^α E ⊗ L) = 0` once
/// `q + p − n > α(e − 1)`, under ampleness of `S^α E ⊗ L`. No refinement
/// constant appears. Requires `α ≥ 1`.
pub fn vanish_sym(n: u64, p: u64, q: u64, e: u64, alpha: u64) -> Result<VanishingVerdict> {
    check_degrees(n, p, q)?;
    ensure!(e >= 1, "the bundle rank e must be positive");
    ensure!(alpha >= 1, "the symmetric power alpha must be positive");
    let threshold = alpha as i128 * (e as i128 - 1);
    verdict(
        n,
        p,
        q,
        threshold,
        None,
        format!("S^{alpha} E ⊗ L is ample"),
    )
}

/// The multi-factor exterior bound: for bundles `E_1, …, E_m` of ranks
/// `e_i`, `H^{p,q}(X, ∧^{r_1}E_1 ⊗ ⋯ ⊗ ∧^{r_m}E_m ⊗ L) = 0` once
/// `p + q − n > Σ r_i(e_i − r_i)`. Each factor needs `1 ≤ r_i ≤ e_i`.
pub fn vanish_nagoya(n: u64, p: u64, q: u64, factors: &[(u64, u64)]) -> Result<VanishingVerdict> {
    check_degrees(n, p, q)?;
    let mut threshold = 0i128;
    for &(r_i, e_i) in factors {
        ensure!(
            r_i >= 1 && r_i <= e_i,
            "each factor needs 1 <= r_i <= e_i, got r_i={r_i}, e_i={e_i}"
        );
        threshold += r_i as i128 * (e_i as i128 - r_i as i128);
    }
    let product: String = factors
        .iter()
        .enumerate()
        .map(|(i, (r_i, _))| format!("∧^{} E_{} ⊗ ", r_i, i + 1))
        .collect();
    verdict(n, p, q, threshold, None, format!("{product}L is ample"))
}

/// The unrefined hybrid bound: `H^{p,q}(X, S^α E ⊗ ∧^β E ⊗ L) = 0` once
/// `q + p − n > α(e−1) + β(e−β)`. This is [`vanish_main`] with `r0` replaced
/// by `β`, so the main bound always improves on or ties it.
pub fn vanish_sym_wedge_corollary(
    n: u64,
    p: u64,
    q: u64,
    e: u64,
    alpha: u64,
    beta: u64,
) -> Result<VanishingVerdict> {
    check_degrees(n, p, q)?;
    ensure!(e >= 1, "the bundle rank e must be positive");
    ensure!(
        (alpha, beta) != (0, 0),
        "need alpha + beta >= 1: S^0 E ⊗ ∧^0 E is the trivial bundle"
    );
    let (a, b, e) = (alpha as i128, beta as i128, e as i128);
    let threshold = a * (e - 1) + b * (e - b);
    verdict(
        n,
        p,
        q,
        threshold,
        None,
        format!("S^{} E ⊗ L is ample", alpha + beta),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_examples() {
        let v = vanish_main(4, 4, 2, 2, 1, 1).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (false, 2, 0, Some(1))
        );
        assert_eq!(v.hypothesis, "S^2 E ⊗ L is ample");

        let v = vanish_main(3, 3, 3, 2, 1, 1).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (true, 2, 1, Some(1))
        );

        let v = vanish_main(2, 2, 2, 3, 0, 2).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (true, 1, 1, Some(1))
        );
    }

    #[test]
    fn main_pure_symmetric_edge() {
        // β = 0 self-reduces to the pure symmetric bound α(e−1), r0 absent.
        let v = vanish_main(4, 4, 4, 2, 3, 0).unwrap();
        assert_eq!((v.threshold, v.r0), (3, None));
        let s = vanish_sym(4, 4, 4, 2, 3).unwrap();
        assert_eq!(v, s);
        assert!(vanish_main(4, 4, 4, 2, 0, 0).is_err());
    }

    #[test]
    fn main_domain_errors() {
        assert!(vanish_main(0, 0, 0, 2, 1, 1).is_err());
        assert!(vanish_main(4, 5, 2, 2, 1, 1).is_err());
        assert!(vanish_main(4, 2, 5, 2, 1, 1).is_err());
        assert!(vanish_main(4, 4, 2, 0, 1, 1).is_err());
    }

    #[test]
    fn hook_examples() {
        let v = vanish_hook(4, 4, 2, 2, 1, 2).unwrap();
        assert_eq!((v.vanishes, v.threshold), (false, 2));
        assert_eq!(v, vanish_main(4, 4, 2, 2, 1, 1).unwrap());

        let v = vanish_hook(3, 3, 3, 4, 0, 2).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (true, 2, 1, Some(1))
        );

        // Formula-faithful values at (n=5, p=5, q=5, e=3, α=2, k=3):
        // e − k + 2α = 4, r0 = 1, so the threshold is 3·4 − 6 = 6.
        let v = vanish_hook(5, 5, 5, 3, 2, 3).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (false, 6, -1, Some(1))
        );

        assert!(vanish_hook(4, 4, 2, 2, 2, 2).is_err());
        assert!(vanish_hook(4, 4, 2, 2, 0, 0).is_err());
    }

    #[test]
    fn wedge_examples() {
        let v = vanish_wedge(2, 2, 2, 3, 2).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (true, 1, 1, Some(1))
        );

        let v = vanish_wedge(6, 0, 6, 4, 1).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (false, 3, -3, Some(1))
        );

        assert!(vanish_wedge(2, 2, 2, 3, 0).is_err());
    }

    #[test]
    fn wedge_matches_main_at_alpha_zero() {
        for n in 1..=6u64 {
            for p in 0..=n {
                for q in 0..=n {
                    for e in 1..=4u64 {
                        for beta in 1..=4u64 {
                            assert_eq!(
                                vanish_wedge(n, p, q, e, beta).unwrap(),
                                vanish_main(n, p, q, e, 0, beta).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sym_examples() {
        let v = vanish_sym(1, 1, 1, 1, 1).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (true, 0, 1, None)
        );

        let v = vanish_sym(4, 4, 4, 2, 3).unwrap();
        assert_eq!((v.vanishes, v.threshold, v.excess), (true, 3, 1));

        let v = vanish_sym(4, 2, 2, 2, 3).unwrap();
        assert_eq!((v.vanishes, v.excess), (false, -3));

        assert!(vanish_sym(4, 4, 4, 2, 0).is_err());
    }

    #[test]
    fn nagoya_examples() {
        let v = vanish_nagoya(2, 2, 1, &[(1, 2)]).unwrap();
        assert_eq!((v.vanishes, v.threshold, v.excess), (false, 1, 0));

        let v = vanish_nagoya(3, 3, 3, &[(1, 1), (1, 1)]).unwrap();
        assert_eq!((v.vanishes, v.threshold), (true, 0));
        assert_eq!(v.hypothesis, "∧^1 E_1 ⊗ ∧^1 E_2 ⊗ L is ample");

        let v = vanish_nagoya(4, 4, 4, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!((v.vanishes, v.threshold, v.excess), (true, 3, 1));

        assert!(vanish_nagoya(4, 4, 4, &[(2, 1)]).is_err());
        assert!(vanish_nagoya(4, 4, 4, &[(0, 1)]).is_err());
    }

    #[test]
    fn corollary_examples() {
        let v = vanish_sym_wedge_corollary(4, 4, 2, 2, 1, 1).unwrap();
        assert_eq!(
            (v.vanishes, v.threshold, v.excess, v.r0),
            (false, 2, 0, None)
        );

        let v = vanish_sym_wedge_corollary(2, 2, 2, 3, 0, 2).unwrap();
        assert_eq!((v.vanishes, v.threshold, v.excess), (false, 2, 0));
        // The refined main bound is strictly better here (r0 = 1 < β = 2).
        assert!(vanish_main(2, 2, 2, 3, 0, 2).unwrap().vanishes);

        let v = vanish_sym_wedge_corollary(1, 1, 1, 1, 1, 0).unwrap();
        assert_eq!((v.vanishes, v.threshold), (true, 0));

        assert!(vanish_sym_wedge_corollary(1, 1, 1, 1, 0, 0).is_err());
    }

    #[test]
    fn hook_threshold_monotone_in_alpha() {
        // With e ≥ k − α, stepping α up by one never lowers the threshold.
        for n in 1..=8u64 {
            for p in 0..=n {
                for q in 0..=n {
                    for e in 1..=6u64 {
                        for k in 1..=5u64 {
                            for alpha in 0..k.saturating_sub(1) {
                                if e + alpha < k {
                                    continue;
                                }
                                let lo = vanish_hook(n, p, q, e, alpha, k).unwrap();
                                let hi = vanish_hook(n, p, q, e, alpha + 1, k).unwrap();
                                assert!(
                                    lo.threshold <= hi.threshold,
                                    "threshold dropped at n={n} p={p} q={q} e={e} k={k} alpha={alpha}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
