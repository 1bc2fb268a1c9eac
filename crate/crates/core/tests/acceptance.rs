//! Acceptance suite: the seven contract-level criteria for this library,
//! one test per criterion. Each test prints a single `[PASS]` line (visible
//! with `--nocapture`); the harness's per-test ok/FAILED line is the
//! machine-readable verdict.
//!
//! Every check is exact — no tolerances anywhere.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dolbeault_core::bott::{
    bott_cohomology, optimality_input, serre_dual_input, BottInput, BottResult,
};
use dolbeault_core::harness::{sweep_validate, SweepBox};
use dolbeault_core::partitions::{choose2, delta, partitions_in_box, IntPartition};
use dolbeault_core::schur::{lr_decompose, weyl_dim, WeightVector};
use dolbeault_core::spectral::{identity_residuals, minimal_l, threshold_equivalence};
use dolbeault_core::vanishing::{vanish_hook, vanish_main, vanish_sym_wedge_corollary};

/// Criterion 1 — δ conformance: the tabulated first values, the defining
/// staircase inequality for x ≤ 10000, and the three step lemmas
/// (δ(x+δ(x)) = δ(x)+1 for x ≤ 10000; δ(x±μδ(x)) ≤ δ(x)±μ for x ≤ 2000,
/// μ ≤ 20).
#[test]
fn criterion_1_delta_conformance() {
    let expected = [1u64, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5];
    for (x, want) in expected.iter().enumerate() {
        assert_eq!(delta(x as u64), *want, "delta({x})");
    }

    for x in 0..=10_000u64 {
        let m = delta(x);
        assert!(
            choose2(m) <= x && x < choose2(m + 1),
            "staircase bound at x={x}"
        );
        assert_eq!(delta(x + m), m + 1, "step lemma (1) at x={x}");
    }

    for x in 0..=2_000u64 {
        let m = delta(x);
        for mu in 1..=20u64 {
            assert!(
                delta(x + mu * m) <= m + mu,
                "step lemma (2) at x={x}, mu={mu}"
            );
            if x >= mu * m {
                assert!(
                    delta(x - mu * m) + mu <= m,
                    "step lemma (3) at x={x}, mu={mu}"
                );
            }
        }
    }
    println!("[PASS] criterion 1: delta conformance (values, staircase bound, step lemmas)");
}

/// Criterion 2 — optimality reproduction: for 1 ≤ r, f ≤ 5 the boundary
/// family has its single nonzero group exactly in degree f(r−1) with
/// dimension 1, and the main vanishing bound sits at excess exactly 0
/// there.
#[test]
fn criterion_2_optimality_reproduction() {
    for r in 1..=5u64 {
        for f in 1..=5u64 {
            let result = bott_cohomology(&optimality_input(r, f).unwrap());
            let BottResult::NonZero { degree, dim, .. } = result else {
                panic!("optimality family must be nonzero at r={r}, f={f}");
            };
            assert_eq!(degree, f * (r - 1), "degree at r={r}, f={f}");
            assert_eq!(dim, BigUint::one(), "dimension at r={r}, f={f}");

            let n = f * r;
            let verdict = vanish_main(n, n, n - f, r, f - 1, 1).unwrap();
            assert_eq!(verdict.excess, 0, "excess at r={r}, f={f}");
        }
    }
    println!("[PASS] criterion 2: optimality boundary reproduced for all r, f <= 5");
}

/// Criterion 3 — cross-validation sweep: over split bundles on projective
/// space with m ≤ 3, e ≤ 3, summand degrees in [0,2], c in [0,2], α+β ≤ 3
/// and all p, q, no predicate ever asserts vanishing of a group the Bott
/// oracle finds nonzero.
#[test]
fn criterion_3_cross_validation_sweep() {
    let report = sweep_validate(&SweepBox::default());
    assert!(report.cases_checked > 0);
    assert!(
        report.violations.is_empty(),
        "vanishing asserted against nonzero cohomology: {:?}",
        report.violations
    );
    println!(
        "[PASS] criterion 3: sweep clean ({} cases, {} boundary witnesses, 0 violations)",
        report.cases_checked,
        report.boundary_witnesses.len()
    );
}

/// Criterion 4 — LR dimension identity: for d ≤ 5 and |u|, |v| ≤ 4,
/// dim S_u(C^d) · dim S_v(C^d) equals the multiplicity-weighted dimension
/// sum of the Littlewood–Richardson decomposition (shapes taller than d
/// contribute 0).
#[test]
fn criterion_4_lr_dimension_identity() {
    let dim_or_zero = |shape: &IntPartition, d: usize| -> BigUint {
        if shape.len() > d {
            BigUint::zero()
        } else {
            let entries: Vec<i64> = shape.parts().iter().map(|&p| p as i64).collect();
            let weight = WeightVector::new(entries).unwrap();
            weyl_dim(&weight, d).unwrap()
        }
    };

    let mut shapes = vec![IntPartition::empty()];
    for weight in 1..=4u64 {
        shapes.extend(partitions_in_box(weight, weight as usize, weight));
    }
    assert_eq!(shapes.len(), 12);

    for d in 1..=5usize {
        for u in &shapes {
            for v in &shapes {
                let product = dim_or_zero(u, d) * dim_or_zero(v, d);
                let total: BigUint = lr_decompose(u, v)
                    .terms()
                    .map(|(shape, mult)| dim_or_zero(shape, d) * BigUint::from(mult))
                    .sum();
                assert_eq!(product, total, "u={u}, v={v}, d={d}");
            }
        }
    }
    println!("[PASS] criterion 4: LR decomposition preserves dimensions for d <= 5, |u|,|v| <= 4");
}

/// Criterion 5 — proof-identity suite: both telescoping residuals vanish
/// identically over x ≤ 50, α ≤ 6, |e−k| ≤ 10 and every feasible μ, the
/// closed-form right sides have the claimed signs (non-negative, strictly
/// positive once μ ≥ 2, given the relevant factor is non-negative), and the
/// two Nakano-threshold formulations agree over the full grid.
#[test]
fn criterion_5_proof_identity_suite() {
    for x in 0..=50u64 {
        let d = delta(x);
        for alpha in 0..=6u64 {
            let mu_cap = (x / d).max(alpha) + 1;
            for mu in 1..=mu_cap {
                for diff in -10..=10i64 {
                    let res = identity_residuals(x, alpha, mu, diff, 0).unwrap();
                    assert_eq!(res.res6.is_none(), x < mu * d);
                    assert_eq!(res.res7.is_none(), alpha < mu);

                    if res.res6.is_some() {
                        assert_eq!(
                            res.res6,
                            Some(0),
                            "res6 at x={x} a={alpha} mu={mu} ek={diff}"
                        );
                        let drop = d as i64 - mu as i64 - delta(x - mu * d) as i64;
                        assert!(drop >= 0, "delta must drop by at least mu going down");
                        let factor = diff + 2 * (alpha + mu) as i64;
                        let rhs = factor * drop + (mu * mu) as i64 + 1;
                        if factor >= 0 {
                            assert!(rhs >= 0);
                            if mu >= 2 {
                                assert!(rhs > 0);
                            }
                        }
                    }
                    if res.res7.is_some() {
                        assert_eq!(
                            res.res7,
                            Some(0),
                            "res7 at x={x} a={alpha} mu={mu} ek={diff}"
                        );
                        let lag = d as i64 + mu as i64 - delta(x + mu * d) as i64;
                        assert!(lag >= 0, "delta must grow by at most mu going up");
                        let factor = diff + 2 * (alpha - mu) as i64;
                        let rhs = factor * lag + (mu * mu) as i64 - 1;
                        if factor >= 0 {
                            assert!(rhs >= 0);
                            if mu >= 2 {
                                assert!(rhs > 0);
                            }
                        }
                    }
                }
            }
        }
    }

    for n in 1..=8u64 {
        for p in 0..=n {
            let r = delta(n - p);
            for alpha in 0..=3u64 {
                let l0 = minimal_l(r, alpha, n, p).unwrap();
                for l in l0..=l0 + 3 {
                    for e in 1..=10u64 {
                        for q in 0..=30u64 {
                            assert!(
                                threshold_equivalence(n, p, q, alpha, e, l * r, l, r).unwrap(),
                                "thresholds disagree at n={n} p={p} q={q} a={alpha} e={e} l={l}"
                            );
                        }
                    }
                }
            }
        }
    }
    println!("[PASS] criterion 5: telescoping identities and threshold equivalence hold exactly");
}

/// Criterion 6 — Serre-duality invariance of the Bott engine over 1000
/// seeded pseudo-random bundles with r ≤ 3, d ≤ 6, weight entries in
/// [−5, 5]: dual degrees sum to r(d−r), dimensions agree, zero status
/// agrees.
#[test]
fn criterion_6_serre_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD01B);
    let mut nonzero_pairs = 0u32;
    for _ in 0..1000 {
        let r = rng.gen_range(1..=3usize);
        let d = rng.gen_range(r + 1..=6usize);
        let mut a: Vec<i64> = (0..r).map(|_| rng.gen_range(-5..=5)).collect();
        let mut b: Vec<i64> = (0..d - r).map(|_| rng.gen_range(-5..=5)).collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        let input =
            BottInput::new(WeightVector::new(a).unwrap(), WeightVector::new(b).unwrap()).unwrap();
        let dual = serre_dual_input(&input);

        let lhs = bott_cohomology(&input);
        let rhs = bott_cohomology(&dual);
        match (lhs, rhs) {
            (BottResult::Zero, BottResult::Zero) => {}
            (
                BottResult::NonZero {
                    degree: q1,
                    dim: d1,
                    ..
                },
                BottResult::NonZero {
                    degree: q2,
                    dim: d2,
                    ..
                },
            ) => {
                assert_eq!(q1 + q2, (r * (d - r)) as u64, "degrees must pair to dim Gr");
                assert_eq!(d1, d2, "dual dimensions must agree");
                nonzero_pairs += 1;
            }
            (lhs, rhs) => panic!("zero status disagrees: {lhs:?} vs {rhs:?}"),
        }
    }
    assert!(nonzero_pairs > 100, "the sample should not be degenerate");
    println!("[PASS] criterion 6: Serre duality holds on 1000 seeded inputs ({nonzero_pairs} nonzero pairs)");
}

/// Criterion 7 — algebraic reductions over n ≤ 12, e ≤ 8, α, β ≤ 5: the
/// hook predicate coincides with the main one under β = k−α, the main
/// threshold equals the unrefined corollary threshold whenever r0 = β, and
/// every main verdict is symmetric in p ↔ q.
#[test]
fn criterion_7_algebraic_reductions() {
    for n in 1..=12u64 {
        for p in 0..=n {
            for q in 0..=n {
                for e in 1..=8u64 {
                    for alpha in 0..=5u64 {
                        for beta in 0..=5u64 {
                            if alpha + beta == 0 {
                                continue;
                            }
                            let main = vanish_main(n, p, q, e, alpha, beta).unwrap();

                            if beta >= 1 {
                                let hook = vanish_hook(n, p, q, e, alpha, alpha + beta).unwrap();
                                assert_eq!(hook, main, "hook/main split at n={n} p={p} q={q}");
                            }

                            let corollary =
                                vanish_sym_wedge_corollary(n, p, q, e, alpha, beta).unwrap();
                            if main.r0 == Some(beta) {
                                assert_eq!(
                                    main.threshold, corollary.threshold,
                                    "r0=β must collapse the refined bound"
                                );
                            }
                            // main − corollary = (r0−β)(e+α−β) with r0 ≤ β,
                            // so refinement helps exactly when e+α ≥ β (for
                            // larger β the exterior power is already zero).
                            if e + alpha >= beta {
                                assert!(
                                    main.threshold <= corollary.threshold,
                                    "the refined bound can only improve"
                                );
                            }

                            let swapped = vanish_main(n, q, p, e, alpha, beta).unwrap();
                            assert_eq!(main, swapped, "p↔q symmetry");
                        }
                    }
                }
            }
        }
    }
    println!("[PASS] criterion 7: hook/main agreement, r0=β collapse, p↔q symmetry");
}
