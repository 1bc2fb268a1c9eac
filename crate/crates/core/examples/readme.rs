//! The snippet from the top-level README, kept compiling.

use dolbeault_core::bott::{bott_cohomology, BottInput, BottResult};
use dolbeault_core::schur::WeightVector;
use dolbeault_core::vanishing::vanish_main;

fn main() -> Result<(), dolbeault_core::Error> {
    // Threshold arithmetic: H^{4,2} of S^1 E ⊗ ∧^1 E ⊗ L on a 4-fold,
    // rank-2 E. Excess 0: right on the boundary, no vanishing claimed.
    let verdict = vanish_main(4, 4, 2, 2, 1, 1)?;
    assert!(!verdict.vanishes && verdict.excess == 0);

    // Bott: S_(2,0) Q ⊗ S_(3,3) S on Gr(2, 4) has one cohomology group.
    let input = BottInput::new(
        WeightVector::new(vec![2, 0])?,
        WeightVector::new(vec![3, 3])?,
    )?;
    match bott_cohomology(&input) {
        BottResult::NonZero { degree, dim, .. } => println!("H^{degree}, dim {dim}"),
        BottResult::Zero => println!("no cohomology"),
    }
    Ok(())
}
