// Splitting a two-block code into its constituents.

use mtcodes::decomp::{block_diag_generator, decompose, is_decomposable};
use mtcodes::mtcode::DEFAULT_MAX_ENUM;
use mtcodes::{Field, MTCode, MTShape, Result};

pub fn run_example() -> Result<()> {
    let f2 = Field::prime(2)?;
    // Cofactors x^3 + x^2 + 1 and x + 1 are coprime.
    let shape = MTShape::from_codes(&f2, &[1, 1], &[7, 2])?;
    let code = MTCode::from_codes(shape.clone(), &[vec![vec![1, 0, 1, 1, 1], vec![1, 1]]])?;
    let d = is_decomposable(&code)?;
    println!("cofactors: {}", d.cofactors.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(", "));
    let report = decompose(&code, DEFAULT_MAX_ENUM)?;
    println!(
        "decomposable={} direct sum={:?} dual direct sum={:?} d={:?} rule={:?}",
        report.decomposable,
        report.direct_sum_verified,
        report.dual_direct_sum_verified,
        report.code_distance,
        report.distance_rule_holds
    );
    println!("block-diagonal generator has {} rows", block_diag_generator(&code)?.rows());

    // Both cofactors divisible by x + 1: the sum is not direct in general.
    let shared = MTCode::from_codes(shape, &[vec![vec![1, 1, 1, 1, 1, 1, 1], vec![1]]])?;
    let report = decompose(&shared, DEFAULT_MAX_ENUM)?;
    for w in &report.witnesses {
        println!("blocks {} and {} share {}", w.i + 1, w.j + 1, w.gcd);
    }
    println!("containment in the sum still holds: {}", report.contained_in_sum);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("decompose example");
}
