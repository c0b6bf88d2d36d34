// Minimum distance of a decomposable code against its constituents,
// and the masking thresholds of an LCD one.

use mtcodes::decomp::{distance_min_rule, security_report};
use mtcodes::{Distance, Field, MTCode, MTShape, Result};

fn join(ds: &[Distance]) -> String {
    ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn run_example() -> Result<()> {
    let f2 = Field::prime(2)?;
    let shape = MTShape::from_codes(&f2, &[1, 1], &[7, 3])?;
    // Repetition code of length 7 next to the [3, 2] even-weight code.
    let code = MTCode::from_codes(shape, &[vec![vec![1, 1, 1, 1, 1, 1, 1], vec![]], vec![vec![], vec![1, 1]]])?;
    let rule = distance_min_rule(&code, 1 << 16)?;
    println!(
        "d(C) = {}, constituents [{}], rule holds: {}",
        rule.code_distance,
        join(&rule.constituent_distances),
        rule.rule_holds
    );
    match security_report(&code, 1 << 16) {
        Ok(t) => println!("S = {}, S_i = [{}], min rule: {}", t.code, join(&t.constituents), t.min_rule_holds),
        Err(e) => println!("thresholds: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("distance example");
}
