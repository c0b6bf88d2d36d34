// Three dimension computations for the same code.

use mtcodes::dimension::{dim_hnf, dim_minors, dim_rank, stacked_matrix, DEFAULT_MAX_MINORS};
use mtcodes::{Field, MTCode, MTShape, Result};

pub fn run_example() -> Result<()> {
    let f3 = Field::prime(3)?;
    // m = 3 over F_3: x^3 - 1 = (x - 1)^3 has repeated roots.
    let shape = MTShape::from_codes(&f3, &[1, 2], &[3, 4])?;
    let code = MTCode::from_codes(
        shape,
        &[vec![vec![2, 1], vec![1, 0, 1]], vec![vec![1, 1, 1], vec![0, 1]]],
    )?;
    let s = stacked_matrix(&code);
    println!("stacked matrix is {} x {}", s.rows(), s.cols());
    let minors = dim_minors(&code, DEFAULT_MAX_MINORS)?;
    let hnf = dim_hnf(&code)?;
    println!("rank:   k = {}", dim_rank(&code));
    println!("minors: k = {} (gcd {} over {} minors)", minors.dimension, minors.gcd, minors.minor_count);
    let diag: Vec<String> = hnf.diagonal.iter().map(|d| d.to_string()).collect();
    println!("hnf:    k = {} (diagonal {})", hnf.dimension, diag.join(", "));
    assert_eq!(dim_rank(&code), minors.dimension);
    assert_eq!(minors.dimension, hnf.dimension);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dimension example");
}
