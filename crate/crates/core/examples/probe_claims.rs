// Dimension conditions do not decide LCD: enumerate a shape and bucket it.

use mtcodes::cli::commands::Limits;
use mtcodes::cli::probe::{probe, revalidate, ProbeConfig};
use mtcodes::Result;

pub fn run_example() -> Result<()> {
    let config = ProbeConfig { q: 2, modulus: None, lambda: vec![1, 1], m: vec![2, 2], rho: 1, budget: 1 << 10, seed: 0 };
    let limits = Limits::default();
    let res = probe(&config, &limits)?;
    println!("exhaustive={} examined={}", res.exhaustive, res.examined);
    for (key, b) in &res.buckets {
        println!("{key}: {} codes, {} decomposable", b.count, b.decomposable);
    }
    println!("witnesses re-validate: {}", revalidate(&res, &limits)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("probe example");
}
