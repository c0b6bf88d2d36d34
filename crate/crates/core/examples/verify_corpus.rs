// The invariant suite on a small seeded corpus.

use mtcodes::cli::commands::Limits;
use mtcodes::cli::verify::{run, VerifyConfig};
use mtcodes::corpus::CorpusConfig;
use mtcodes::Result;

pub fn run_example() -> Result<()> {
    let config = VerifyConfig {
        corpus: CorpusConfig { size: 60, decomposable: 20, seed: 7, ..Default::default() },
        workers: 2,
        ..Default::default()
    };
    let summary = run(&config, &Limits::default())?;
    println!("{} instances, {} decomposable", summary.instances, summary.decomposable);
    for p in &summary.properties {
        println!("{:<22} pass {:>3}  skip {:>3}  fail {}", p.name, p.pass, p.skip, p.fail);
    }
    assert!(summary.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify example");
}
