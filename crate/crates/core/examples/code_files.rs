// Reading a code file and printing the full analysis.

use mtcodes::cli::codefile::{parse_code_file, serialize_code};
use mtcodes::cli::commands::{analyze, Limits};
use mtcodes::Result;

const TEXT: &str = "\
# two blocks over F_4
q = 4
modulus = [1, 1, 1]
lambda = [1, 2]
m = [3, 5]
gen = [[1, 1], [0, 2, 1]]
";

pub fn run_example() -> Result<()> {
    let code = parse_code_file(TEXT)?;
    print!("{}", serialize_code(&code));
    let out = analyze(&code, &Limits::default())?;
    print!("{}", out.report.render(false));
    println!("exit status {}", out.status.code());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("code file example");
}
