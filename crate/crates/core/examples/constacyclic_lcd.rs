// LCD tests for single constacyclic codes, by rule and by hull.

use mtcodes::lcd::{constacyclic_dual_generator, constacyclic_is_lcd};
use mtcodes::mtcode::DEFAULT_MAX_ENUM;
use mtcodes::{ConstituentCode, Field, Poly, Result};

fn show(f: &Field, lambda: u32, m: usize, g: &[u32]) -> Result<()> {
    let lambda = f.element(lambda)?;
    let g = Poly::from_codes(f, g)?;
    let c = ConstituentCode::new(f, 0, lambda, m, g.clone())?;
    let code = c.expand();
    let rule = constacyclic_is_lcd(&g, m, lambda)?;
    println!(
        "q={} m={m} lambda={lambda} g={g}: [{}, {}, {}] lcd rule={rule} hull={} dual generator {}",
        f.order(),
        m,
        code.dimension(),
        code.min_distance(DEFAULT_MAX_ENUM)?,
        code.is_lcd(),
        constacyclic_dual_generator(&g, m, lambda)?,
    );
    assert_eq!(rule, code.is_lcd());
    Ok(())
}

pub fn run_example() -> Result<()> {
    let f2 = Field::prime(2)?;
    show(&f2, 1, 7, &[1, 1, 0, 1])?; // Hamming: not LCD
    show(&f2, 1, 7, &[1, 1, 1, 1, 1, 1, 1])?; // repetition: LCD
    show(&f2, 1, 4, &[1, 1])?; // repeated roots
    // lambda^2 != 1 makes every code LCD.
    let f5 = Field::prime(5)?;
    show(&f5, 2, 3, &[2, 1])?; // 3^3 = 2
    show(&f5, 3, 3, &[3, 1])?; // 2^3 = 3
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("constacyclic LCD example");
}
