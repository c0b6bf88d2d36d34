// Field and polynomial arithmetic over F_4 and F_9.

use mtcodes::{Field, Poly, Result};

pub fn run_example() -> Result<()> {
    // F_4 = F_2[a]/(a^2 + a + 1); code 2 is a, code 3 is a + 1.
    let f4 = Field::of_order(4)?;
    let a = f4.element(2)?;
    let b = f4.element(3)?;
    println!("F_4 modulus {:?}: a * (a+1) = {}", f4.modulus().unwrap(), f4.mul(a, b));
    assert_eq!(f4.mul(a, b), f4.one());
    println!("a^-1 = {}", f4.inv(a)?);

    let f9 = Field::of_order(9)?;
    let i = f9.element(3)?; // the class of x, with x^2 = -1
    assert_eq!(f9.mul(i, i), f9.neg(f9.one()));

    // x^7 - 1 over F_2 and its factors.
    let f2 = Field::prime(2)?;
    let m = Poly::twist_modulus(&f2, 7, f2.one());
    let g = Poly::from_codes(&f2, &[1, 1, 0, 1])?;
    let (h, r) = m.divmod(&g)?;
    assert!(r.is_zero());
    println!("x^7 - 1 = ({g}) * ({h})");
    println!("reciprocal of {g} is {}", g.reciprocal()?);
    println!("gcd({g}, {}) = {}", g.reciprocal()?, g.gcd(&g.reciprocal()?)?);
    println!("{h} self-reciprocal: {}", h.is_self_reciprocal()?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("field arithmetic example");
}
