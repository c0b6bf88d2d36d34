// LCD criteria for multi-twisted codes over F_5.

use mtcodes::lcd::{mt_is_lcd_by_twists, mt_is_lcd_by_blocks};
use mtcodes::{Field, MTCode, MTShape, Result};

pub fn run_example() -> Result<()> {
    let f5 = Field::prime(5)?;
    // 2 and 3 are not square roots of 1 mod 5.
    let twisted = MTShape::from_codes(&f5, &[2, 3], &[3, 3])?;
    let code = MTCode::from_codes(twisted, &[vec![vec![2, 1], vec![3, 1]]])?;
    let v = mt_is_lcd_by_blocks(&code)?;
    println!("twists (2, 3): block rule {}, hull {}, twist rule {}", v.by_criterion, v.by_hull, mt_is_lcd_by_twists(&code)?);

    let cyclic = MTShape::from_codes(&f5, &[1, 4], &[4, 2])?;
    let code = MTCode::from_codes(cyclic, &[vec![vec![1, 0, 1], vec![1, 1]]])?;
    let v = mt_is_lcd_by_blocks(&code)?;
    println!("twists (1, 4): block rule {}, hull {}, twist rule {}", v.by_criterion, v.by_hull, mt_is_lcd_by_twists(&code)?);
    for (i, b) in v.per_block.iter().enumerate() {
        println!(
            "  block {}: lambda^2 = 1 {}, self-reciprocal {}, gcd(g, h) = {}",
            i + 1,
            b.lambda_squared_is_one,
            b.self_reciprocal,
            b.gcd_with_cofactor
        );
    }
    assert!(v.agrees());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("LCD criteria example");
}
