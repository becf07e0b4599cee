//! The exact arithmetic layer on its own: rationals, quadratic and
//! cyclotomic fields, square-root towers, Galois action, and certified
//! numeric enclosures.
//!
//! Run with: cargo run --release -p arrangeops --example exact_fields

use arrangeops::field::{adjoin_sqrt, Field, Q};
use num_bigint::BigInt;

fn main() -> arrangeops::Result<()> {
    // Cyclotomic arithmetic is reduction modulo the cyclotomic polynomial.
    let f3 = Field::cyclotomic(3)?;
    let j = f3.generator();
    println!("j^2 = {}", j.checked_mul(&j)?);

    // Quadratic units: (2 + sqrt5)(-2 + sqrt5) = 1.
    let f5 = Field::quadratic(5)?;
    let q = |n: i64| Q::new(BigInt::from(n), BigInt::from(1));
    let u = f5.from_coeffs(vec![q(2), q(1)])?;
    let v = f5.from_coeffs(vec![q(-2), q(1)])?;
    println!("(2+sqrt5)(-2+sqrt5) = {}", u.checked_mul(&v)?);
    println!(
        "sign of -2+sqrt5 at the real embedding: {}",
        v.sign_at_real_embedding()?
    );

    // Galois conjugates and the rational norm.
    let f7 = Field::cyclotomic(7)?;
    let z = f7.generator();
    let conj = z.galois_conjugates()?;
    println!("zeta7 has {} conjugates", conj.len());
    let mut norm = f7.one();
    for c in &conj {
        norm = norm.checked_mul(c)?;
    }
    println!("their product is rational: {}", norm);

    // Unit-circle membership is an exact test.
    println!("zeta7 on the unit circle: {}", z.is_on_unit_circle()?);
    println!(
        "2 on the unit circle: {}",
        f5.from_int(2).is_on_unit_circle()?
    );

    // Square roots: certified in the field when possible, a tower otherwise.
    let four = Field::rational().from_int(4);
    println!("sqrt 4 stays rational: root {}", adjoin_sqrt(&four)?.root);
    let half = Field::rational().from_rational(Q::new(BigInt::from(1), BigInt::from(2)));
    let ext = adjoin_sqrt(&half)?;
    println!(
        "sqrt(1/2) extends the field; rho^2 = {}",
        ext.root.checked_mul(&ext.root)?
    );

    // Certified interval enclosures back the figure export.
    let (re, im) = Field::cyclotomic(12)?.generator().approx_complex(80)?;
    println!("zeta12 is approximately ({re:.15}, {im:.15})");
    Ok(())
}
