//! Inverting the operator on diagonal-form arrangements.
//!
//! Over the complex numbers every C(u, v, w) has two antecedents, built by
//! adjoining a square root of +-uv/w when needed; over the reals exactly one
//! of the two radicands is positive, so the real antecedent is unique.
//!
//! Run with: cargo run --release -p arrangeops --example preimages

use arrangeops::dynamics::{preimages, real_preimage};
use arrangeops::field::Field;
use arrangeops::unassuming::c_abc;

fn main() -> arrangeops::Result<()> {
    let field = Field::rational();
    let a = c_abc(&field.from_int(1), &field.from_int(4), &field.from_int(1))?;
    println!("target: C(1, 4, 1)");

    let ants = preimages(&a)?;
    for (i, ant) in ants.iter().enumerate() {
        let image = ant.lambda_op(2, 3)?;
        let closes = image.set_equal(&a.embed_into(ant.field())?);
        println!(
            "antecedent {}: over {:?}, maps forward to the target: {}",
            i + 1,
            ant.field(),
            closes
        );
    }

    // The real antecedent is C(2, 2, 2) since the radicand 4 is positive.
    let real = real_preimage(&a)?;
    let expect = c_abc(&field.from_int(2), &field.from_int(2), &field.from_int(2))?;
    println!("real antecedent is C(2, 2, 2): {}", real.set_equal(&expect));

    // With an irrational radicand the antecedent lives in a square-root
    // extension, still with fully exact arithmetic.
    let b = c_abc(&field.from_int(1), &field.from_int(2), &field.from_int(1))?;
    let rb = real_preimage(&b)?;
    println!(
        "real antecedent of C(1, 2, 1): over {:?}, forward check {}",
        rb.field(),
        rb.lambda_op(2, 3)?.set_equal(&b.embed_into(rb.field())?)
    );
    Ok(())
}
