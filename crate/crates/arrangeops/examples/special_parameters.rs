//! The degenerate quadratic parameters and the limit objects.
//!
//! At t = 2 + sqrt 5 the six lines are still nodal but the dual profile
//! degenerates to the icosahedral simplicial arrangement; the operator image
//! jumps to ten lines, and exactly five unassuming six-line subsets hide
//! inside it, all with the same moduli value. At t = 0 the double points
//! collapse to a nine-point limit configuration.
//!
//! Run with: cargo run --release -p arrangeops --example special_parameters

use arrangeops::catalog::limit_objects;
use arrangeops::dynamics::{classify_parameter, ParameterClass};
use arrangeops::field::{Field, Q};
use arrangeops::unassuming::{c0_of, dual_15, family_invariant, is_unassuming, moduli_invariant};
use num_bigint::BigInt;

fn main() -> arrangeops::Result<()> {
    let f5 = Field::quadratic(5)?;
    let one = |n: i64| Q::new(BigInt::from(n), BigInt::from(1));
    let t = f5.from_coeffs(vec![one(2), one(1)])?; // 2 + sqrt 5
    println!("parameter class of 2+sqrt5: {:?}", classify_parameter(&t)?);
    assert_eq!(classify_parameter(&t)?, ParameterClass::Degenerate);

    let a = c0_of(&t)?;
    println!("C0(2+sqrt5): profile {}", a.profile());
    println!("unassuming: {}", is_unassuming(&a));
    println!("dual profile: {}", dual_15(&a)?.profile());

    let image = a.lambda_op(2, 3)?;
    println!(
        "operator image: {} lines, profile {}",
        image.len(),
        image.profile()
    );
    let union = a.union(&image)?;
    println!(
        "seed union image: {} lines, profile {}",
        union.len(),
        union.profile()
    );

    let subsets = image.subsets_with_property(6, is_unassuming);
    println!(
        "unassuming six-line subsets of the image: {}",
        subsets.len()
    );
    for s in &subsets {
        let m = moduli_invariant(s)?;
        println!("  moduli value {}", m.value.unwrap());
    }
    println!(
        "direct invariant of the parameter: {}",
        family_invariant(&t)?
    );

    // The t = 0 limit: nine points, their nine dual lines, and the
    // thirteen-line join arrangement.
    let (p9, dual9, l2) = limit_objects()?;
    println!(
        "limit objects: {} points, dual {} lines (profile {}), joins {} lines (profile {})",
        p9.len(),
        dual9.len(),
        dual9.profile(),
        l2.len(),
        l2.profile()
    );
    Ok(())
}
