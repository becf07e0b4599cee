//! The moduli invariant and the induced Chebyshev dynamics.
//!
//! The operator acts on the labelled parameter by t -> -1/t^2 and on the
//! moduli invariant (t^2 + t^-2)/2 by z -> 2z^2 - 1; the invariant map
//! intertwines the two. Recovery of the invariant from a bare arrangement
//! goes through exact frame normalization.
//!
//! Run with: cargo run --release -p arrangeops --example moduli_and_chebyshev

use arrangeops::dynamics::{chebyshev_map, parameter_map, period_map, P1};
use arrangeops::field::Field;
use arrangeops::unassuming::{c0_of, c0_parameter_matches, c_abc, moduli_invariant, ModuliClass};

fn main() -> arrangeops::Result<()> {
    let field = Field::rational();
    let two = P1::finite(field.from_int(2));

    // The semi-conjugacy, evaluated exactly at z = 2.
    let upsilon = period_map(&two)?;
    println!("invariant of 2: {:?}", upsilon);
    let lhs = chebyshev_map(&upsilon)?;
    let rhs = period_map(&parameter_map(&two)?)?;
    println!("Chebyshev(invariant) = {:?}", lhs);
    println!("invariant(parameter image) = {:?}", rhs);
    println!("intertwined: {}", lhs == rhs);

    // Recovering the invariant from an arrangement without its labels.
    let a = c0_of(&field.from_int(2))?;
    let m = moduli_invariant(&a)?;
    println!(
        "moduli of C0(2): {:?} with value {}",
        m.class,
        m.value.as_ref().unwrap()
    );

    // The frame matches behind the computation: 48 of the 720 labelings
    // normalize onto the parameter pattern, at parameters {2, -2, 1/2, -1/2}.
    let matches = c0_parameter_matches(&a)?;
    let mut params: Vec<String> = matches.iter().map(|(t, _)| t.to_string()).collect();
    params.sort();
    params.dedup();
    println!(
        "{} frame matches, parameters {{{}}}",
        matches.len(),
        params.join(", ")
    );

    // A projectively equivalent arrangement in other coordinates reports the
    // same invariant.
    let c = c_abc(&field.from_int(1), &field.from_int(1), &field.from_int(2))?;
    let mc = moduli_invariant(&c)?;
    println!("moduli of C(1,1,2): value {}", mc.value.as_ref().unwrap());

    // The rigid arrangement matches no frame at all.
    let h = arrangeops::unassuming::hesse_seed()?;
    let mh = moduli_invariant(&h)?;
    println!("moduli class of the rigid seed: {:?}", mh.class);
    assert_eq!(mh.class, ModuliClass::Rigid);
    Ok(())
}
