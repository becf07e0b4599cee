//! Iterating the lines-through-three-double-points operator.
//!
//! Shows a non-periodic rational orbit with its closed-form coordinates, the
//! union-profile formula, and an orbit that dies out through the complete
//! quadrilateral.
//!
//! Run with: cargo run --release -p arrangeops --example operator_iteration

use arrangeops::dynamics::{closed_form_abc, iterate_lambda, jacobsthal, union_profile_formula};
use arrangeops::field::Field;
use arrangeops::unassuming::{c0_of, c_abc};

fn main() -> arrangeops::Result<()> {
    let field = Field::rational();
    let t = field.from_int(2);

    // The exponent sequence driving the iterate coordinates.
    let nus: Vec<String> = (0..8).map(|k| jacobsthal(k).to_string()).collect();
    println!("exponent sequence: {}", nus.join(", "));

    // Iterate the diagonal seed C(1, 1, 2) four times and verify the
    // closed-form coordinates along the way.
    let seed = c_abc(&field.one(), &field.one(), &t)?;
    let report = iterate_lambda(&seed, 4)?;
    for (k, term) in report.terms.iter().enumerate() {
        let (a, b, c) = closed_form_abc(&t, k as u32)?;
        let formula = c_abc(&a, &b, &c)?;
        println!(
            "step {k}: {} lines, matches C({a}, {b}, {c}): {}",
            term.len(),
            term.set_equal(&formula)
        );
    }

    // The union of the first k+1 terms follows a closed profile formula.
    let mut union = report.terms[0].clone();
    for (k, term) in report.terms.iter().enumerate().skip(1) {
        union = union.union(term)?;
        println!(
            "union through step {k}: profile {} (formula {})",
            union.profile(),
            union_profile_formula(k)?
        );
    }

    // At t = i the orbit reaches the quadrilateral and then nothing.
    let f4 = Field::cyclotomic(4)?;
    let dying = iterate_lambda(&c0_of(&f4.generator())?, 8)?;
    println!(
        "orbit at the fourth root: {} terms, terminated = {}",
        dying.terms.len(),
        dying.terminated
    );
    Ok(())
}
