//! The rigid seed over Q(zeta_3) and its period-two orbit.
//!
//! The isolated point of the moduli space is realized by an explicit
//! arrangement whose orbit has period two; the union of the two terms is a
//! 12-line configuration with nine 4-points, the union of their dual
//! 15-line arrangements is the 21-line reflection arrangement, and the
//! matroid of the dual realizes the rigid non-basis data.
//!
//! Run with: cargo run --release -p arrangeops --example rigid_seed

use arrangeops::catalog::g26_union;
use arrangeops::dynamics::iterate_lambda;
use arrangeops::unassuming::{dual_15, find_labeling, hesse_seed, is_unassuming, nb1, nb2};

fn main() -> arrangeops::Result<()> {
    let h = hesse_seed()?;
    println!("seed: {} lines over {:?}", h.len(), h.field());
    println!("unassuming: {}", is_unassuming(&h));

    let report = iterate_lambda(&h, 8)?;
    println!("orbit period: {:?}", report.period);
    println!(
        "union of the orbit: {} lines, profile {}",
        report.union.len(),
        report.union_profile
    );

    // Exactly six nodal six-line subsets sit inside the union, and each of
    // them is unassuming.
    let nodal = report.union.subsets_with_property(6, |s| {
        s.profile().get(2) == 15 && s.profile().total_points() == 15
    });
    println!("nodal six-line subsets of the union: {}", nodal.len());
    println!("all unassuming: {}", nodal.iter().all(is_unassuming));

    // The dual pair and the 21-line reflection union.
    let image = h.lambda_op(2, 3)?;
    let d0 = dual_15(&h)?;
    let d1 = dual_15(&image)?;
    println!(
        "index-(3,2) operator swaps the duals: {} and {}",
        d0.lambda_op(3, 2)?.set_equal(&d1),
        d1.lambda_op(3, 2)?.set_equal(&d0)
    );
    let g = g26_union(&h)?;
    println!(
        "reflection union: {} lines, profile {}",
        g.len(),
        g.profile()
    );

    // The matroid of the dual realizes the rigid non-basis data, and only it.
    println!(
        "rigid non-basis labeling found: {}",
        find_labeling(&d0, &nb2())?.is_some()
    );
    println!(
        "family non-basis labeling found: {}",
        find_labeling(&d0, &nb1())?.is_some()
    );
    Ok(())
}
