//! The six-line families and the unassuming predicate.
//!
//! Builds the parameter family at t = 2, inspects its singularities and the
//! 15-line dual arrangement, and shows what the predicate rejects.
//!
//! Run with: cargo run --release -p arrangeops --example unassuming_basics

use arrangeops::arrangement::Mode;
use arrangeops::field::Field;
use arrangeops::geom::on_common_conic;
use arrangeops::unassuming::{c0_of, c_abc, dual_15, is_unassuming};

fn main() -> arrangeops::Result<()> {
    let field = Field::rational();

    // The one-parameter family at t = 2: six lines in general position.
    let a = c0_of(&field.from_int(2))?;
    println!("C0(2): {} lines, profile {}", a.len(), a.profile());

    // Its dual is anything but generic: the 15 lines through pairs of the
    // six dual points acquire six triple points.
    let dual = dual_15(&a)?;
    println!(
        "dual arrangement: {} lines, profile {}",
        dual.len(),
        dual.profile()
    );

    // The six dual points do not lie on a conic.
    let pts: [arrangeops::geom::ProjPoint; 6] =
        a.dual_points().points().to_vec().try_into().unwrap();
    println!("dual points on a common conic: {}", on_common_conic(&pts));
    println!("is_unassuming(C0(2)) = {}", is_unassuming(&a));

    // The five-points of the dual arrangement recover the original lines.
    let five = dual.points_with_multiplicity(5, Mode::Exactly);
    println!(
        "5-points of the dual dualize back to C0(2): {}",
        five.dual_lines()?.set_equal(&a)
    );

    // Degenerate parameters are data, not errors: t = 1 is the complete
    // quadrilateral, t = 0 collapses to five lines.
    let quad = c0_of(&field.one())?;
    println!("C0(1): {} lines, profile {}", quad.len(), quad.profile());
    let deg = c0_of(&field.zero())?;
    println!("C0(0): {} lines, profile {}", deg.len(), deg.profile());
    println!("is_unassuming(C0(1)) = {}", is_unassuming(&quad));

    // The diagonal-coordinates family: same moduli, base points at the
    // coordinate vertices.
    let c = c_abc(&field.from_int(1), &field.from_int(1), &field.from_int(2))?;
    println!("C(1,1,2) unassuming: {}", is_unassuming(&c));
    let bp = arrangeops::unassuming::base_points(&c)?;
    println!("base points of C(1,1,2): {:?}", bp);
    Ok(())
}
