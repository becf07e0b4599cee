//! Periodic orbits at roots of unity and their Ceva identifications.
//!
//! Seeds at odd-order roots of unity are periodic; the union of the orbits
//! over all Galois conjugates is a Ceva arrangement, recognized here with a
//! certified witness projectivity. The power-of-two seeds instead die out,
//! and their orbit unions assemble Ceva arrangements too.
//!
//! Run with: cargo run --release -p arrangeops --example periodic_orbits

use arrangeops::catalog::{recognize_ceva, CatalogName, Relation};
use arrangeops::dynamics::{
    galois_orbit_union, iterate_lambda, power_of_two_assembly, predicted_chi_period,
};
use arrangeops::field::Field;
use arrangeops::table1;
use arrangeops::unassuming::c_abc;

fn main() -> arrangeops::Result<()> {
    // Orbit periods at the first odd orders.
    for n in [3u32, 5, 7, 9] {
        let field = Field::cyclotomic(n)?;
        let seed = c_abc(&field.one(), &field.one(), &field.generator())?;
        let report = iterate_lambda(&seed, 32)?;
        println!(
            "order {n}: operator period {:?}, predicted parameter period {}",
            report.period,
            predicted_chi_period(n as u64)?
        );
    }

    // The Galois orbit union at a fifth root is the full Ceva(10).
    let f5 = Field::cyclotomic(5)?;
    let union = galois_orbit_union(&f5.generator())?;
    let rec = recognize_ceva(&union);
    println!(
        "Galois union at order 5: {} lines, recognized {:?} ({:?})",
        union.len(),
        rec.name,
        rec.relation
    );
    assert_eq!(rec.name, Some(CatalogName::Ceva(10)));
    assert_eq!(rec.relation, Relation::Equal);

    // Power-of-two seeds die out; their unions assemble Ceva(8).
    let assembly = power_of_two_assembly(2)?;
    let rec8 = recognize_ceva(&assembly);
    println!(
        "power-of-two assembly (n = 2): {} lines, recognized {:?}",
        assembly.len(),
        rec8.name
    );

    // The desk-scale slice of the published table, verified end to end.
    for row in table1::run_rows(None)? {
        println!("{}", row.summary_line());
    }
    Ok(())
}
