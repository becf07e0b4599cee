//! Exhaustive sub-arrangement searches.
//!
//! The small Ceva arrangements contain no unassuming six-line subset, while
//! the 12-line orbit union of the rigid seed contains exactly six (all
//! nodal subsets are unassuming there). Searches run in parallel with a
//! deterministic result order.
//!
//! Run with: cargo run --release -p arrangeops --example ceva_search

use arrangeops::catalog::ceva;
use arrangeops::dynamics::iterate_lambda;
use arrangeops::unassuming::{hesse_seed, is_unassuming};

fn main() -> arrangeops::Result<()> {
    for m in [3u32, 5, 7] {
        let c = ceva(m)?;
        let total = binomial(c.len(), 6);
        let found = c.subsets_with_property(6, is_unassuming);
        println!(
            "ceva({m}): {} six-line subsets scanned, {} unassuming",
            total,
            found.len()
        );
    }

    let h = hesse_seed()?;
    let union = iterate_lambda(&h, 4)?.union;
    let nodal = union.subsets_with_property(6, |s| {
        s.profile().get(2) == 15 && s.profile().total_points() == 15
    });
    println!(
        "rigid orbit union: {} of {} subsets are nodal, all unassuming: {}",
        nodal.len(),
        binomial(union.len(), 6),
        nodal.iter().all(is_unassuming)
    );
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
