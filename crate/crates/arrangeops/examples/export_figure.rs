//! Figure export: SVG and TikZ for real-embeddable fields, exact JSON
//! geometry otherwise.
//!
//! Run with: cargo run --release -p arrangeops --example export_figure

use arrangeops::export::{export_figure, ExportFormat, ExportOptions, MarkFilter};
use arrangeops::field::Field;
use arrangeops::unassuming::{c0_of, dual_15, hesse_seed};

fn main() -> arrangeops::Result<()> {
    let dir = std::env::temp_dir().join("arrangeops-figures");
    std::fs::create_dir_all(&dir)?;
    let a = c0_of(&Field::rational().from_int(2))?;

    let svg = export_figure(&a, &ExportOptions::default())?;
    std::fs::write(dir.join("c0_t2.svg"), &svg)?;
    println!(
        "{}: {} line segments, {} marked points",
        dir.join("c0_t2.svg").display(),
        svg.matches("<line ").count(),
        svg.matches("<circle ").count()
    );

    // The dual arrangement with only the triple and quintuple points marked.
    let dual = dual_15(&a)?;
    let tikz = export_figure(
        &dual,
        &ExportOptions {
            format: ExportFormat::Tikz,
            mark: MarkFilter::Multiplicities(vec![3, 5]),
            ..ExportOptions::default()
        },
    )?;
    std::fs::write(dir.join("dual15_t2.tex"), &tikz)?;
    println!(
        "{}: {} segments, {} marks",
        dir.join("dual15_t2.tex").display(),
        tikz.matches("\\draw").count(),
        tikz.matches("\\fill").count()
    );

    // Complex coordinates fall back to the exact JSON geometry dump.
    let h = hesse_seed()?;
    match export_figure(&h, &ExportOptions::default()) {
        Err(e) => println!("rigid seed as svg: {e}"),
        Ok(_) => unreachable!("the rigid seed is not real-embeddable"),
    }
    let json = export_figure(
        &h,
        &ExportOptions {
            format: ExportFormat::Json,
            ..ExportOptions::default()
        },
    )?;
    std::fs::write(dir.join("hesse_geometry.json"), &json)?;
    println!("{} written", dir.join("hesse_geometry.json").display());
    Ok(())
}
