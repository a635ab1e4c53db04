//! The McLaughlin-group certificate from tabulated class data, written and replayed.
//!
//! ```text
//! cargo run --release --example mcl_certificate
//! ```

use covering::cert::{check_text, render_mcl};
use covering::files::read_text;
use covering::mcl::{mcl_sigma, TabulatedGroup};
use covering::witt::{build_mclaughlin_graph, independent_set};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = "data/mcl/tables.txt";
    let text = read_text(path.as_ref())?;
    let t = TabulatedGroup::parse(&text)?;
    let alpha = t.alpha()?;
    let g = build_mclaughlin_graph()?;
    let iset = independent_set(&g, alpha as usize, 0, 64)?;
    let mc = mcl_sigma(&t, &g, &iset, alpha)?;
    for r in &mc.lower.rows {
        println!("row {}: {}", r.row, r.bound());
    }
    println!(
        "graph row {}: {} (weak bound {})",
        mc.lower.graph.row,
        mc.lower.graph.bound,
        mc.lower.weak.bound()
    );
    println!("lower {} upper {}", mc.lower.total, mc.upper.total);
    let cert = render_mcl(&t, &text, path, alpha, &mc)?;
    let report = check_text(&cert, None)?;
    println!("replayed: {}", report.verdict);

    let weaker = mcl_sigma(&t, &g, &iset, alpha + 1)?;
    println!(
        "with alpha {}: lower {} upper {}",
        alpha + 1,
        weaker.lower.total,
        weaker.upper.total
    );
    Ok(())
}
