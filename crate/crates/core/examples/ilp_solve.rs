//! A small bounded covering program solved exactly, with its certificate replayed.
//!
//! ```text
//! cargo run --release --example ilp_solve
//! ```

use covering::ilp::{certify, check_certificate, lp_relax, solve_integer, CoveringProgram, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two classes of subgroups; the rows count elements of two classes.
    let mut p = CoveringProgram::new();
    let x1 = p.add_col("x1", 0, 20);
    let x3 = p.add_col("x3", 0, 63);
    p.add_row("12AB", 1000, [(x1, 36), (x3, 16)]);
    p.add_row("8AB", 600, [(x1, 54), (x3, 12)]);
    print!("{}", p.render());

    let lp = lp_relax(&p)?;
    println!("LP value {} (ceil {})", lp.value, lp.ceil);
    let res = solve_integer(&p, &SolveOptions::default())?;
    println!(
        "integer optimum {} at {:?} after {} nodes",
        res.optimum, res.solution, res.nodes
    );
    let cert = certify(&p, &res)?;
    let (lower, incumbent) = check_certificate(&p, &cert)?;
    println!("certificate replayed: lower {lower}, incumbent {incumbent}");
    Ok(())
}
