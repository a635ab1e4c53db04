//! PG(2,4), its hyperovals, the Steiner system S(3,6,22), the 176 heptads and the
//! McLaughlin graph, each checked exhaustively.
//!
//! ```text
//! cargo run --release --example witt_graph
//! ```

use covering::witt::{
    build_mclaughlin_graph, build_pg24, build_s3622, heptads, hyperoval_classes, hyperovals, MCLAUGHLIN_PARAMS,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let plane = build_pg24();
    plane.check()?;
    println!("{}: {} points, {} lines", plane.name, plane.points, plane.blocks.len());
    let ovals = hyperovals(&plane);
    let classes = hyperoval_classes(&ovals);
    println!(
        "{} hyperovals in {} classes of {:?}",
        ovals.len(),
        classes.len(),
        classes.iter().map(Vec::len).collect::<Vec<_>>()
    );
    let s = build_s3622()?;
    s.check()?;
    println!(
        "{}: {} points, {} blocks, replication {}",
        s.name,
        s.points,
        s.blocks.len(),
        s.replication(0)
    );
    println!("{} heptads", heptads(&s)?.len());
    let g = build_mclaughlin_graph()?;
    let p = MCLAUGHLIN_PARAMS;
    println!(
        "McLaughlin graph: {} vertices, {} edges, srg{:?} verified",
        g.n,
        g.edge_count(),
        p
    );
    println!("(A - 2I)(A + 28I) = 56J: {}", g.check_eigen_identity(2, -28, 56));
    Ok(())
}
