//! Seeded search for a largest independent set in the McLaughlin graph, and the
//! induced-edge bound on random vertex subsets.
//!
//! ```text
//! cargo run --release --example independent_set -- 7
//! ```

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use covering::witt::{build_mclaughlin_graph, independent_set, induced_edge_bound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args().nth(1).map_or(Ok(0), |s| s.parse())?;
    let g = build_mclaughlin_graph()?;
    let set = independent_set(&g, 22, seed, 64)?;
    g.check_independent(&set)?;
    println!("seed {seed}: independent set {:?}", set);
    println!(
        "size 23: {}",
        independent_set(&g, 23, seed, 4).map_or_else(|e| e.to_string(), |s| format!("{s:?}"))
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..g.n).collect();
    for size in [30, 60, 120, 200] {
        vertices.shuffle(&mut rng);
        let b = induced_edge_bound(&g, &vertices[..size], 22);
        println!(
            "{size} vertices: {} induced edges, {} components, bound holds: {}",
            b.edges,
            b.components,
            b.holds()
        );
    }
    Ok(())
}
