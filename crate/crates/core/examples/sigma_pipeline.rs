//! Forced classes, class-level bound, residual program and verified cover for one group.
//!
//! ```text
//! cargo run --release --example sigma_pipeline -- data/u3_4
//! ```

use std::path::PathBuf;
use std::time::Instant;

use covering::cover::{sigma, SigmaOptions};
use covering::data::GroupData;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "data/u3_3".into()).into();
    let data = GroupData::load(&dir)?;
    let t = Instant::now();
    let cert = sigma(
        &data.group,
        &data.classes,
        &data.subgroups,
        &SigmaOptions {
            progress_every: 50,
            ..SigmaOptions::default()
        },
    )?;
    let label = |m: usize| data.subgroups[m].id.as_str();
    println!("{} order {}", cert.group, data.group.order());
    for f in &cert.forced {
        println!("forced {} by {}", label(f.subgroup), data.classes[f.reason].id);
    }
    for r in &cert.refined {
        println!("fused row {} coeffs {:?} demand {}", r.label, r.coeffs, r.demand);
    }
    println!(
        "class bound {} ({} nodes)",
        cert.class_bound.bound(),
        cert.class_bound.result.nodes
    );
    if let Some(r) = &cert.residual {
        let (cw, rw) = r.instance.weights();
        println!(
            "residual {}x{} reduced to {}x{} (column weights {cw:?}, row weights {rw:?})",
            r.full_rows,
            r.full_cols,
            r.instance.program.n_rows(),
            r.instance.program.n_cols()
        );
        println!(
            "residual {:?} optimum {} lower {} nodes {}",
            r.result.status, r.result.optimum, r.result.lower_bound, r.result.nodes
        );
    }
    println!("upper {} lower {}", cert.upper.size(), cert.lower);
    match cert.sigma {
        Some(s) => println!("sigma = {s}"),
        None => println!("sigma in [{}, {}]", cert.lower, cert.upper.size()),
    }
    println!("elapsed {:.1?}", t.elapsed());
    Ok(())
}
