//! Class table and fused incidence matrix A for a vendored group directory.
//!
//! ```text
//! cargo run --release --example incidence -- data/u3_3
//! ```

use std::path::PathBuf;

use covering::data::GroupData;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "data/u3_3".into()).into();
    let data = GroupData::load(&dir)?;
    println!("{} order {}", data.group.name(), data.group.order());
    for c in data.classes.iter() {
        println!(
            "{:>5} centralizer {:>7} size {:>7} {}",
            c.id,
            c.centralizer_order,
            c.size,
            if c.principal { "principal" } else { "" }
        );
    }
    let mats = data.incidence()?;
    print!("{}", mats.a_fused_tsv());
    Ok(())
}
