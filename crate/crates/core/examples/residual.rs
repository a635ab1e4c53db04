//! The element-level residual program of U3(4): forced classes, target cyclic subgroups,
//! dominance reduction and the replacement count behind it. No solve.
//!
//! ```text
//! cargo run --release --example residual
//! ```

use covering::cover::{replacement_argument, residual_instance, residual_setup};
use covering::data::GroupData;
use covering::subgroups::forced_subgroups;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = GroupData::load("data/u3_4".as_ref())?;
    let mats = data.incidence()?;
    let forced = forced_subgroups(&mats)?;
    for f in &forced {
        println!(
            "forced {} by {}",
            data.subgroups[f.subgroup].id, data.classes.classes[f.reason].id
        );
    }
    let (targets, pool) = residual_setup(&mats, &forced);
    let names = |v: &[usize], f: &dyn Fn(usize) -> String| v.iter().map(|&i| f(i)).collect::<Vec<_>>().join(" ");
    println!("targets {}", names(&targets, &|k| data.classes.classes[k].id.clone()));
    println!("pool {}", names(&pool, &|m| data.subgroups[m].id.clone()));

    let full = residual_instance(&data.group, &data.classes, &data.subgroups, &pool, &targets)?;
    let (reduced, removed) = full.reduce_dominated();
    let (col_w, row_w) = reduced.weights();
    println!(
        "residual {}x{} -> {}x{}, {} columns dominated",
        full.program.n_rows(),
        full.program.n_cols(),
        reduced.program.n_rows(),
        reduced.program.n_cols(),
        removed.len()
    );
    println!("column weights {:?}, row weights {:?}", col_w, row_w);

    let m2 = mats.subgroup_index("M2").ok_or("no M2")?;
    let m3 = mats.subgroup_index("M3").ok_or("no M3")?;
    let r = replacement_argument(&data.group, &data.classes, &data.subgroups, m3, m2, 5, &targets)?;
    println!(
        "each M3 conjugate can be swapped for one of {} M2 conjugates ({} Sylow 5-subgroups per M2), targets kept: {}",
        r.per_member, r.sylows_per_target, r.preserves_targets
    );
    Ok(())
}
