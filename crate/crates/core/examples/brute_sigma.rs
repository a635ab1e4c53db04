//! Covering numbers of small groups straight from the subgroup lattice, compared with the
//! incidence pipeline on the same maximal subgroups.
//!
//! ```text
//! cargo run --release --example brute_sigma
//! ```

use covering::cover::{brute_sigma, maximal_subgroup_classes, sigma, SigmaOptions};
use covering::data::load_group_file;
use covering::perm::{analyze, parse_permutation, GroupTable, Permutation};

fn group(name: &str, degree: usize, gens: &[&str]) -> Result<GroupTable, Box<dyn std::error::Error>> {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|g| parse_permutation(g, degree))
        .collect::<Result<_, _>>()?;
    Ok(GroupTable::close(name, gens, 10_000)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (_, u32_, _) = load_group_file("data/u3_2/group.txt".as_ref())?;
    let groups = vec![
        group("V4", 4, &["(1,2)(3,4)", "(1,3)(2,4)"])?,
        group("S3", 3, &["(1,2,3)", "(1,2)"])?,
        group("Q8", 8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"])?,
        group("S4", 4, &["(1,2,3,4)", "(1,2)"])?,
        u32_,
    ];
    for g in &groups {
        let brute = brute_sigma(g)?;
        let classes = analyze(g);
        let maximals = maximal_subgroup_classes(g)?;
        let cert = sigma(g, &classes, &maximals, &SigmaOptions::default())?;
        println!(
            "{:<6} order {:>3}  maximal classes {}  lattice {}  pipeline {:?}",
            g.name(),
            g.order(),
            maximals.len(),
            brute,
            cert.sigma
        );
    }
    Ok(())
}
