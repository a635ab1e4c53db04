//! Regenerates the vendored group and maximal-subgroup files under `data/`.
//!
//! U3(2) is small enough that its maximal subgroups come from the full subgroup lattice.
//! U3(3) and U3(4) act on their isotropic points; U3(5) is first built on its 126 isotropic
//! points and then moved to its 50-point action on the conjugates of an A7. Representatives
//! are found by a deterministic search over pairs of elements. Labels follow the usual
//! numbering by decreasing order; equal-order classes are told apart by which principal classes they meet.
//!
//! ```text
//! cargo run --release --example build_data -- data
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use covering::cover::maximal_subgroup_classes;
use covering::files::{GroupFile, SubgroupFile};
use covering::perm::{analyze, ClassTable, GroupTable, DEFAULT_ORDER_CAP};
use covering::unitary::{action_on_conjugates, find_subgroup_classes, u3_group_file, FoundSubgroup};

struct Search {
    order: usize,
    seed_order: u32,
    partner_order: Option<u32>,
    want: usize,
    structure: &'static str,
}

fn search(order: usize, seed_order: u32, partner: Option<u32>, want: usize, s: &'static str) -> Search {
    Search {
        order,
        seed_order,
        partner_order: partner,
        want,
        structure: s,
    }
}

fn meets(found: &FoundSubgroup, classes: &ClassTable, label: &str) -> bool {
    let k = classes.by_label(label).expect("class label");
    found.class.count_containing(classes[k].rep) > 0
}

fn write_group(dir: &Path, file: &GroupFile, provenance: &str) {
    fs::create_dir_all(dir.join("subgroups")).unwrap();
    let text = format!("{provenance}{}", file.render());
    fs::write(dir.join("group.txt"), text).unwrap();
}

fn write_subgroup(dir: &Path, g: &GroupTable, label: &str, structure: &str, found: &FoundSubgroup) {
    let file = SubgroupFile {
        label: label.to_string(),
        group: g.name().to_string(),
        order: found.class.order,
        structure: structure.to_string(),
        generators: found.generators.iter().map(|&x| g.element(x)).collect(),
    };
    let text = format!(
        "# generated by examples/build_data.rs: element IDs {} and {} of the enumerated group\n{}",
        found.generators[0],
        found.generators[1],
        file.render()
    );
    fs::write(dir.join("subgroups").join(format!("{label}.txt")), text).unwrap();
}

fn find_all(g: &GroupTable, plan: &[Search]) -> Vec<(Vec<FoundSubgroup>, &'static str)> {
    plan.iter()
        .map(|s| {
            let found = find_subgroup_classes(g, s.order, s.seed_order, s.partner_order, s.want);
            assert_eq!(found.len(), s.want, "order {} classes found", s.order);
            (found, s.structure)
        })
        .collect()
}

fn provenance(q: usize, seed: u64, extra: &str) -> String {
    format!(
        "# U3({q}) generated by examples/build_data.rs from two random special unitary\n\
         # matrices (ChaCha8 seed {seed}) acting on the isotropic points of the Hermitian\n\
         # form x1 y1^q + x2 y2^q + x3 y3^q over GF({}).{extra}\n",
        q * q
    )
}

fn u3_2(root: &Path) {
    let file = u3_group_file(2, 2);
    let g = GroupTable::close(file.name.clone(), file.generators.clone(), DEFAULT_ORDER_CAP).unwrap();
    let dir = root.join("u3_2");
    let extra = "\n# Maximal subgroups from the full subgroup lattice (cover::maximal_subgroup_classes).";
    write_group(&dir, &file, &provenance(2, 2, extra));
    for m in maximal_subgroup_classes(&g).unwrap() {
        let structure = match m.order {
            36 => "3^2:4",
            8 => "Q8",
            o => panic!("unexpected maximal subgroup order {o}"),
        };
        let sub = SubgroupFile {
            label: m.id.clone(),
            group: g.name().to_string(),
            order: m.order,
            structure: structure.to_string(),
            generators: m.rep_generators.clone(),
        };
        let text = format!(
            "# generated by examples/build_data.rs from the subgroup lattice\n{}",
            sub.render()
        );
        fs::write(dir.join("subgroups").join(format!("{}.txt", m.id)), text).unwrap();
    }
}

fn u3_3(root: &Path) {
    let file = u3_group_file(3, 3);
    let g = GroupTable::close(file.name.clone(), file.generators.clone(), DEFAULT_ORDER_CAP).unwrap();
    let classes = analyze(&g);
    let plan = [
        search(216, 12, None, 1, "3^(1+2):8"),
        search(168, 7, None, 1, "L2(7)"),
        search(96, 8, None, 2, ""),
    ];
    let mut found = find_all(&g, &plan);
    let dir = root.join("u3_3");
    write_group(&dir, &file, &provenance(3, 3, ""));
    write_subgroup(&dir, &g, "M1", found[0].1, &found[0].0[0]);
    write_subgroup(&dir, &g, "M2", found[1].1, &found[1].0[0]);
    // The 4.S4 class contains elements of order 12; 4^2:S3 does not.
    let mut ninety_six = std::mem::take(&mut found[2].0);
    ninety_six.sort_by_key(|f| !meets(f, &classes, "12A"));
    write_subgroup(&dir, &g, "M3", "4.S4", &ninety_six[0]);
    write_subgroup(&dir, &g, "M4", "4^2:S3", &ninety_six[1]);
}

fn u3_4(root: &Path) {
    let file = u3_group_file(4, 4);
    let g = GroupTable::close(file.name.clone(), file.generators.clone(), DEFAULT_ORDER_CAP).unwrap();
    let plan = [
        search(960, 4, None, 1, "2^(2+4):15"),
        search(300, 15, None, 1, "5xA5"),
        search(150, 10, None, 1, "5^2:S3"),
        search(39, 13, Some(3), 1, "13:3"),
    ];
    let found = find_all(&g, &plan);
    let dir = root.join("u3_4");
    write_group(&dir, &file, &provenance(4, 4, ""));
    for (i, (f, structure)) in found.iter().enumerate() {
        write_subgroup(&dir, &g, &format!("M{}", i + 1), structure, &f[0]);
    }
}

fn u3_5(root: &Path) {
    let big = u3_group_file(5, 5);
    let g126 = GroupTable::close("U3(5)", big.generators.clone(), DEFAULT_ORDER_CAP).unwrap();
    let a7 = find_subgroup_classes(&g126, 2520, 7, None, 1);
    let gens: Vec<_> = (0..g126.generators().len())
        .map(|i| {
            let id = g126.id_of(&g126.generators()[i]).unwrap();
            action_on_conjugates(&g126, &a7[0].class, id)
        })
        .collect();
    let file = GroupFile {
        name: "U3(5)".into(),
        degree: 50,
        order: g126.order(),
        generators: gens,
    };
    drop(g126);
    let g = GroupTable::close(file.name.clone(), file.generators.clone(), DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(g.order(), 126000);
    let classes = analyze(&g);
    let plan = [
        search(2520, 7, None, 3, "A7"),
        search(1000, 8, None, 1, "5^(1+2):8"),
        search(720, 8, None, 3, "M10"),
        search(240, 10, None, 1, "2S5"),
    ];
    let mut found = find_all(&g, &plan);
    let dir = root.join("u3_5");
    let extra = "\n# The 126-point action was then replaced by the action on the 50 conjugates of an A7.";
    write_group(&dir, &file, &provenance(5, 5, extra));
    // A7 classes M1..M3 and M10 classes M5..M7 follow the 5-classes they meet: 5B, 5C, 5D.
    let by_five = |list: &mut Vec<FoundSubgroup>| {
        list.sort_by_key(|f| {
            ["5B", "5C", "5D"]
                .iter()
                .position(|l| meets(f, &classes, l))
                .expect("meets one of 5B, 5C, 5D")
        })
    };
    by_five(&mut found[0].0);
    by_five(&mut found[2].0);
    for i in 0..3 {
        write_subgroup(&dir, &g, &format!("M{}", i + 1), "A7", &found[0].0[i]);
        write_subgroup(&dir, &g, &format!("M{}", i + 5), "M10", &found[2].0[i]);
    }
    write_subgroup(&dir, &g, "M4", found[1].1, &found[1].0[0]);
    write_subgroup(&dir, &g, "M8", found[3].1, &found[3].0[0]);
}

fn main() {
    let root: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "data".into()).into();
    let which = std::env::args().nth(2);
    let run = |name: &str| which.as_deref().is_none_or(|w| w == name);
    if run("u3_2") {
        u3_2(&root);
        println!("u3_2 written");
    }
    if run("u3_3") {
        u3_3(&root);
        println!("u3_3 written");
    }
    if run("u3_4") {
        u3_4(&root);
        println!("u3_4 written");
    }
    if run("u3_5") {
        u3_5(&root);
        println!("u3_5 written");
    }
}
