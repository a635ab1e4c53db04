//! Writes a U3(3) certificate, replays it, then shows the checker rejecting a tampered copy.
//!
//! ```text
//! cargo run --release --example check_certificate
//! ```

use covering::cert::{check_text, render_group};
use covering::cover::{sigma, SigmaOptions};
use covering::data::GroupData;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = "data/u3_3";
    let data = GroupData::load(dir.as_ref())?;
    let cert = sigma(&data.group, &data.classes, &data.subgroups, &SigmaOptions::default())?;
    let text = render_group(&data, dir, &cert)?;
    let report = check_text(&text, None)?;
    for s in &report.steps {
        println!("ok  {s}");
    }

    let tampered = text
        .replacen("take M2 0", "take M2 1", 1)
        .replacen("lower 64", "lower 63", 1);
    match check_text(&tampered, None) {
        Ok(r) => println!("tampered copy accepted?! {}", r.verdict),
        Err(e) => println!("tampered copy rejected: {e}"),
    }
    Ok(())
}
