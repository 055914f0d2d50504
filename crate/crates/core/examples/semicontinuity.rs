//! Runs semicontinuity scenarios (local, family, curve and surgery) and prints
//! every inequality checked. With no arguments all bundled scenarios are run.

use linkspec::semicont::Scenario;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut paths: Vec<String> = std::env::args().skip(1).collect();
    if paths.is_empty() {
        paths = ["local_a3", "local_d4", "corrupted", "family_briancon", "curve_cusp", "cusp_ball", "a3_singular_ball", "trefoil_cobordism"]
            .iter()
            .map(|n| format!("fixtures/{n}.json"))
            .collect();
    }
    for path in paths {
        let scenario = Scenario::from_json(&std::fs::read_to_string(&path)?)?;
        let report = scenario.run(None)?;
        println!("{path} [{}]: {}", report.kind, if report.passed() { "holds" } else { "VIOLATED" });
        for r in &report.records {
            let mark = if r.ok() { ' ' } else { '!' };
            println!("  {mark} x = {:<6} {:<20} {} ≥ {}", r.x.to_string(), r.inequality, r.lhs, r.rhs);
        }
        for r in &report.refused {
            println!("    x = {} refused: {}", r.x, r.reason);
        }
    }
    Ok(())
}
