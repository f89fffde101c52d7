//! Runs one acceptance suite by name (default `lp`).

use mssms::harness::acceptance::run_suite;

fn main() -> mssms::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "lp".to_string());
    for result in run_suite(&suite)? {
        println!("{result}");
    }
    Ok(())
}
