//! Parsing and writing the text instance format.

use mssms::harness::{emit_instance, parse_instance};

const FILE: &str = "\
# two servers on a small line
metric line 0 1 3 7
servers 1 4
request 2 3
request 3
request 1 4
";

fn main() -> mssms::Result<()> {
    let inst = parse_instance(FILE)?;
    println!("n = {}, k = {}, l = {}, m = {}", inst.n(), inst.k(), inst.l(), inst.m());
    print!("{}", emit_instance(&inst));

    match parse_instance("metric uniform 4\nservers 1\nrequest 2 9\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
