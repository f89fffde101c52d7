//! Reading a vertex cover off an optimal schedule.

use mssms::generators::{extract_vertex_cover, gen_vc_reduction};
use mssms::hitting::SetSystem;
use mssms::offline::opt_dp;

fn main() -> mssms::Result<()> {
    let edges = SetSystem::from_slices(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0], &[0, 2]])?;
    for k in 2..=3 {
        let inst = gen_vc_reduction(&edges, k, 4)?;
        let (cost, schedule) = opt_dp(&inst)?;
        let cover = extract_vertex_cover(&edges, &schedule);
        println!("k = {k}: optimum {cost}, cover {cover:?}");
    }
    Ok(())
}
