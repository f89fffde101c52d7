//! Building the supported metric spaces and measuring configuration moves.

use mssms::{config_distance, Configuration, Cost, MetricSpace};

fn main() -> mssms::Result<()> {
    let line = MetricSpace::line([0, 2, 5, 9].map(Cost::from).to_vec());
    let cluster = MetricSpace::cluster(3, 2, Cost::from(7))?;
    let union = MetricSpace::scaled_union(vec![(2, Cost::from(1)), (3, Cost::new(5, 2))], Cost::from(10))?;

    for (name, space) in [("line", &line), ("cluster", &cluster), ("scaled union", &union)] {
        println!("{name}: {} points, diameter {}", space.len(), space.diameter());
    }

    // matching cost between two server multisets
    let x = Configuration::new(vec![0, 0, 3]);
    let y = Configuration::new(vec![1, 2, 3]);
    println!("line move {:?} -> {:?} costs {}", x.points(), y.points(), config_distance(&line, &x, &y)?);
    Ok(())
}
