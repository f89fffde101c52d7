use super::{OnlineAlgorithm, Servers, Step};
use crate::metric::{Configuration, Cost, MetricSpace, Point, Request};
use rand::RngCore;

/// Moves the closest (server, requested point) pair; ties go to the smallest
/// server index, then the smallest point.
#[derive(Clone, Debug)]
pub struct Greedy<'a> {
    servers: Servers<'a>,
}

impl<'a> Greedy<'a> {
    pub fn new(space: &'a MetricSpace, initial: &Configuration) -> Self {
        Self { servers: Servers::new(space, initial) }
    }
}

impl OnlineAlgorithm for Greedy<'_> {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn positions(&self) -> &[Point] {
        self.servers.positions()
    }

    fn cost(&self) -> Cost {
        self.servers.cost()
    }

    fn serve(&mut self, request: &Request, _rng: &mut dyn RngCore) -> Step {
        if self.servers.covers(request) {
            return Step::default();
        }
        let space = self.servers.space();
        let mut best: Option<(Cost, usize, Point)> = None;
        for (s, &at) in self.servers.positions().iter().enumerate() {
            for &p in request.points() {
                let d = space.dist(at, p);
                if best.is_none_or(|(b, _, _)| d < b) {
                    best = Some((d, s, p));
                }
            }
        }
        let (_, s, p) = best.expect("request is nonempty");
        let mv = self.servers.move_server(s, p);
        Step { cost: mv.cost, moves: vec![mv], fault: true, ..Step::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn nearer_point() {
        // coordinates -1, 0, 5
        let space = MetricSpace::line(vec![Cost::from(-1), Cost::from(0), Cost::from(5)]);
        let mut g = Greedy::new(&space, &Configuration::new(vec![1]));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let step = g.serve(&Request::new(vec![0, 2]).unwrap(), &mut rng);
        assert_eq!(step.cost, Cost::from(1));
        assert_eq!(g.positions(), &[0]);
        let again = g.serve(&Request::new(vec![0]).unwrap(), &mut rng);
        assert_eq!(again.cost, Cost::from(0));
        assert!(again.moves.is_empty());
    }
}
