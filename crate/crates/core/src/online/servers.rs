use super::Move;
use crate::metric::{min_cost_assignment, Configuration, Cost, MetricSpace, Point, Request};
use num_traits::Zero;

/// Server positions with identities, plus the running cost.
#[derive(Clone, Debug)]
pub struct Servers<'a> {
    space: &'a MetricSpace,
    positions: Vec<Point>,
    cost: Cost,
}

impl<'a> Servers<'a> {
    pub fn new(space: &'a MetricSpace, initial: &Configuration) -> Self {
        Self { space, positions: initial.points().to_vec(), cost: Cost::zero() }
    }

    /// Servers in the given slot order.
    pub fn from_positions(space: &'a MetricSpace, positions: Vec<Point>) -> Self {
        Self { space, positions, cost: Cost::zero() }
    }

    pub fn space(&self) -> &'a MetricSpace {
        self.space
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn cost(&self) -> Cost {
        self.cost
    }

    pub fn covers(&self, request: &Request) -> bool {
        self.positions.iter().any(|&p| request.contains(p))
    }

    /// Moves server `server` to `to` and returns the move.
    pub fn move_server(&mut self, server: usize, to: Point) -> Move {
        let from = self.positions[server];
        let cost = self.space.dist(from, to);
        self.positions[server] = to;
        self.cost += cost;
        Move { server, from, to, cost }
    }

    /// Puts a server on every point of `targets` (at most `k` distinct
    /// points) with a minimum weight matching; the other servers stay.
    pub fn occupy(&mut self, targets: &[Point]) -> Vec<Move> {
        let (_, assign) =
            min_cost_assignment(targets.len(), self.positions.len(), |t, s| self.space.dist(self.positions[s], targets[t]));
        let mut moves: Vec<Move> = assign
            .iter()
            .enumerate()
            .filter(|&(t, &s)| self.positions[s] != targets[t])
            .map(|(t, &s)| (s, targets[t]))
            .collect::<Vec<_>>()
            .into_iter()
            .map(|(s, to)| self.move_server(s, to))
            .collect();
        moves.sort_by_key(|m| m.server);
        moves
    }

    /// Moves the servers onto exactly the multiset `target`.
    pub fn become_config(&mut self, target: &Configuration) -> Vec<Move> {
        self.occupy(target.points())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn occupy_uses_cheapest_servers() {
        let space = MetricSpace::line(vec![0.into(), 1.into(), 10.into(), 11.into()]);
        let mut s = Servers::new(&space, &Configuration::new(vec![0, 2]));
        let moves = s.occupy(&[3]);
        assert_eq!(moves.len(), 1);
        assert_eq!((moves[0].from, moves[0].to), (2, 3));
        assert_eq!(s.cost(), Cost::from(1));
        assert_eq!(s.occupy(&[0, 3]), vec![]);
    }
}
