use super::{OnlineAlgorithm, Servers, Step};
use crate::metric::{Cost, MetricSpace, Point, Request};
use rand::RngCore;

/// Turns any algorithm into a lazy one.
///
/// The wrapped algorithm runs on a shadow copy of the servers. Real server
/// `i` only moves when a request is not covered, and then jumps straight to
/// shadow server `i`'s position on a requested point. By the triangle
/// inequality this never costs more than the shadow's own movement.
pub struct Lazy<'a> {
    inner: Box<dyn OnlineAlgorithm + 'a>,
    servers: Servers<'a>,
}

impl<'a> Lazy<'a> {
    pub fn new(space: &'a MetricSpace, inner: Box<dyn OnlineAlgorithm + 'a>) -> Self {
        let servers = Servers::from_positions(space, inner.positions().to_vec());
        Self { inner, servers }
    }

    pub fn inner(&self) -> &dyn OnlineAlgorithm {
        self.inner.as_ref()
    }
}

impl OnlineAlgorithm for Lazy<'_> {
    fn name(&self) -> &'static str {
        self.inner.name()
    }

    fn positions(&self) -> &[Point] {
        self.servers.positions()
    }

    fn cost(&self) -> Cost {
        self.servers.cost()
    }

    fn serve(&mut self, request: &Request, rng: &mut dyn RngCore) -> Step {
        let shadow = self.inner.serve(request, rng);
        let mut step = Step { phase: shadow.phase, subphase: shadow.subphase, ..Step::default() };
        if self.servers.covers(request) {
            return step;
        }
        let virt = self.inner.positions();
        let server = (0..virt.len()).find(|&i| request.contains(virt[i])).expect("shadow serves the request");
        let mv = self.servers.move_server(server, virt[server]);
        step.fault = true;
        step.cost = mv.cost;
        step.moves.push(mv);
        step
    }
}
