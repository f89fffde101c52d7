use crate::error::{Error, Result};
use crate::metric::{Configuration, MetricSpace, Request};

/// A metric space, an initial configuration of `k` servers and a sequence of
/// requests of at most `width` points each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub space: MetricSpace,
    pub width: usize,
    pub initial: Configuration,
    pub requests: Vec<Request>,
}

impl Instance {
    /// Validates indices and request sizes. `width` defaults to the largest
    /// request size (at least 1).
    pub fn new(space: MetricSpace, initial: Configuration, requests: Vec<Request>, width: Option<usize>) -> Result<Self> {
        if initial.is_empty() {
            return Err(Error::InvalidConfiguration("at least one server is required".into()));
        }
        initial.validate(space.len())?;
        for r in &requests {
            r.validate(space.len())?;
        }
        let widest = requests.iter().map(Request::len).max().unwrap_or(1);
        let width = width.unwrap_or(widest);
        if width < widest {
            return Err(Error::InvalidRequest(format!("request of {widest} points exceeds width {width}")));
        }
        Ok(Self { space, width, initial, requests })
    }

    /// Number of servers.
    pub fn k(&self) -> usize {
        self.initial.len()
    }

    /// Request width.
    pub fn l(&self) -> usize {
        self.width
    }

    pub fn m(&self) -> usize {
        self.requests.len()
    }

    pub fn n(&self) -> usize {
        self.space.len()
    }
}
