use crate::error::{ClassicalError, Result};

/// Couplings, Bäcklund parameter t and the scale s.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassicalParams {
    pub d1: f64,
    pub d2: f64,
    pub t: f64,
    pub s: f64,
}

impl ClassicalParams {
    pub fn new(d1: f64, d2: f64, t: f64) -> Self {
        Self { d1, d2, t, s: 1.0 }
    }

    pub fn with_s(self, s: f64) -> Self {
        Self { s, ..self }
    }
}

/// Exponentiated coordinates x̂_n and ŷ_n of a periodic chain, n = 0..N-1.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalState {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub params: ClassicalParams,
}

impl ClassicalState {
    pub fn new(x: Vec<f64>, y: Vec<f64>, params: ClassicalParams) -> Result<Self> {
        if x.is_empty() || x.len() != y.len() {
            return Err(ClassicalError::InvalidState(format!(
                "x and y must have the same positive length ({} vs {})",
                x.len(),
                y.len()
            )));
        }
        if x.iter().chain(&y).any(|v| !(*v > 0.0) || !v.is_finite()) {
            return Err(ClassicalError::InvalidState("coordinates must be positive".into()));
        }
        Ok(Self { x, y, params })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

/// Periodic neighbours.
pub(crate) fn prev(n: usize, len: usize) -> usize {
    (n + len - 1) % len
}

pub(crate) fn next(n: usize, len: usize) -> usize {
    (n + 1) % len
}
