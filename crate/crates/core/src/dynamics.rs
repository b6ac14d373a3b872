//! Discrete-time Lorenz map.
//!
//! The flow is integrated with plain forward Euler. Every arithmetic
//! expression below is written in the exact evaluation order that the
//! golden trajectory fixes; rustc never contracts `a * b + c` into a fused
//! multiply-add or reassociates floating-point operations, so results are
//! bit-identical on any IEEE-754 binary64 target.

use crate::error::{Error, Result};

/// Guard box bounds: |x| <= 100, |y| <= 100, -50 <= z <= 150.
pub const X_BOUNDS: (f64, f64) = (-100.0, 100.0);
pub const Y_BOUNDS: (f64, f64) = (-100.0, 100.0);
pub const Z_BOUNDS: (f64, f64) = (-50.0, 150.0);

/// Largest admissible integration step.
pub const MAX_DT: f64 = 0.027;

/// A point `r = (x, y, z)` of the attractor space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LorenzState {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl LorenzState {
    pub const ORIGIN: LorenzState = LorenzState { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn in_guard_box(&self) -> bool {
        within(self.x, X_BOUNDS) && within(self.y, Y_BOUNDS) && within(self.z, Z_BOUNDS)
    }

    /// Coordinate by selector: 0 → x, 1 → y, 2 → z.
    pub fn component(&self, axis: u8) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("axis selector {axis} out of range"),
        }
    }

    pub fn distance(&self, other: &LorenzState) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn to_bits(&self) -> [u64; 3] {
        [self.x.to_bits(), self.y.to_bits(), self.z.to_bits()]
    }
}

/// Lorenz constants and integration settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DynamicsParams {
    pub sigma: f64,
    pub rho: f64,
    pub beta: f64,
    pub dt: f64,
    /// Map iterations per processed character.
    pub n_it: u32,
}

impl DynamicsParams {
    pub const STRONG_N_IT: u32 = 3000;
    pub const FAST_N_IT: u32 = 100;
    pub const DEFAULT_DT: f64 = 0.01;

    pub fn strong() -> Self {
        Self::with_iterations(Self::STRONG_N_IT)
    }

    pub fn fast() -> Self {
        Self::with_iterations(Self::FAST_N_IT)
    }

    pub fn with_iterations(n_it: u32) -> Self {
        Self { sigma: 10.0, rho: 28.0, beta: 8.0 / 3.0, dt: Self::DEFAULT_DT, n_it }
    }

    pub fn with_dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt <= MAX_DT) {
            return Err(Error::InvalidParams("dt must lie in (0, 0.027]"));
        }
        if self.n_it == 0 {
            return Err(Error::InvalidParams("n_it must be at least 1"));
        }
        if !(self.sigma.is_finite() && self.rho.is_finite() && self.beta.is_finite()) {
            return Err(Error::InvalidParams("sigma, rho and beta must be finite"));
        }
        Ok(())
    }
}

impl Default for DynamicsParams {
    fn default() -> Self {
        Self::strong()
    }
}

/// One forward-Euler step, without the guard.
pub fn step(state: LorenzState, params: &DynamicsParams) -> Result<LorenzState> {
    let next = euler(state, params);
    if next.is_finite() {
        Ok(next)
    } else {
        Err(Error::Divergence)
    }
}

#[inline(always)]
fn euler(s: LorenzState, p: &DynamicsParams) -> LorenzState {
    let LorenzState { x, y, z } = s;
    LorenzState {
        x: x + p.sigma * (y - x) * p.dt,
        y: y + (p.rho * x - y - x * z) * p.dt,
        z: z + (x * y - p.beta * z) * p.dt,
    }
}

/// `n` guarded steps. `iterate(s, p, 0)` returns `s` untouched.
pub fn iterate(state: LorenzState, params: &DynamicsParams, n: u32) -> Result<LorenzState> {
    let mut s = state;
    for _ in 0..n {
        s = guard(euler(s, params));
    }
    // folding maps any non-finite component to NaN, which then persists
    if s.is_finite() {
        Ok(s)
    } else {
        Err(Error::Divergence)
    }
}

/// Adds `theta` to the coordinate chosen by `axis` (0 → x, 1 → y, 2 → z).
pub fn perturb(state: LorenzState, axis: u8, theta: f64) -> LorenzState {
    let mut s = state;
    match axis {
        0 => s.x += theta,
        1 => s.y += theta,
        2 => s.z += theta,
        _ => panic!("axis selector {axis} out of range"),
    }
    s
}

/// Folds out-of-box coordinates back inside by reflection at the walls.
/// In-box coordinates are returned bit-for-bit unchanged.
pub fn guard(state: LorenzState) -> LorenzState {
    LorenzState { x: fold(state.x, X_BOUNDS), y: fold(state.y, Y_BOUNDS), z: fold(state.z, Z_BOUNDS) }
}

#[inline(always)]
fn within(v: f64, (lo, hi): (f64, f64)) -> bool {
    v >= lo && v <= hi
}

#[inline(always)]
fn fold(v: f64, bounds: (f64, f64)) -> f64 {
    if within(v, bounds) {
        v
    } else {
        reflect(v, bounds)
    }
}

#[cold]
#[inline(never)]
fn reflect(v: f64, (lo, hi): (f64, f64)) -> f64 {
    if !v.is_finite() {
        return f64::NAN;
    }
    let width = hi - lo;
    let t = (v - lo).rem_euclid(2.0 * width);
    let t = if t > width { 2.0 * width - t } else { t };
    (lo + t).clamp(lo, hi)
}
