use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pure real function of one real variable, shareable across threads.
pub type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Which conjugate space a density lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Position,
    Momentum,
}

/// Decay of a density outside the region that needs to be integrated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// Support is bounded; nothing lies outside it.
    None,
    /// Gaussian decay; the density is negligible beyond `radius`.
    Gaussian { radius: f64 },
    /// `density(t) <= coefficient / |t|^power` for `|t| >= from`.
    InversePower {
        coefficient: f64,
        power: f64,
        from: f64,
    },
}

/// The arithmetic progression `offset + j * spacing`, `j` any integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice {
    pub offset: f64,
    pub spacing: f64,
}

impl Lattice {
    fn points_in(&self, lo: f64, hi: f64, out: &mut Vec<f64>) {
        let first = ((lo - self.offset) / self.spacing).ceil() as i64;
        let last = ((hi - self.offset) / self.spacing).floor() as i64;
        for j in first..=last {
            out.push(self.offset + j as f64 * self.spacing);
        }
    }

    fn count_in(&self, lo: f64, hi: f64) -> f64 {
        ((hi - lo) / self.spacing).max(0.0)
    }
}

/// A probability density exposed as an evaluator so the quadrature engine
/// chooses its own sampling points.
#[derive(Clone)]
pub struct Density {
    evaluator: Evaluator,
    space: Space,
    lo: f64,
    hi: f64,
    tail: Tail,
    nodes: Vec<f64>,
    lattice: Option<Lattice>,
    even: bool,
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Density")
            .field("space", &self.space)
            .field("support", &(self.lo, self.hi))
            .field("tail", &self.tail)
            .field("nodes", &self.nodes)
            .field("lattice", &self.lattice)
            .field("even", &self.even)
            .finish_non_exhaustive()
    }
}

impl Density {
    /// Density on `[lo, hi]` (either end may be infinite). Unbounded
    /// supports need a [`Tail`] other than `Tail::None`.
    pub fn new(evaluator: Evaluator, space: Space, lo: f64, hi: f64, tail: Tail) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::domain(format!("invalid support [{lo}, {hi}]")));
        }
        let bounded = lo.is_finite() && hi.is_finite();
        match tail {
            Tail::None if !bounded => {
                return Err(Error::domain("unbounded support needs a tail model"));
            }
            Tail::Gaussian { radius } if !(radius > 0.0 && radius.is_finite()) => {
                return Err(Error::domain(format!("tail radius must be positive, got {radius}")));
            }
            Tail::InversePower {
                coefficient,
                power,
                from,
            } if !(coefficient > 0.0 && power > 1.0 && from >= 0.0 && from.is_finite()) => {
                return Err(Error::domain("inverse-power tail needs coefficient > 0, power > 1, from >= 0"));
            }
            _ => {}
        }
        Ok(Density {
            evaluator,
            space,
            lo,
            hi,
            tail,
            nodes: Vec::new(),
            lattice: None,
            even: false,
        })
    }

    /// Points where the density is known to vanish (eigenfunction nodes).
    pub fn with_nodes(mut self, mut nodes: Vec<f64>) -> Self {
        nodes.sort_by(f64::total_cmp);
        self.nodes = nodes;
        self
    }

    /// A regular grid of zeros, used to panel oscillatory tails.
    pub fn with_lattice(mut self, lattice: Lattice) -> Self {
        self.lattice = Some(lattice);
        self
    }

    /// Marks the density as symmetric about the origin.
    pub fn with_even_symmetry(mut self) -> Self {
        self.even = true;
        self
    }

    /// Uniform density `1 / (hi - lo)` on `[lo, hi]`.
    pub fn uniform(space: Space, lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::domain(format!("invalid uniform support [{lo}, {hi}]")));
        }
        let h = 1.0 / (hi - lo);
        let d = Density::new(Arc::new(move |_| h), space, lo, hi, Tail::None)?;
        Ok(if lo == -hi { d.with_even_symmetry() } else { d })
    }

    /// Centered normal density with standard deviation `sigma`.
    pub fn normal(space: Space, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::domain(format!("sigma must be positive, got {sigma}")));
        }
        let norm = 1.0 / (sigma * (2.0 * std::f64::consts::PI).sqrt());
        let eval = move |t: f64| norm * (-0.5 * (t / sigma).powi(2)).exp();
        Ok(Density::new(
            Arc::new(eval),
            space,
            f64::NEG_INFINITY,
            f64::INFINITY,
            Tail::Gaussian { radius: 40.0 * sigma },
        )?
        .with_even_symmetry())
    }

    pub fn eval(&self, t: f64) -> f64 {
        if t < self.lo || t > self.hi {
            0.0
        } else {
            (self.evaluator)(t)
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn lattice(&self) -> Option<Lattice> {
        self.lattice
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    /// Sorted panel boundaries on `[lo, hi]`: the ends, nodes inside, and
    /// lattice points inside.
    pub fn breakpoints(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut pts = vec![lo, hi];
        pts.extend(self.nodes.iter().copied().filter(|&x| x > lo && x < hi));
        if let Some(lattice) = self.lattice {
            lattice.points_in(lo, hi, &mut pts);
        }
        pts.retain(|&x| x >= lo && x <= hi);
        pts.sort_by(f64::total_cmp);
        let tol = 1e-12 * (hi - lo).abs();
        pts.dedup_by(|a, b| (*a - *b).abs() <= tol);
        // Dedup keeps the first of a run; make sure the true end survives.
        if let Some(last) = pts.last_mut() {
            *last = hi;
        }
        pts
    }

    /// Approximate number of lattice panels on `[lo, hi]`.
    pub(crate) fn panel_count(&self, lo: f64, hi: f64) -> f64 {
        self.lattice.map_or(1.0, |l| l.count_in(lo, hi)) + self.nodes.len() as f64
    }

    /// The same distribution expressed in a coordinate multiplied by
    /// `factor`: `t' = factor * t`, `density'(t') = density(t' / factor) / factor`.
    pub fn rescale_coordinate(&self, factor: f64) -> Result<Density> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::domain(format!("rescale factor must be positive, got {factor}")));
        }
        let inner = Arc::clone(&self.evaluator);
        let eval = move |t: f64| inner(t / factor) / factor;
        let tail = match self.tail {
            Tail::None => Tail::None,
            Tail::Gaussian { radius } => Tail::Gaussian { radius: radius * factor },
            Tail::InversePower {
                coefficient,
                power,
                from,
            } => Tail::InversePower {
                coefficient: coefficient * factor.powf(power - 1.0),
                power,
                from: from * factor,
            },
        };
        Ok(Density {
            evaluator: Arc::new(eval),
            space: self.space,
            lo: self.lo * factor,
            hi: self.hi * factor,
            tail,
            nodes: self.nodes.iter().map(|x| x * factor).collect(),
            lattice: self.lattice.map(|l| Lattice {
                offset: l.offset * factor,
                spacing: l.spacing * factor,
            }),
            even: self.even,
        })
    }
}

/// A real position-space wavefunction with optional analytic derivative.
#[derive(Clone)]
pub struct Wavefunction {
    value: Evaluator,
    derivative: Option<Evaluator>,
    lo: f64,
    hi: f64,
    radius: f64,
    nodes: Vec<f64>,
}

impl fmt::Debug for Wavefunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Wavefunction")
            .field("support", &(self.lo, self.hi))
            .field("radius", &self.radius)
            .field("nodes", &self.nodes)
            .finish_non_exhaustive()
    }
}

impl Wavefunction {
    /// `radius` is the half-width beyond which the function is negligible;
    /// for bounded supports it should cover the support.
    pub fn new(value: Evaluator, lo: f64, hi: f64, radius: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::domain(format!("invalid support [{lo}, {hi}]")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::domain(format!("radius must be positive, got {radius}")));
        }
        Ok(Wavefunction {
            value,
            derivative: None,
            lo,
            hi,
            radius,
            nodes: Vec::new(),
        })
    }

    pub fn with_derivative(mut self, derivative: Evaluator) -> Self {
        self.derivative = Some(derivative);
        self
    }

    pub fn with_nodes(mut self, mut nodes: Vec<f64>) -> Self {
        nodes.sort_by(f64::total_cmp);
        self.nodes = nodes;
        self
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x < self.lo || x > self.hi {
            0.0
        } else {
            (self.value)(x)
        }
    }

    pub fn eval_derivative(&self, x: f64) -> Option<f64> {
        let d = self.derivative.as_ref()?;
        Some(if x < self.lo || x > self.hi { 0.0 } else { d(x) })
    }

    pub fn has_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    /// Integration window: the support clipped to `[-radius, radius]`.
    pub fn window(&self, radius: f64) -> (f64, f64) {
        (self.lo.max(-radius), self.hi.min(radius))
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// `lambda^{1/2} psi(lambda x)`, which stays normalized.
    pub fn scaled(&self, lambda: f64) -> Result<Wavefunction> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::domain(format!("scale must be positive, got {lambda}")));
        }
        let amp = lambda.sqrt();
        let inner = Arc::clone(&self.value);
        let value: Evaluator = Arc::new(move |x| amp * inner(lambda * x));
        let derivative = self.derivative.as_ref().map(|d| {
            let d = Arc::clone(d);
            let amp = amp * lambda;
            Arc::new(move |x| amp * d(lambda * x)) as Evaluator
        });
        Ok(Wavefunction {
            value,
            derivative,
            lo: self.lo / lambda,
            hi: self.hi / lambda,
            radius: self.radius / lambda,
            nodes: self.nodes.iter().map(|x| x / lambda).collect(),
        })
    }
}
