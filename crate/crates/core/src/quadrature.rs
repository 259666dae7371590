//! Globally adaptive Gauss-Legendre quadrature.
//!
//! The integration range is handed over as a list of breakpoints (interval
//! ends, known zeros of the integrand, oscillation half-periods). Each panel is
//! integrated with a fixed Gauss-Legendre rule on the whole panel and on its two
//! halves; the difference is the local error estimate. The panel with the
//! largest estimate is bisected until the summed estimate drops below the
//! requested absolute tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const RULE_POINTS: usize = 15;

/// Nodes and weights of an `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "a Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Tricomi's initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            for _ in 0..100 {
                let (p, p_prev) = legendre_pair(n, x);
                let dx = p / (nf * (x * p - p_prev) / (x * x - 1.0));
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (p, p_prev) = legendre_pair(n, x);
            let dp = nf * (x * p - p_prev) / (x * x - 1.0);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Applies the rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        half * sum
    }
}

/// `(P_n(x), P_{n-1}(x))` by the Bonnet recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

fn default_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(RULE_POINTS))
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    left: f64,
    right: f64,
    error: f64,
}

impl Panel {
    fn value(&self) -> f64 {
        self.left + self.right
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn evaluate_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64) -> Result<Panel> {
    let rule = default_rule();
    let mid = 0.5 * (a + b);
    let left = rule.integrate(f, a, mid);
    let right = rule.integrate(f, mid, b);
    if !(left.is_finite() && right.is_finite()) {
        return Err(Error::domain(format!("integrand is not finite on [{a}, {b}]")));
    }
    Ok(Panel {
        a,
        b,
        left,
        right,
        error: (whole - (left + right)).abs(),
    })
}

/// Integrates `f` over `[breakpoints[0], breakpoints[last]]`, never placing a
/// panel across an interior breakpoint.
///
/// Breakpoints must be sorted ascending; duplicates are skipped. The
/// `max_subdivisions` budget counts bisections, not the initial panels.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    breakpoints: &[f64],
    tolerance: f64,
    max_subdivisions: usize,
) -> Result<Estimate> {
    if !(tolerance > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tolerance}")));
    }
    if breakpoints.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("breakpoints must be finite"));
    }
    if breakpoints.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::domain("breakpoints must be sorted ascending"));
    }

    let rule = default_rule();
    let mut heap = BinaryHeap::with_capacity(breakpoints.len());
    let mut total_error = 0.0;
    for w in breakpoints.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        let whole = rule.integrate(&f, a, b);
        let panel = evaluate_panel(&f, a, b, whole)?;
        total_error += panel.error;
        heap.push(panel);
    }

    let mut frozen = NeumaierSum::default();
    let mut frozen_error = 0.0;
    let mut subdivisions = 0usize;
    let mut since_resum = 0usize;

    while total_error + frozen_error > tolerance {
        let Some(panel) = heap.pop() else { break };
        total_error -= panel.error;

        let mid = 0.5 * (panel.a + panel.b);
        let width = panel.b - panel.a;
        let scale = panel.a.abs().max(panel.b.abs()).max(f64::MIN_POSITIVE);
        if width <= 64.0 * f64::EPSILON * scale || mid <= panel.a || mid >= panel.b {
            // Cannot bisect further in floating point; keep the estimate as is.
            frozen.add(panel.value());
            frozen_error += panel.error;
            continue;
        }
        if subdivisions >= max_subdivisions {
            heap.push(panel);
            total_error = heap.iter().map(|p| p.error).sum::<f64>() + frozen_error;
            return Err(Error::Convergence {
                achieved: total_error,
                requested: tolerance,
                subdivisions,
            });
        }
        subdivisions += 1;

        let left = evaluate_panel(&f, panel.a, mid, panel.left)?;
        let right = evaluate_panel(&f, mid, panel.b, panel.right)?;
        total_error += left.error + right.error;
        heap.push(left);
        heap.push(right);

        since_resum += 1;
        if since_resum >= 4096 {
            // Running subtraction drifts; rebuild the sum from the panels.
            since_resum = 0;
            total_error = heap.iter().map(|p| p.error).sum::<f64>();
        }
    }

    let mut value = frozen;
    let mut error = frozen_error;
    for p in heap.iter() {
        value.add(p.value());
        error += p.error;
    }
    if error > tolerance {
        return Err(Error::Convergence {
            achieved: error,
            requested: tolerance,
            subdivisions,
        });
    }
    Ok(Estimate {
        value: value.total(),
        error,
        subdivisions,
    })
}

/// Compensated summation; the momentum-space integrals add up tens of
/// thousands of panels.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
