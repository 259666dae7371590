//! Physicists' Hermite polynomials and normalized Hermite-Gaussian functions.

/// `H_n(y)` by the upward recurrence `H_{k+1} = 2y H_k - 2k H_{k-1}`.
pub fn hermite_eval(n: u32, y: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * y);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let next = 2.0 * y * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n'(y) = 2n H_{n-1}(y)`.
pub fn hermite_derivative(n: u32, y: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        2.0 * f64::from(n) * hermite_eval(n - 1, y)
    }
}

pub(crate) fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| f64::from(k).ln()).sum()
}

/// `ln` of the oscillator normalization `2^{-n/2} pi^{-1/4} (n!)^{-1/2} beta^{1/4}`.
pub(crate) fn ln_normalization(n: u32, beta: f64) -> f64 {
    -0.5 * f64::from(n) * std::f64::consts::LN_2 - 0.25 * std::f64::consts::PI.ln()
        - 0.5 * ln_factorial(n)
        + 0.25 * beta.ln()
}

/// Normalized eigenfunction `A_n exp(-beta x^2 / 2) H_n(sqrt(beta) x)`.
pub(crate) fn hermite_function(n: u32, beta: f64, ln_norm: f64, x: f64) -> f64 {
    let y = beta.sqrt() * x;
    (ln_norm - 0.5 * y * y).exp() * hermite_eval(n, y)
}

/// Derivative with respect to `x` of [`hermite_function`].
pub(crate) fn hermite_function_derivative(n: u32, beta: f64, ln_norm: f64, x: f64) -> f64 {
    let sb = beta.sqrt();
    let y = sb * x;
    (ln_norm - 0.5 * y * y).exp() * sb * (hermite_derivative(n, y) - y * hermite_eval(n, y))
}

/// The `n` real zeros of `H_n`, ascending.
pub fn hermite_roots(n: u32) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    // All zeros lie strictly inside (-sqrt(2n+1), sqrt(2n+1)).
    let bound = (2.0 * f64::from(n) + 1.0).sqrt();
    let steps = 400 * (n as usize + 1);
    let h = 2.0 * bound / steps as f64;
    let mut roots = Vec::with_capacity(n as usize);
    let mut a = -bound;
    let mut fa = hermite_eval(n, a);
    for i in 1..=steps {
        let b = -bound + h * i as f64;
        let fb = hermite_eval(n, b);
        if fb == 0.0 {
            roots.push(b);
        } else if fa != 0.0 && fa.signum() != fb.signum() {
            roots.push(bisect(|y| hermite_eval(n, y), a, b, fa));
        }
        a = b;
        fa = fb;
    }
    // Odd n has a root at the origin; pin it exactly.
    if n % 2 == 1 {
        let mid = roots.len() / 2;
        roots[mid] = 0.0;
    }
    roots
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}
