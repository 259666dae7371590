//! Closed forms written out independently of the library, used as oracles.
#![allow(dead_code)]

use std::f64::consts::{E, PI};

/// Oscillator eigenfunctions for n = 0, 1, 2 spelled out explicitly.
pub fn oscillator_psi(n: u32, beta: f64, x: f64) -> f64 {
    let g = (beta / PI).powf(0.25) * (-0.5 * beta * x * x).exp();
    let y = beta.sqrt() * x;
    match n {
        0 => g,
        1 => g * 2f64.sqrt() * y,
        2 => g * (2.0 * y * y - 1.0) / 2f64.sqrt(),
        _ => panic!("explicit form only for n <= 2"),
    }
}

pub fn oscillator_ground_sx(beta: f64) -> f64 {
    0.5 * (PI * E / beta).ln()
}

pub fn oscillator_ground_sp(beta: f64) -> f64 {
    0.5 * (PI * E * beta).ln()
}

/// Standard deviations of oscillator state `n`: sqrt((n + 1/2)/beta), sqrt((n + 1/2) beta).
pub fn oscillator_spreads(n: u32, beta: f64) -> (f64, f64) {
    let h = n as f64 + 0.5;
    ((h / beta).sqrt(), (h * beta).sqrt())
}

pub fn box_sx(xc: f64) -> f64 {
    (2.0 * xc).ln() - 1.0
}

/// Box wavefunction on |x| < xc/2 written as a sine measured from the left
/// wall; equal to the library's state up to sign.
pub fn box_psi(n: u32, xc: f64, x: f64) -> f64 {
    if x.abs() >= 0.5 * xc {
        return 0.0;
    }
    let k = n as f64 * PI / xc;
    (2.0 / xc).sqrt() * (k * (x + 0.5 * xc)).sin()
}

/// `<x^2> = xc^2 (1/12 - 1/(2 n^2 pi^2))`, `dp = n pi / xc`.
pub fn box_spreads(n: u32, xc: f64) -> (f64, f64) {
    let nf = n as f64;
    let x2 = xc * xc * (1.0 / 12.0 - 1.0 / (2.0 * nf * nf * PI * PI));
    (x2.sqrt(), nf * PI / xc)
}

/// Momentum density of box state `n` from a midpoint-rule Fourier sum of
/// `box_psi` with `steps` cells; accuracy O(steps^-2).
pub fn box_gamma_midpoint(n: u32, xc: f64, p: f64, steps: usize) -> f64 {
    let h = xc / steps as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for i in 0..steps {
        let x = -0.5 * xc + (i as f64 + 0.5) * h;
        let v = box_psi(n, xc, x);
        re += v * (p * x).cos();
        im -= v * (p * x).sin();
    }
    (re * re + im * im) * h * h / (2.0 * PI)
}

pub fn spread(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    max - min
}
