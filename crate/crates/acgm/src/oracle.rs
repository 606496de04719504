//! Composite-problem abstraction and the proximal/parabolic primitives the
//! solvers are built from.
//!
//! A composite objective is `F = f + Ψ` where `f` is smooth with Lipschitz
//! gradient and `Ψ` is simple, possibly non-differentiable, and may take the
//! value `+∞` to encode constraints. Everything here treats the problem as a
//! black box reachable only through the four oracle calls `f`, `∇f`, `Ψ`,
//! and `prox_{τΨ}`.

use ndarray::Array1;

use crate::error::{Error, Result};

type ScalarFn = Box<dyn Fn(&Array1<f64>) -> f64 + Send + Sync>;
type VectorFn = Box<dyn Fn(&Array1<f64>) -> Array1<f64> + Send + Sync>;
type ProxFn = Box<dyn Fn(f64, &Array1<f64>) -> Array1<f64> + Send + Sync>;

/// Black-box composite problem: the four oracle callables plus the known
/// strong-convexity constants.
///
/// Immutable after construction; all calls are pure, so one instance may be
/// shared across concurrent solver runs.
pub struct CompositeProblem {
    f: ScalarFn,
    grad_f: VectorFn,
    psi: ScalarFn,
    prox_psi: ProxFn,
    mu_f: f64,
    mu_psi: f64,
    dim: usize,
}

impl CompositeProblem {
    pub fn new(dim: usize, f: ScalarFn, grad_f: VectorFn, psi: ScalarFn, prox_psi: ProxFn) -> Self {
        Self { f, grad_f, psi, prox_psi, mu_f: 0.0, mu_psi: 0.0, dim }
    }

    /// Problem with `Ψ ≡ 0`; the proximal operator reduces to the identity.
    pub fn smooth(dim: usize, f: ScalarFn, grad_f: VectorFn) -> Self {
        Self::new(dim, f, grad_f, Box::new(|_| 0.0), Box::new(|_, x| x.clone()))
    }

    pub fn with_strong_convexity(mut self, mu_f: f64, mu_psi: f64) -> Self {
        assert!(mu_f >= 0.0 && mu_psi >= 0.0, "strong convexity constants must be nonnegative");
        self.mu_f = mu_f;
        self.mu_psi = mu_psi;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu_f(&self) -> f64 {
        self.mu_f
    }

    pub fn mu_psi(&self) -> f64 {
        self.mu_psi
    }

    /// Total strong convexity `μ = μ_f + μ_Ψ`.
    pub fn mu(&self) -> f64 {
        self.mu_f + self.mu_psi
    }

    pub fn f(&self, x: &Array1<f64>) -> f64 {
        (self.f)(x)
    }

    pub fn grad(&self, x: &Array1<f64>) -> Array1<f64> {
        (self.grad_f)(x)
    }

    pub fn psi(&self, x: &Array1<f64>) -> f64 {
        (self.psi)(x)
    }

    pub fn prox(&self, tau: f64, x: &Array1<f64>) -> Array1<f64> {
        debug_assert!(tau > 0.0);
        (self.prox_psi)(tau, x)
    }

    /// `F(x) = f(x) + Ψ(x)`; may be `+∞` at infeasible points.
    pub fn objective(&self, x: &Array1<f64>) -> f64 {
        self.f(x) + self.psi(x)
    }
}

impl std::fmt::Debug for CompositeProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CompositeProblem")
            .field("dim", &self.dim)
            .field("mu_f", &self.mu_f)
            .field("mu_psi", &self.mu_psi)
            .finish()
    }
}

/// Cached first-order information at one point.
///
/// A line-search loop evaluates `f` and `∇f` once per candidate auxiliary
/// point and reuses the sample for every expression that needs them, so no
/// candidate inverse step size triggers repeat oracle calls.
#[derive(Debug, Clone)]
pub struct GradientSample {
    pub point: Array1<f64>,
    pub value: f64,
    pub grad: Array1<f64>,
}

impl GradientSample {
    pub fn at(problem: &CompositeProblem, y: Array1<f64>) -> Self {
        let value = problem.f(&y);
        let grad = problem.grad(&y);
        Self { point: y, value, grad }
    }
}

/// Value of the generalized parabola
/// `f(y) + ⟨∇f(y), x − y⟩ + (γ/2)‖x − y‖²` built from a cached sample at `y`.
pub fn eval_parabola(sample: &GradientSample, gamma: f64, x: &Array1<f64>) -> Result<f64> {
    if x.len() != sample.point.len() {
        return Err(Error::DimensionMismatch { expected: sample.point.len(), got: x.len() });
    }
    if gamma < 0.0 {
        return Err(Error::InvalidParameter(format!("negative curvature {gamma}")));
    }
    Ok(eval_parabola_unchecked(sample, gamma, x))
}

fn eval_parabola_unchecked(sample: &GradientSample, gamma: f64, x: &Array1<f64>) -> f64 {
    let mut linear = 0.0;
    let mut sq = 0.0;
    for ((&xi, &yi), &gi) in x.iter().zip(sample.point.iter()).zip(sample.grad.iter()) {
        let d = xi - yi;
        linear += gi * d;
        sq += d * d;
    }
    sample.value + linear + 0.5 * gamma * sq
}

/// Proximal gradient step `T_L(y) = prox_{(1/L)Ψ}(y − (1/L)∇f(y))`.
pub fn prox_grad_step(problem: &CompositeProblem, l: f64, y: &Array1<f64>) -> Result<Array1<f64>> {
    if l <= 0.0 {
        return Err(Error::InvalidParameter(format!("inverse step size {l} must be positive")));
    }
    let grad = problem.grad(y);
    Ok(problem.prox(1.0 / l, &(y - &(grad / l))))
}

/// `T_L` evaluated from an existing sample, saving the gradient call.
pub(crate) fn prox_grad_step_cached(
    problem: &CompositeProblem,
    l: f64,
    sample: &GradientSample,
) -> Array1<f64> {
    debug_assert!(l > 0.0);
    let shifted = &sample.point - &(&sample.grad / l);
    problem.prox(1.0 / l, &shifted)
}

/// Composite gradient `g_L(y) = L (y − T_L(y))`.
pub fn composite_gradient(
    problem: &CompositeProblem,
    l: f64,
    y: &Array1<f64>,
) -> Result<Array1<f64>> {
    let step = prox_grad_step(problem, l, y)?;
    Ok((y - &step) * l)
}

/// Additive slack for the line-search stopping criterion.
///
/// The descent condition is stated for exact arithmetic; comparing
/// `f(z) ≤ Q + 10 ε max(1, |f(z)|)` keeps rounding noise from forcing an
/// endless backtrack cascade once both sides agree to machine precision.
pub fn lssc_slack(f_z: f64) -> f64 {
    10.0 * f64::EPSILON * f_z.abs().max(1.0)
}

/// Line-search stopping criterion: `f(z) ≤ Q_{f,L,y}(z)` up to [`lssc_slack`].
///
/// The caller constructs `z = T_L(y)`, so dimensions agree by construction.
pub fn descent_condition(sample: &GradientSample, l: f64, z: &Array1<f64>, f_z: f64) -> bool {
    debug_assert_eq!(z.len(), sample.point.len());
    f_z <= eval_parabola_unchecked(sample, l, z) + lssc_slack(f_z)
}

#[cfg(test)]
pub(crate) mod test_problems {
    use super::*;
    use ndarray::Array1;

    /// f(x) = ½‖x‖², Ψ ≡ 0.
    pub fn quadratic(dim: usize) -> CompositeProblem {
        CompositeProblem::smooth(
            dim,
            Box::new(|x: &Array1<f64>| 0.5 * x.dot(x)),
            Box::new(|x: &Array1<f64>| x.clone()),
        )
    }

    /// f(x) = ½‖x − c‖², Ψ(x) = λ‖x‖₁ with soft-threshold prox.
    pub fn one_dim_lasso(c: f64, lambda: f64) -> CompositeProblem {
        CompositeProblem::new(
            1,
            Box::new(move |x: &Array1<f64>| 0.5 * (x[0] - c) * (x[0] - c)),
            Box::new(move |x: &Array1<f64>| Array1::from_elem(1, x[0] - c)),
            Box::new(move |x: &Array1<f64>| lambda * x[0].abs()),
            Box::new(move |tau: f64, x: &Array1<f64>| {
                Array1::from_elem(1, soft_threshold(x[0], tau * lambda))
            }),
        )
    }

    pub fn soft_threshold(v: f64, t: f64) -> f64 {
        (v.abs() - t).max(0.0) * v.signum()
    }
}
