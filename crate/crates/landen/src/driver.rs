//! The iteration engine: run transformation steps, watch φ converge, and
//! deliver π·φ as the value of the integral.
//!
//! Each step maps the current integrand to a new one with the same integral;
//! the quantity that carries the answer is φ = F(0), the ratio of trailing
//! coefficients, which tends to ∫F/π at a rate set by the order. The driver
//! records a [`TraceStep`] per iterate — coefficients, φ, the rendered
//! approximation, coefficient heights, and the step-to-step movement of φ —
//! so callers can print convergence tables or feed the trace to
//! [`estimate_order`].
//!
//! Two arithmetic backends are offered: exact rationals (bit-reproducible,
//! heights grow fast) and fixed-precision floats (bounded memory, rounding
//! error). π enters only at rendering time; in exact mode φ itself stays a
//! rational number throughout.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Signed;

use crate::scalars::float::{FloatCtx, Fp};
use crate::scalars::{cf_compress, height, Rational};
use crate::transform::{
    quadratic_map, quadratic_state, quadratic_state_to_function, transform, transform_float,
    Normalize, RationalFunction,
};
use crate::upoly::{Coeff, Polynomial};
use crate::Error;

/// F(0): trailing numerator coefficient over trailing denominator
/// coefficient. The iteration drives this ratio toward ∫F/π.
pub fn phi<C: Coeff>(f: &RationalFunction<C>) -> Result<C, Error> {
    let den0 = f.den.constant_term();
    if C::is_zero(&den0) {
        return Err(Error::ZeroTrailingCoeff);
    }
    f.num
        .constant_term()
        .checked_div(&den0)
        .ok_or(Error::ZeroTrailingCoeff)
}

/// Arithmetic backend for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Exact rational arithmetic. `render_digits` sets the float context used
    /// to *render* π·φ; it never influences the iteration itself.
    Exact { render_digits: usize },
    /// Floating-point arithmetic with `digits` decimal digits throughout.
    Float { digits: usize },
}

/// When to stop iterating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StopRule {
    /// Run exactly this many steps (step 0 is the input itself).
    FixedSteps(usize),
    /// Stop at the first step whose movement |φ_n − φ_{n−1}| is at most
    /// `tol`, giving up with [`Error::NoConvergence`] after `max_steps`
    /// steps. This is a practical heuristic — small movement does not bound
    /// the remaining distance to the limit.
    DeltaTol { tol: Rational, max_steps: usize },
}

/// Optional per-step coefficient compression (exact mode only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Compress {
    Off,
    /// After every step, replace each coefficient by the shortest
    /// continued-fraction convergent within `tol`. Keeps heights bounded at
    /// the price of a perturbation of roughly `tol` per coefficient per
    /// step; the final π·φ moves by no more than about π·tol·(step count)
    /// in practice, but no rigorous bound is claimed.
    Cf { tol: Rational },
}

/// Everything [`integrate`] needs to know besides the integrand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Transformation order m ≥ 2. Higher orders converge faster per step
    /// and cost more per step.
    pub order: usize,
    pub mode: Mode,
    pub stop: StopRule,
    pub compress: Compress,
    /// Rescaling policy between exact steps; float runs are always monic.
    pub normalize: Normalize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 2,
            mode: Mode::Exact { render_digits: 30 },
            stop: StopRule::FixedSteps(10),
            compress: Compress::Off,
            normalize: Normalize::Gcd,
        }
    }
}

/// A number recorded in a trace: exact in rational mode, floating otherwise.
#[derive(Debug, Clone)]
pub enum ScalarVal {
    Rat(Rational),
    Flt(Fp),
}

impl ScalarVal {
    pub fn to_float(&self, ctx: &FloatCtx) -> Fp {
        match self {
            ScalarVal::Rat(q) => ctx.from_rational(q),
            ScalarVal::Flt(v) => v.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ScalarVal::Rat(q) => Some(q),
            ScalarVal::Flt(_) => None,
        }
    }
}

/// One recorded iterate.
#[derive(Debug, Clone)]
pub struct TraceStep {
    /// Step index; 0 is the (re-normalized) input.
    pub n: usize,
    /// Leading denominator coefficient (1 under monic normalization).
    pub lead: ScalarVal,
    /// The 2p−1 remaining coefficients, descending: the denominator's p
    /// coefficients below the leading one, then the p−1 numerator
    /// coefficients.
    pub coeffs: Vec<ScalarVal>,
    /// Trailing-coefficient ratio F_n(0).
    pub phi: ScalarVal,
    /// π·φ rendered at the context precision.
    pub approx: Fp,
    /// Largest height among the recorded scalars (exact mode only).
    pub height_max: Option<BigUint>,
    /// |φ_n − φ_{n−1}|; absent on step 0.
    pub delta: Option<ScalarVal>,
}

/// The full history of a run.
#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub order: usize,
    /// True for exact-rational runs.
    pub exact: bool,
    /// Context precision: working digits in float mode, rendering digits in
    /// exact mode.
    pub digits: usize,
    pub steps: Vec<TraceStep>,
}

impl IterationTrace {
    fn last_step(&self) -> &TraceStep {
        self.steps.last().expect("a trace always has step 0")
    }

    /// Final π·φ.
    pub fn approx(&self) -> &Fp {
        &self.last_step().approx
    }

    /// Final φ.
    pub fn final_phi(&self) -> &ScalarVal {
        &self.last_step().phi
    }

    /// |φ_n − target/π| for every step, at the context precision. This is
    /// the error sequence on the φ scale that order estimation works from.
    pub fn phi_errors(&self, i_ref: &Fp, ctx: &FloatCtx) -> Vec<Fp> {
        let target = i_ref.div(&ctx.pi());
        self.steps
            .iter()
            .map(|s| s.phi.to_float(ctx).sub(&target).abs())
            .collect()
    }
}

/// Run the iteration on a validated integrand and return the history; the
/// final approximation is `trace.approx()`.
///
/// Errors: configuration problems ([`Error::InvalidOrder`],
/// [`Error::InvalidConfig`] for compression outside exact mode), validation
/// failures from the integrand, [`Error::NoConvergence`] when a tolerance
/// stop rule exhausts its step budget, and [`Error::DivergenceSuspected`]
/// when a float run sees its φ movement grow three steps in a row — a
/// best-effort tripwire for inputs whose poles sit so close to the real
/// axis that the working precision cannot separate them from it.
pub fn integrate(
    f: &RationalFunction<Rational>,
    cfg: &RunConfig,
) -> Result<IterationTrace, Error> {
    if cfg.order < 2 {
        return Err(Error::InvalidOrder(cfg.order));
    }
    if matches!(cfg.mode, Mode::Float { .. }) && matches!(cfg.compress, Compress::Cf { .. }) {
        return Err(Error::InvalidConfig(
            "continued-fraction compression requires exact mode".into(),
        ));
    }
    f.validate()?;
    match cfg.mode {
        Mode::Exact { render_digits } => run_exact(f, cfg, render_digits),
        Mode::Float { digits } => run_float(f, cfg, digits),
    }
}

/// Rescale an integrand the same way the exact step does, so step 0 of a
/// trace is presented under the configured normalization.
fn renormalize(f: &RationalFunction<Rational>, norm: Normalize) -> RationalFunction<Rational> {
    let (num, den, _) = Polynomial::normalize_pair_to_integer(&f.num, &f.den);
    match norm {
        Normalize::Gcd => RationalFunction::new(num, den),
        Normalize::Monic => {
            let inv = den.leading().recip();
            RationalFunction::new(num.mul_rational(&inv), den.mul_rational(&inv))
        }
    }
}

fn compress_function(
    f: &RationalFunction<Rational>,
    tol: &Rational,
) -> RationalFunction<Rational> {
    let squeeze = |p: &Polynomial<Rational>| {
        Polynomial::new(p.coeffs().iter().map(|c| cf_compress(c, tol)).collect())
    };
    RationalFunction::new(squeeze(&f.num), squeeze(&f.den))
}

fn record_exact(
    trace: &mut IterationTrace,
    n: usize,
    f: &RationalFunction<Rational>,
    prev: Option<&Rational>,
    ctx: &FloatCtx,
    pi: &Fp,
) -> Result<Rational, Error> {
    let p = f.den.degree().ok_or(Error::ZeroDenominator)?;
    let phi_n = phi(f)?;
    let den_all = f.den.coeffs_padded(p);
    let lead = den_all[0].clone();
    let mut coeffs: Vec<Rational> = den_all[1..].to_vec();
    coeffs.extend(f.num.coeffs_padded(p - 2));
    let mut hmax = height(&phi_n).max(height(&lead));
    for c in &coeffs {
        hmax = hmax.max(height(c));
    }
    let delta = prev.map(|q| (phi_n.clone() - q).abs());
    let approx = ctx.from_rational(&phi_n).mul(pi);
    trace.steps.push(TraceStep {
        n,
        lead: ScalarVal::Rat(lead),
        coeffs: coeffs.into_iter().map(ScalarVal::Rat).collect(),
        phi: ScalarVal::Rat(phi_n.clone()),
        approx,
        height_max: Some(hmax),
        delta: delta.map(ScalarVal::Rat),
    });
    Ok(phi_n)
}

fn run_exact(
    f: &RationalFunction<Rational>,
    cfg: &RunConfig,
    render_digits: usize,
) -> Result<IterationTrace, Error> {
    let ctx = FloatCtx::new(render_digits);
    let pi = ctx.pi();
    let mut cur = renormalize(f, cfg.normalize);
    let mut trace = IterationTrace {
        order: cfg.order,
        exact: true,
        digits: render_digits,
        steps: Vec::new(),
    };
    let mut prev = Some(record_exact(&mut trace, 0, &cur, None, &ctx, &pi)?);
    let mut done = 0usize;
    loop {
        match &cfg.stop {
            StopRule::FixedSteps(k) => {
                if done == *k {
                    break;
                }
            }
            StopRule::DeltaTol { tol, max_steps } => {
                let reached = trace
                    .last_step()
                    .delta
                    .as_ref()
                    .and_then(ScalarVal::as_rational)
                    .is_some_and(|d| d <= tol);
                if reached {
                    break;
                }
                if done == *max_steps {
                    return Err(Error::NoConvergence);
                }
            }
        }
        cur = transform(&cur, cfg.order, cfg.normalize)?;
        if let Compress::Cf { tol } = &cfg.compress {
            cur = compress_function(&cur, tol);
        }
        done += 1;
        prev = Some(record_exact(&mut trace, done, &cur, prev.as_ref(), &ctx, &pi)?);
    }
    Ok(trace)
}

fn record_float(
    trace: &mut IterationTrace,
    n: usize,
    f: &RationalFunction<Fp>,
    prev: Option<&Fp>,
    pi: &Fp,
) -> Result<Fp, Error> {
    let p = f.den.degree().ok_or(Error::ZeroDenominator)?;
    let phi_n = phi(f)?;
    let den_all = f.den.coeffs_padded(p);
    let lead = den_all[0].clone();
    let mut coeffs: Vec<Fp> = den_all[1..].to_vec();
    coeffs.extend(f.num.coeffs_padded(p - 2));
    let delta = prev.map(|q| phi_n.sub(q).abs());
    let approx = phi_n.mul(pi);
    trace.steps.push(TraceStep {
        n,
        lead: ScalarVal::Flt(lead),
        coeffs: coeffs.into_iter().map(ScalarVal::Flt).collect(),
        phi: ScalarVal::Flt(phi_n.clone()),
        approx,
        height_max: None,
        delta: delta.map(ScalarVal::Flt),
    });
    Ok(phi_n)
}

/// Extend a run of strictly-growing deltas: returns the new streak length.
fn growth_streak(streak: usize, prev: Option<&Fp>, cur: &Fp) -> usize {
    match prev {
        Some(p) if cur.cmp(p) == Some(Ordering::Greater) => streak + 1,
        _ => 0,
    }
}

fn run_float(
    f: &RationalFunction<Rational>,
    cfg: &RunConfig,
    digits: usize,
) -> Result<IterationTrace, Error> {
    let ctx = FloatCtx::new(digits);
    let pi = ctx.pi();
    let raw = f.to_float(ctx.bits());
    let lead = raw.den.leading();
    let monic = |p: &Polynomial<Fp>| {
        Polynomial::new(p.coeffs().iter().map(|c| c.div(&lead)).collect())
    };
    let mut cur = RationalFunction::new(monic(&raw.num), monic(&raw.den));
    let mut trace = IterationTrace {
        order: cfg.order,
        exact: false,
        digits,
        steps: Vec::new(),
    };
    let mut prev = Some(record_float(&mut trace, 0, &cur, None, &pi)?);
    let tol_f = match &cfg.stop {
        StopRule::DeltaTol { tol, .. } => Some(ctx.from_rational(tol)),
        StopRule::FixedSteps(_) => None,
    };
    let mut prev_delta: Option<Fp> = None;
    let mut streak = 0usize;
    let mut done = 0usize;
    loop {
        match &cfg.stop {
            StopRule::FixedSteps(k) => {
                if done == *k {
                    break;
                }
            }
            StopRule::DeltaTol { max_steps, .. } => {
                let tol_f = tol_f.as_ref().expect("tolerance converted above");
                let reached = match &trace.last_step().delta {
                    Some(ScalarVal::Flt(d)) => d.cmp(tol_f) != Some(Ordering::Greater),
                    _ => false,
                };
                if reached {
                    break;
                }
                if done == *max_steps {
                    return Err(Error::NoConvergence);
                }
            }
        }
        cur = transform_float(&cur, cfg.order)?;
        done += 1;
        prev = Some(record_float(&mut trace, done, &cur, prev.as_ref(), &pi)?);
        if let Some(ScalarVal::Flt(d)) = &trace.last_step().delta {
            streak = growth_streak(streak, prev_delta.as_ref(), d);
            prev_delta = Some(d.clone());
            if streak >= 3 {
                return Err(Error::DivergenceSuspected);
            }
        }
    }
    Ok(trace)
}

/// Measure the observed convergence order of a trace against a reference
/// value of the integral: the median of log(err_{n+1})/log(err_n) over
/// consecutive pairs with err_n < 1, where err_n = |φ_n − I/π|.
///
/// Callers wanting the asymptotic rate should pass a trace slice past the
/// initial transient (the early steps carry no order signal). Needs at
/// least three steps with nonzero error and at least one usable pair;
/// otherwise [`Error::InsufficientData`].
pub fn estimate_order(
    trace: &IterationTrace,
    i_ref: &Fp,
    ctx: &FloatCtx,
) -> Result<f64, Error> {
    let errs = trace.phi_errors(i_ref, ctx);
    if errs.iter().filter(|e| !e.is_zero()).count() < 3 {
        return Err(Error::InsufficientData);
    }
    let mut ratios: Vec<f64> = Vec::new();
    for w in errs.windows(2) {
        let (l0, l1) = match (ctx.log10_abs(&w[0]), ctx.log10_abs(&w[1])) {
            (Some(a), Some(b)) => (a, b),
            _ => continue, // an exact hit: no usable logarithm
        };
        if l0 >= 0.0 {
            continue; // err_n >= 1 carries no order signal
        }
        ratios.push(l1 / l0);
    }
    if ratios.is_empty() {
        return Err(Error::InsufficientData);
    }
    ratios.sort_by(|a, b| a.total_cmp(b));
    let k = ratios.len();
    Ok(if k % 2 == 1 {
        ratios[k / 2]
    } else {
        0.5 * (ratios[k / 2 - 1] + ratios[k / 2])
    })
}

/// Track the iteration on the family 1/((x−2)² + ε²), whose integral is
/// π/ε, for poles a distance ε from the real axis.
///
/// Starts from the quadratic state (a₀, a₁, a₂, b₀) = (4+ε², −4, 1, 1) and
/// returns the distance-to-limit sequence err_0..err_n, where
/// err_k = ((a₀/b₀ − ε)² + (a₁/b₀)² + (a₂/b₀ − ε)²)^{1/2}; the state is
/// renormalized to b₀ = 1 every step. Order 2 uses the closed-form
/// quadratic step; other orders run the full pipeline in float mode.
///
/// Fails with [`Error::PrecisionExhausted`] once err_k sinks below
/// 10^{10−digits}, where rounding noise of the context drowns the signal.
pub fn epsilon_study(
    eps: &Rational,
    order: usize,
    n_steps: usize,
    digits: usize,
) -> Result<Vec<Fp>, Error> {
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidConfig(
            "the pole-distance parameter must be positive".into(),
        ));
    }
    let ctx = FloatCtx::new(digits);
    let eps_f = ctx.from_rational(eps);
    let floor = ctx.pow10(10 - digits as i64);
    let mut state = [
        ctx.from_i64(4).add(&eps_f.mul(&eps_f)),
        ctx.from_i64(-4),
        ctx.from_i64(1),
        ctx.from_i64(1),
    ];
    let mut out = vec![study_err(&state, &eps_f)];
    for step in 1..=n_steps {
        state = if order == 2 {
            quadratic_map(&state)
        } else {
            let img = transform_float(&quadratic_state_to_function(&state), order)?;
            quadratic_state(&img)?
        };
        let b0 = state[3].clone();
        if b0.is_zero() {
            return Err(Error::PrecisionExhausted { digits, step });
        }
        for v in state.iter_mut() {
            *v = v.div(&b0);
        }
        let err = study_err(&state, &eps_f);
        if err.is_zero() || err.cmp(&floor) == Some(Ordering::Less) {
            return Err(Error::PrecisionExhausted { digits, step });
        }
        out.push(err);
    }
    Ok(out)
}

/// Distance of a b₀-normalized quadratic state from its limit (ε, 0, ε).
fn study_err(state: &[Fp; 4], eps: &Fp) -> Fp {
    let d0 = state[0].sub(eps);
    let d1 = state[1].clone();
    let d2 = state[2].sub(eps);
    d0.mul(&d0).add(&d1.mul(&d1)).add(&d2.mul(&d2)).sqrt()
}
