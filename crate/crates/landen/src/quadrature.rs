//! Baselines and verification oracles: everything the iteration is checked
//! against lives here, independent of the coefficient map itself.
//!
//! The centerpiece is an exact change of variables folding the real line
//! onto the unit interval,
//!
//! ```text
//!   ∫_R F(x) dx  =  ∫_0^1 [ F(t/(1-t)) + F(-t/(1-t)) ] / (1-t)^2 dt,
//! ```
//!
//! which splits the line at the origin and maps each half onto [0,1). For a
//! rational integrand both substituted pieces are again rational in `t` (the
//! powers of `1-t` clear), so the bracket collapses to a single quotient of
//! polynomials whose integral over [0,1] equals the original integral —
//! exactly, not approximately. On the folded integrand we offer the
//! composite trapezoidal rule (the classical baseline), a closed form for
//! quadratic denominators, and an adaptive Gauss–Legendre oracle that
//! certifies how many digits its last two refinement levels agreed to.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::scalars::float::{FloatCtx, Fp};
use crate::scalars::Rational;
use crate::transform::RationalFunction;
use crate::upoly::sturm::real_root_count;
use crate::upoly::Polynomial;
use crate::Error;

/// The image of an integrand under the half-line fold: a rational function
/// `g` with ∫₀¹ g(t) dt equal to the integral of the source over all of ℝ.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldedIntegrand {
    pub g: RationalFunction<Rational>,
}

/// `(1-t)^cleared · poly(±t/(1-t))`, expanded as a polynomial in `t`.
///
/// With `mirror` set the substitution is `x = -t/(1-t)` (the left half-line),
/// which flips the sign of every odd-index coefficient.
fn clear_half_line(
    poly: &Polynomial<Rational>,
    cleared: usize,
    mirror: bool,
) -> Polynomial<Rational> {
    let one_minus_t = Polynomial::from_i64s(&[-1, 1]);
    let mut pw = Vec::with_capacity(cleared + 1);
    pw.push(Polynomial::one());
    for k in 1..=cleared {
        pw.push(pw[k - 1].mul(&one_minus_t));
    }
    let mut acc = Polynomial::zero();
    for i in 0..=cleared {
        let mut c = poly.coeff_of(i);
        if mirror && i % 2 == 1 {
            c = -c;
        }
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&Polynomial::x_power(i).mul(&pw[cleared - i]).scale(&c));
    }
    acc
}

/// Fold `f` onto the unit interval.
///
/// Each substituted piece clears to polynomials after multiplying through by
/// `(1-t)^p`; the two pieces are combined over the common denominator, the
/// polynomial gcd of the result is cancelled exactly, and the pair is jointly
/// rescaled to integer coefficients (one common factor, so the value of the
/// quotient — and hence the integral — is untouched). The degree gap
/// `deg B ≤ p-2` makes `t = 1` a removable point: the cleared denominators
/// take the value of `f`'s leading coefficient there, which is nonzero.
pub fn fold(f: &RationalFunction<Rational>) -> Result<FoldedIntegrand, Error> {
    let p = f.validate()?;
    let ap = clear_half_line(&f.den, p, false);
    let am = clear_half_line(&f.den, p, true);
    let bp = clear_half_line(&f.num, p - 2, false);
    let bm = clear_half_line(&f.num, p - 2, true);
    let mut num = bp.mul(&am).add(&bm.mul(&ap));
    let mut den = ap.mul(&am);
    let common = num.gcd(&den);
    if common.degree().unwrap_or(0) > 0 {
        num = num.div_exact(&common)?;
        den = den.div_exact(&common)?;
    }
    let (num, den, _) = Polynomial::normalize_pair_to_integer(&num, &den);
    Ok(FoldedIntegrand {
        g: RationalFunction::new(num, den),
    })
}

/// Composite trapezoidal approximation of ∫₀¹ g with `n` uniform panels,
/// carried out with `digits` decimal digits of working precision.
pub fn trapezoid(g: &FoldedIntegrand, n: usize, digits: usize) -> Fp {
    assert!(n >= 1, "the rule needs at least one panel");
    let ctx = FloatCtx::new(digits);
    let gf = g.g.to_float(ctx.bits());
    let eval = |t: &Fp| gf.num.eval(t).div(&gf.den.eval(t));
    let nf = ctx.from_i64(n as i64);
    let ends = eval(&ctx.from_i64(0)).add(&eval(&ctx.from_i64(1)));
    let mut sum = ends.div(&ctx.from_i64(2));
    for i in 1..n {
        sum = sum.add(&eval(&ctx.from_i64(i as i64).div(&nf)));
    }
    sum.div(&nf)
}

/// The composite sum with its interior upper bound off by one — nodes
/// `1..=n-2` instead of `1..=n-1` — so the sample at `t = (n-1)/n` is
/// dropped.
///
/// Tabulated trapezoid baselines are sometimes produced by exactly this
/// slip, and because the folded integrand is smallest near `t = 1` the
/// damage is subtle: the error still scales like n⁻². Kept alongside the
/// correct [`trapezoid`] so such tables can be reproduced digit-for-digit;
/// never use it for anything else.
pub fn trapezoid_off_by_one(g: &FoldedIntegrand, n: usize, digits: usize) -> Fp {
    assert!(n >= 2, "the clipped rule needs at least two panels");
    let ctx = FloatCtx::new(digits);
    let gf = g.g.to_float(ctx.bits());
    let eval = |t: &Fp| gf.num.eval(t).div(&gf.den.eval(t));
    let nf = ctx.from_i64(n as i64);
    let penultimate = eval(&ctx.from_i64(n as i64 - 1).div(&nf));
    trapezoid(g, n, digits).sub(&penultimate.div(&nf))
}

/// The exact value of ∫ dx / (a2·x² + a1·x + a0) over ℝ, namely
/// `2π / √(4·a0·a2 − a1²)`, rendered at `digits` digits.
///
/// Requires a positive-definite denominator: `4·a0·a2 − a1² > 0` and
/// `a2 > 0`. A denominator with real roots is rejected with their count; a
/// negative-definite one (finite but sign-flipped integral) is outside the
/// contract and rejected as a configuration error.
pub fn quadratic_closed_form(
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
    digits: usize,
) -> Result<Fp, Error> {
    let four = Rational::from_integer(BigInt::from(4));
    let disc = &(&four * &(a0 * a2)) - &(a1 * a1);
    if !disc.is_positive() {
        let den = Polynomial::new(vec![a0.clone(), a1.clone(), a2.clone()]);
        return Err(Error::RealPole(real_root_count(&den)));
    }
    if !a2.is_positive() {
        return Err(Error::InvalidConfig(
            "closed form needs a positive leading coefficient".into(),
        ));
    }
    let ctx = FloatCtx::new(digits);
    let root = ctx.from_rational(&disc).sqrt();
    Ok(ctx.from_i64(2).mul(&ctx.pi()).div(&root))
}

/// `(P_k(x), P_k'(x))` by the three-term recurrence, with the derivative
/// from `(x² − 1)·P_k'(x) = k·(x·P_k(x) − P_{k-1}(x))` — stable away from
/// the interval endpoints, which is where we evaluate.
fn legendre_pair(k: usize, x: &Fp, ctx: &FloatCtx) -> (Fp, Fp) {
    let mut prev = ctx.from_i64(1);
    let mut cur = x.clone();
    if k == 0 {
        return (prev, ctx.from_i64(0));
    }
    for j in 1..k {
        let a = x.mul(&cur).mul(&ctx.from_i64(2 * j as i64 + 1));
        let b = prev.mul(&ctx.from_i64(j as i64));
        let next = a.sub(&b).div(&ctx.from_i64(j as i64 + 1));
        prev = cur;
        cur = next;
    }
    let num = x.mul(&cur).sub(&prev).mul(&ctx.from_i64(k as i64));
    let den = x.mul(x).sub(&ctx.from_i64(1));
    (cur, num.div(&den))
}

/// Gauss–Legendre nodes and weights of size `k` on [−1, 1] at `digits`
/// decimal digits.
///
/// Nodes are the roots of the degree-k Legendre polynomial, found by Newton
/// iteration from the seeds `cos(π(4i+3)/(4k+2))`; weights are
/// `2 / ((1 − x²)·P_k'(x)²)`. Roots come in ± pairs, computed once and
/// mirrored, so odd powers cancel exactly in the quadrature sum.
pub fn gauss_legendre(k: usize, digits: usize) -> (Vec<Fp>, Vec<Fp>) {
    assert!(k >= 1, "a rule needs at least one node");
    let ctx = FloatCtx::new(digits);
    let target = ctx.pow10(-(digits as i64 - 2));
    let mut nodes = Vec::with_capacity(k);
    let mut weights = Vec::with_capacity(k);
    for i in 0..k.div_ceil(2) {
        let x = if 2 * i + 1 == k {
            ctx.from_i64(0)
        } else {
            let seed = Rational::new(BigInt::from(4 * i as i64 + 3), BigInt::from(4 * k as i64 + 2));
            let mut x = ctx.cos(&ctx.pi().mul(&ctx.from_rational(&seed)));
            for _ in 0..300 {
                let (pk, dpk) = legendre_pair(k, &x, &ctx);
                let dx = pk.div(&dpk);
                x = x.sub(&dx);
                if dx.abs().cmp(&target) != Some(Ordering::Greater) {
                    break;
                }
            }
            x
        };
        let (_, dpk) = legendre_pair(k, &x, &ctx);
        let denom = ctx.from_i64(1).sub(&x.mul(&x)).mul(&dpk.mul(&dpk));
        let w = ctx.from_i64(2).div(&denom);
        nodes.push(x.clone());
        weights.push(w.clone());
        if 2 * i + 1 != k {
            nodes.push(x.neg());
            weights.push(w);
        }
    }
    (nodes, weights)
}

/// An oracle value together with the number of decimal digits to which its
/// last two refinement levels agreed.
#[derive(Debug, Clone)]
pub struct OracleValue {
    pub value: Fp,
    pub certified_digits: f64,
}

/// Panel-splitting depth cap for the adaptive oracle.
const DEPTH_CAP: usize = 40;

struct PanelCtx<'a> {
    gf: &'a RationalFunction<Fp>,
    ctx: &'a FloatCtx,
    nodes: &'a [Fp],
    weights: &'a [Fp],
    tol: Fp,
}

impl PanelCtx<'_> {
    fn eval(&self, t: &Fp) -> Fp {
        self.gf.num.eval(t).div(&self.gf.den.eval(t))
    }

    /// One Gauss–Legendre estimate of ∫ₐᵇ g.
    fn panel(&self, a: &Fp, b: &Fp) -> Fp {
        let two = self.ctx.from_i64(2);
        let mid = a.add(b).div(&two);
        let rad = b.sub(a).div(&two);
        let mut sum = self.ctx.from_i64(0);
        for (x, w) in self.nodes.iter().zip(self.weights) {
            let t = mid.add(&rad.mul(x));
            sum = sum.add(&w.mul(&self.eval(&t)));
        }
        sum.mul(&rad)
    }

    /// Bisect until the one-piece and two-piece estimates of each panel
    /// agree within the width-proportional budget; returns the sums of the
    /// accepted parents and of their refinements (coarse, fine).
    fn adapt(&self, a: &Fp, b: &Fp, whole: &Fp, depth: usize) -> Result<(Fp, Fp), Error> {
        let mid = a.add(b).div(&self.ctx.from_i64(2));
        let left = self.panel(a, &mid);
        let right = self.panel(&mid, b);
        let split = left.add(&right);
        let budget = self.tol.mul(&b.sub(a));
        if whole.sub(&split).abs().cmp(&budget) != Some(Ordering::Greater) {
            return Ok((whole.clone(), split));
        }
        if depth >= DEPTH_CAP {
            return Err(Error::NoConvergence);
        }
        let (cl, fl) = self.adapt(a, &mid, &left, depth + 1)?;
        let (cr, fr) = self.adapt(&mid, b, &right, depth + 1)?;
        Ok((cl.add(&cr), fl.add(&fr)))
    }
}

/// Integrate `f` over ℝ independently of the iteration: fold to [0,1] and
/// apply Gauss–Legendre panels under adaptive bisection until every panel's
/// two refinement levels agree within a budget of about `digits − 9` digits
/// relative to the coarse whole-interval estimate.
///
/// The returned certificate is the measured agreement between the aggregate
/// coarse and fine sums; when it falls short of `digits − 10` — or when a
/// panel would need splitting beyond depth 40, as happens with poles hugging
/// the real axis — the oracle refuses the value with `NoConvergence`.
pub fn oracle_integral(f: &RationalFunction<Rational>, digits: usize) -> Result<OracleValue, Error> {
    let folded = fold(f)?;
    let ctx = FloatCtx::new(digits);
    let gf = folded.g.to_float(ctx.bits());
    let (nodes, weights) = gauss_legendre(16 + digits / 2, digits);
    let mut pc = PanelCtx {
        gf: &gf,
        ctx: &ctx,
        nodes: &nodes,
        weights: &weights,
        tol: ctx.from_i64(0),
    };
    let zero = ctx.from_i64(0);
    let one = ctx.from_i64(1);
    let whole = pc.panel(&zero, &one);
    let scale = whole.abs().max(&ctx.pow10(-(digits as i64) / 2));
    pc.tol = scale.mul(&ctx.pow10(-(digits as i64 - 9)));
    let (coarse, fine) = pc.adapt(&zero, &one, &whole, 0)?;
    let certified = ctx.digits_agreed(&coarse, &fine).unwrap_or(0.0);
    if certified < digits.saturating_sub(10) as f64 {
        return Err(Error::NoConvergence);
    }
    Ok(OracleValue {
        value: fine,
        certified_digits: certified,
    })
}
