//! The integral-preserving coefficient map on rational functions.
//!
//! For an even-degree denominator `A` (degree p, no real roots) and a
//! numerator `B` of degree at most p-2, one step of order m produces a new
//! pair `(J, H)` of degrees (at most p-2, p) with
//!
//! ```text
//!   integral of B/A over R  =  integral of J/H over R,
//! ```
//!
//! computed purely on coefficients:
//!
//! 1. `H(x) = res_z(A(z), P_m(z) - x Q_m(z))` — the denominator image, via
//!    the cotangent pair and an evaluation/interpolation resultant;
//! 2. `E = sum_i h_i P_m^(p-i) Q_m^i` — clearing the substitution;
//! 3. `Z = E / A` — exact by construction;
//! 4. `C = B * Z` — numerator carried through the substitution;
//! 5.-7. `J` — a closed-form recombination of `C`'s coefficients through the
//!    triangular weights [`t_coeff`] and the even/odd kernels [`m1_weight`],
//!    [`m2_weight`], scaled by `1/2^s`.
//!
//! Iterating the step drives the integrand toward `phi / (x^2 + 1)^(p/2)`
//! whose integral is read off directly; the constant-coefficient ratio
//! converges to `integral / pi` with order m.
//!
//! Everything here is generic over the coefficient ring, so the same code
//! runs exact (rational), float, and fully symbolic (multivariate) modes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cotangent::{binomial, CotangentPair};
use crate::scalars::float::Fp;
use crate::scalars::Rational;
use crate::upoly::resultant::resultant_linear_pencil;
use crate::upoly::sturm::real_root_count;
use crate::upoly::{Coeff, Polynomial};
use crate::Error;

/// A quotient `num / den` of univariate polynomials (numerator on top).
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction<C: Coeff> {
    pub num: Polynomial<C>,
    pub den: Polynomial<C>,
}

impl<C: Coeff> RationalFunction<C> {
    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Self {
        RationalFunction { num, den }
    }
}

impl RationalFunction<Rational> {
    /// Check membership in the class the map handles: even denominator
    /// degree >= 2, nonzero trailing coefficient, numerator degree at most
    /// p-2, and no real poles (certified by a Sturm chain). Returns p.
    pub fn validate(&self) -> Result<usize, Error> {
        let p = self.den.degree().ok_or(Error::ZeroDenominator)?;
        if p < 2 || p % 2 == 1 {
            return Err(Error::OddDegree(p));
        }
        if Coeff::is_zero(&self.den.constant_term()) {
            return Err(Error::ZeroTrailingCoeff);
        }
        if let Some(dn) = self.num.degree() {
            if dn > p - 2 {
                return Err(Error::DegreeGap { num: dn, den: p });
            }
        }
        match real_root_count(&self.den) {
            0 => Ok(p),
            n => Err(Error::RealPole(n)),
        }
    }

    /// Convert to float coefficients at `prec` bits.
    pub fn to_float(&self, prec: usize) -> RationalFunction<Fp> {
        let conv = |p: &Polynomial<Rational>| {
            Polynomial::new(
                p.coeffs()
                    .iter()
                    .map(|c| Fp::from_rational(c, prec))
                    .collect(),
            )
        };
        RationalFunction::new(conv(&self.num), conv(&self.den))
    }
}

/// Derived sizes of one step at denominator degree p and order m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineDims {
    pub p: usize,
    pub m: usize,
    /// degree of the exact quotient Z
    pub r: usize,
    /// degree slot of the product C
    pub s: usize,
    /// p/2
    pub nu: usize,
    /// s/2
    pub lambda: usize,
}

/// `r = p(m-1)`, `s = mp - 2`, `nu = p/2`, `lambda = (mp-2)/2`.
pub fn dims(p: usize, m: usize) -> PipelineDims {
    PipelineDims {
        p,
        m,
        r: p * (m - 1),
        s: m * p - 2,
        nu: p / 2,
        lambda: (m * p - 2) / 2,
    }
}

/// Step 1: the denominator image `H(x) = res_z(A(z), P_m(z) - x Q_m(z))`,
/// degree p in x for any valid denominator.
pub fn resultant_h<C: Coeff>(a: &Polynomial<C>, pair: &CotangentPair) -> Polynomial<C> {
    resultant_linear_pencil(a, pair.p_coeffs(), pair.q_coeffs())
}

/// Step 2: `E = sum_{i=0}^{p} h_i P_m^(p-i) Q_m^i`, degree mp.
///
/// The integer polynomial powers are computed exactly over the integers and
/// embedded once, so no precision is spent on combinatorics in float mode.
pub fn expansion_e<C: Coeff>(
    h: &Polynomial<C>,
    pair: &CotangentPair,
    d: &PipelineDims,
) -> Polynomial<C> {
    let hp = h.coeffs_padded(d.p);
    let p_pows = int_poly_powers(pair.p_coeffs(), d.p);
    let q_pows = int_poly_powers(pair.q_coeffs(), d.p);
    let mut by_desc: Vec<C> = vec![C::zero(); d.m * d.p + 1];
    for (i, hi) in hp.iter().enumerate() {
        if hi.is_zero() {
            continue;
        }
        let u = int_poly_mul(&p_pows[d.p - i], &q_pows[i]); // degree mp - i
        let shift = by_desc.len() - u.len(); // align exponents
        for (k, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let term = hi.mul(&C::from_bigint(cu));
            by_desc[shift + k] = by_desc[shift + k].add(&term);
        }
    }
    Polynomial::new(by_desc)
}

/// Step 3: `Z = E / A`, exact of degree r (the division is an identity of
/// the construction; a genuinely nonzero remainder signals an invalid input).
pub fn quotient_z<C: Coeff>(e: &Polynomial<C>, a: &Polynomial<C>) -> Result<Polynomial<C>, Error> {
    e.div_exact(a)
}

/// Step 4: `C = B * Z`, returned as the padded coefficient list of the
/// degree-s slot (index k holds the coefficient of `x^(s-k)`, so indexing
/// stays aligned even when B's leading coefficient vanishes).
pub fn product_c<C: Coeff>(
    b: &Polynomial<C>,
    z: &Polynomial<C>,
    d: &PipelineDims,
) -> Vec<C> {
    b.mul(z).coeffs_padded(d.s)
}

/// The triangular weight `T_x(a, b) = sum_{j=0}^{x} (-1)^(a-x+j) C(a, x-j) C(b, j)`.
///
/// Out-of-range binomials vanish, so the effective support is small; x < 0
/// gives an empty sum.
pub fn t_coeff(x: i64, a: i64, b: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=x {
        let c1 = binomial(a, x - j);
        if c1.is_zero() {
            continue;
        }
        let c2 = binomial(b, j);
        if c2.is_zero() {
            continue;
        }
        let term = c1 * c2;
        if (a - x + j).rem_euclid(2) == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Even-exponent kernel: the rational weight that multiplies `c_{2j}` in the
/// coefficient of `x^{2 gamma}` of `2^s J`, or `None` when the term drops out.
///
/// `2 alpha - beta >= alpha >= 1` inside every summation range, so the
/// denominator never vanishes.
pub fn m1_weight(
    j: i64,
    alpha: i64,
    beta: i64,
    gamma: i64,
    d: &PipelineDims,
) -> Option<Rational> {
    let (lambda, s, m, nu) = (d.lambda as i64, d.s as i64, d.m as i64, d.nu as i64);
    let bracket = t_coeff(lambda + alpha * m, 2 * j, s - 2 * j)
        + t_coeff(lambda - alpha * m, 2 * j, s - 2 * j);
    if bracket.is_zero() {
        return None;
    }
    let pick = binomial(nu - alpha - 1 + beta, gamma);
    if pick.is_zero() {
        return None;
    }
    let numer = BigInt::from(alpha)
        * binomial(2 * alpha - beta, beta)
        * pick
        * (BigInt::one() << (2 * (alpha - beta)) as u32)
        * bracket;
    let mut w = Rational::new(numer, BigInt::from(2 * alpha - beta));
    if (j + alpha - beta).rem_euclid(2) == 1 {
        w = -w;
    }
    Some(w)
}

/// Odd-exponent kernel: the weight that multiplies `c_{2j+1}` in the
/// coefficient of `x^{2 gamma + 1}` of `2^s J`, or `None` when it drops out.
pub fn m2_weight(
    j: i64,
    alpha: i64,
    beta: i64,
    gamma: i64,
    d: &PipelineDims,
) -> Option<Rational> {
    let (lambda, s, m, nu) = (d.lambda as i64, d.s as i64, d.m as i64, d.nu as i64);
    let bracket = t_coeff(lambda + alpha * m, 2 * j + 1, s - 2 * j - 1)
        - t_coeff(lambda - alpha * m, 2 * j + 1, s - 2 * j - 1);
    if bracket.is_zero() {
        return None;
    }
    let picks = binomial(alpha + beta, 2 * beta + 1) * binomial(nu - 2 - beta, gamma);
    if picks.is_zero() {
        return None;
    }
    let numer = picks * (BigInt::one() << (2 * beta + 1) as u32) * bracket;
    let mut w = Rational::from_integer(numer);
    if (j + beta).rem_euclid(2) == 1 {
        w = -w;
    }
    Some(w)
}

/// Steps 5-7: assemble the numerator image `J` (degree at most p-2) from the
/// padded coefficients of `C`.
pub fn numerator_j<C: Coeff>(c: &[C], d: &PipelineDims) -> Polynomial<C> {
    let (nu, lambda, s) = (d.nu as i64, d.lambda as i64, d.s as i64);
    debug_assert_eq!(c.len() as i64, s + 1);
    let mut by_exp: Vec<C> = vec![C::zero(); d.p - 1]; // exponents 0 ..= p-2

    // inner sum shared by every even exponent
    let mut s1 = C::zero();
    for j in 0..=lambda {
        let t = t_coeff(lambda, 2 * j, s - 2 * j);
        if t.is_zero() {
            continue;
        }
        let signed = if j % 2 == 1 { -t } else { t };
        s1 = s1.add(&c[(2 * j) as usize].mul_rational(&Rational::from_integer(signed)));
    }

    for gamma in 0..=nu - 1 {
        let mut acc = s1.mul_rational(&Rational::from_integer(binomial(nu - 1, gamma)));
        for j in 0..=lambda {
            let cj = &c[(2 * j) as usize];
            if cj.is_zero() {
                continue;
            }
            for alpha in 1..=nu - 1 - gamma {
                for beta in 0..=alpha {
                    if let Some(w) = m1_weight(j, alpha, beta, gamma, d) {
                        acc = acc.add(&cj.mul_rational(&w));
                    }
                }
            }
            if gamma >= 1 {
                for alpha in (nu - gamma).max(1)..=nu - 1 {
                    for beta in alpha - nu + gamma + 1..=alpha {
                        if let Some(w) = m1_weight(j, alpha, beta, gamma, d) {
                            acc = acc.add(&cj.mul_rational(&w));
                        }
                    }
                }
            }
        }
        by_exp[(2 * gamma) as usize] = acc;
    }

    for gamma in 0..=nu - 2 {
        let mut acc = C::zero();
        for j in 0..=lambda - 1 {
            let cj = &c[(2 * j + 1) as usize];
            if cj.is_zero() {
                continue;
            }
            for alpha in 1..=nu - 1 - gamma {
                for beta in 0..=alpha - 1 {
                    if let Some(w) = m2_weight(j, alpha, beta, gamma, d) {
                        acc = acc.add(&cj.mul_rational(&w));
                    }
                }
            }
            if gamma >= 1 {
                for alpha in (nu - gamma).max(1)..=nu - 1 {
                    for beta in 0..=alpha - 1 {
                        if let Some(w) = m2_weight(j, alpha, beta, gamma, d) {
                            acc = acc.add(&cj.mul_rational(&w));
                        }
                    }
                }
            }
        }
        by_exp[(2 * gamma + 1) as usize] = acc;
    }

    let half_pow = Rational::new(BigInt::one(), BigInt::one() << d.s as u32);
    let desc: Vec<C> = by_exp
        .into_iter()
        .rev()
        .map(|x| x.mul_rational(&half_pow))
        .collect();
    Polynomial::new(desc)
}

/// One raw step: `(J, H)` with no normalization applied.
///
/// Precondition: the input shape is structurally sound (even denominator
/// degree, numerator degree within bounds); real-pole *validation* is the
/// caller's job and is deliberately not repeated per step.
pub fn transform_raw<C: Coeff>(
    f: &RationalFunction<C>,
    m: usize,
) -> Result<(Polynomial<C>, Polynomial<C>), Error> {
    let pair = CotangentPair::build(m)?;
    let p = f.den.degree().ok_or(Error::ZeroDenominator)?;
    if p < 2 || p % 2 == 1 {
        return Err(Error::OddDegree(p));
    }
    if let Some(dn) = f.num.degree() {
        if dn > p - 2 {
            return Err(Error::DegreeGap { num: dn, den: p });
        }
    }
    let d = dims(p, m);
    let h = resultant_h(&f.den, &pair);
    let e = expansion_e(&h, &pair, &d);
    let z = quotient_z(&e, &f.den)?;
    let c = product_c(&f.num, &z, &d);
    let j = numerator_j(&c, &d);
    Ok((j, h))
}

/// How to rescale the raw pair after a step in exact mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalize {
    /// Divide the 2p-1 coefficients by their joint content: all integer,
    /// overall gcd 1, denominator leading coefficient positive.
    Gcd,
    /// As `Gcd`, then divide through by the denominator's leading
    /// coefficient (the natural choice for quadratic denominators, where it
    /// keeps the classical iteration's printed form).
    Monic,
}

/// One exact-mode step with normalization.
pub fn transform(
    f: &RationalFunction<Rational>,
    m: usize,
    norm: Normalize,
) -> Result<RationalFunction<Rational>, Error> {
    let (j, h) = transform_raw(f, m)?;
    let (num, den, _) = Polynomial::normalize_pair_to_integer(&j, &h);
    match norm {
        Normalize::Gcd => Ok(RationalFunction::new(num, den)),
        Normalize::Monic => {
            let inv = den.leading().recip();
            Ok(RationalFunction::new(
                num.mul_rational(&inv),
                den.mul_rational(&inv),
            ))
        }
    }
}

/// One float-mode step; the image is always made monic (dividing by the
/// leading coefficient), which keeps magnitudes bounded across iterations.
pub fn transform_float(
    f: &RationalFunction<Fp>,
    m: usize,
) -> Result<RationalFunction<Fp>, Error> {
    let (j, h) = transform_raw(f, m)?;
    let lead = h.leading();
    let num = Polynomial::new(j.coeffs().iter().map(|c| c.div(&lead)).collect());
    let den = Polynomial::new(h.coeffs().iter().map(|c| c.div(&lead)).collect());
    Ok(RationalFunction::new(num, den))
}

/// The closed-form step for quadratic denominators, in **ascending**
/// (constant-first) state order `(a0, a1, a2, b0)` for
/// `b0 / (a2 x^2 + a1 x + a0)`:
///
/// ```text
/// (a0, a1, a2, b0) -> ((a0-a1+a2)(a0+a1+a2), 2 a1 (a0-a2), 4 a0 a2, 2 b0 (a0+a2))
/// ```
///
/// This is exactly the order-2 raw step specialized to p = 2; the adapter
/// functions below translate to and from the descending convention used by
/// [`RationalFunction`].
pub fn quadratic_map<C: Coeff>(state: &[C; 4]) -> [C; 4] {
    let [a0, a1, a2, b0] = state;
    let sum = a0.add(a1).add(a2);
    let alt = a0.sub(a1).add(a2);
    let two = C::from_i64(2);
    let four = C::from_i64(4);
    [
        alt.mul(&sum),
        two.mul(&a1.mul(&a0.sub(a2))),
        four.mul(&a0.mul(a2)),
        two.mul(&b0.mul(&a0.add(a2))),
    ]
}

/// Descending `b0 / (a2 x^2 + a1 x + a0)` to the ascending quadratic state.
pub fn quadratic_state<C: Coeff>(f: &RationalFunction<C>) -> Result<[C; 4], Error> {
    match f.den.degree() {
        Some(2) => {}
        Some(d) => return Err(Error::OddDegree(d)),
        None => return Err(Error::ZeroDenominator),
    }
    if let Some(dn) = f.num.degree() {
        if dn > 0 {
            return Err(Error::DegreeGap { num: dn, den: 2 });
        }
    }
    Ok([
        f.den.coeff_of(0),
        f.den.coeff_of(1),
        f.den.coeff_of(2),
        f.num.coeff_of(0),
    ])
}

/// Ascending quadratic state back to a descending rational function.
pub fn quadratic_state_to_function<C: Coeff>(state: &[C; 4]) -> RationalFunction<C> {
    let [a0, a1, a2, b0] = state.clone();
    RationalFunction::new(
        Polynomial::new(vec![b0]),
        Polynomial::new(vec![a2, a1, a0]),
    )
}

/// Multiply two descending integer coefficient vectors.
fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Powers 0..=max of a descending integer coefficient vector.
fn int_poly_powers(a: &[BigInt], max: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(vec![BigInt::one()]);
    for k in 1..=max {
        let next = int_poly_mul(&out[k - 1], a);
        out.push(next);
    }
    out
}
