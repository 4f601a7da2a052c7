//! Scalar types: exact rationals with height and continued-fraction tools,
//! and configurable-precision floats (see [`float`]).
//!
//! Rationals are always stored reduced with a positive denominator, so heights
//! and continued fractions are well defined without any extra normalization.

pub mod float;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::Error;

/// Arbitrary-size rational number, kept reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor used heavily in tests: `rat(8, 15)` = 8/15.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer embedded as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Height of a reduced rational u/v: `max(|u|, v)`.
///
/// This is the usual measure of arithmetic size; iteration traces report the
/// maximum height over all coefficients so growth is visible per step.
pub fn height(x: &Rational) -> BigUint {
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    n.max(d).clone()
}

/// Parse `p/q` or a plain integer into a rational.
///
/// Used by the command-line front end; whitespace around the value is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| Error::RationalParse(t.to_string()))
}

/// A finite simple continued fraction `[a0; a1, a2, ...]`.
///
/// Invariant: at least one term, and every term after the first is >= 1.
/// Expansions produced by [`cf_expand`] are canonical: the final term is
/// never 1 unless the value is an integer (the Euclidean algorithm cannot
/// emit a trailing 1, since remainders strictly decrease).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<BigInt>) -> Result<Self, Error> {
        if terms.is_empty() || terms.iter().skip(1).any(|t| t < &BigInt::one()) {
            return Err(Error::InvalidContinuedFraction);
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty term lists
    }
}

/// First `min(k, full length)` terms of the continued fraction of `x`,
/// computed by the Euclidean algorithm (`a0 = floor(x)`, so negative inputs
/// get a negative leading term and positive partial quotients after it).
///
/// `k` is clamped to at least 1 so the integer part is always present.
pub fn cf_expand(x: &Rational, k: usize) -> ContinuedFraction {
    let k = k.max(1);
    let mut terms = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    while terms.len() < k {
        let (q, r) = num.div_mod_floor(&den);
        terms.push(q);
        if r.is_zero() {
            break;
        }
        num = den;
        den = r;
    }
    ContinuedFraction { terms }
}

/// Exact value of a finite continued fraction, folded from the bottom up.
pub fn cf_reconstruct(cf: &ContinuedFraction) -> Rational {
    let mut it = cf.terms.iter().rev();
    let last = it.next().expect("continued fractions are never empty");
    let mut acc = Rational::from_integer(last.clone());
    for t in it {
        acc = Rational::from_integer(t.clone()) + acc.recip();
    }
    acc
}

/// Shortest-prefix convergent of `x` within `tol`: walks the convergents
/// p_i/q_i of the canonical expansion and returns the first one with
/// `|p_i/q_i - x| <= tol`.
///
/// The final convergent equals `x` itself, so the walk always terminates and
/// `tol = 0` returns the input unchanged. Convergent denominators grow
/// monotonically, which gives the height guarantee
/// `height(result) <= height(x)`.
pub fn cf_compress(x: &Rational, tol: &Rational) -> Rational {
    debug_assert!(!tol.is_negative(), "tolerance must be nonnegative");
    let full = cf_expand(x, usize::MAX);
    // Standard convergent recurrence: p_i = a_i p_{i-1} + p_{i-2}, same for q.
    let (mut p_prev, mut p_curr) = (BigInt::one(), BigInt::zero());
    let (mut q_prev, mut q_curr) = (BigInt::zero(), BigInt::one());
    for a in full.terms() {
        let p_next = a * &p_prev + &p_curr;
        let q_next = a * &q_prev + &q_curr;
        p_curr = std::mem::replace(&mut p_prev, p_next);
        q_curr = std::mem::replace(&mut q_prev, q_next);
        let conv = Rational::new(p_prev.clone(), q_prev.clone());
        if (&conv - x).abs() <= *tol {
            return conv;
        }
    }
    // Unreachable: the last convergent is x, and |x - x| = 0 <= tol.
    x.clone()
}
