//! Dense univariate polynomials over interchangeable coefficient rings.
//!
//! Everything downstream (the transformation pipeline, symbolic formula
//! generation, float-mode iteration) is written once against the [`Coeff`]
//! trait and instantiated with exact rationals, tagged floats, or sparse
//! multivariate polynomials. Coefficients are stored in **descending** order
//! of exponent — index 0 is the leading coefficient — matching the indexing
//! used throughout the transformation formulas.

pub mod resultant;
pub mod sturm;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalars::float::Fp;
use crate::scalars::Rational;
use crate::Error;

/// Coefficient contract for polynomial arithmetic.
///
/// Implementors are commutative rings with an exact-division probe and exact
/// embeddings of the integers; `mul_rational` scales by an exact rational
/// (rings where that can fail are simply not used with non-integer scalars).
/// `is_negligible_against` lets inexact rings (floats) declare a value to be
/// rounding noise relative to an anchor; exact rings keep the default, which
/// only accepts true zero.
pub trait Coeff: Clone + std::fmt::Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact (or field) division; `None` when the quotient does not exist.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;
    fn mul_rational(&self, q: &Rational) -> Self;
    fn is_negligible_against(&self, _anchor: &Self) -> bool {
        self.is_zero()
    }
    /// Coarse magnitude rank used to pick comparison anchors (binary
    /// exponent for floats); exact rings have no meaningful rank.
    fn magnitude_rank(&self) -> Option<i64> {
        None
    }
    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if <Rational as Zero>::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Coeff for Fp {
    fn zero() -> Self {
        Fp::zero()
    }
    fn one() -> Self {
        Fp::from_i64(1, 64)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Fp::from_bigint(n, 64)
    }
    fn is_zero(&self) -> bool {
        Fp::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Fp::neg(self)
    }
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Fp::div(self, rhs))
        }
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        Fp::mul_rational(self, q)
    }
    fn is_negligible_against(&self, anchor: &Self) -> bool {
        Fp::is_negligible_against(self, anchor)
    }
    fn magnitude_rank(&self) -> Option<i64> {
        self.exponent().map(|e| e as i64)
    }
}

/// Univariate polynomial with coefficients in descending exponent order.
///
/// The zero polynomial is the empty coefficient vector and reports degree
/// `None` (the usual "degree minus infinity" convention). Construction trims
/// exactly-zero leading coefficients, so `degree`, `leading`, and friends are
/// always meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Polynomial<C> {
    /// Build from descending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => {
                coeffs.drain(..k);
                Polynomial { coeffs }
            }
            None => Polynomial { coeffs: Vec::new() },
        }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![C::one()] }
    }

    pub fn constant(c: C) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn from_i64s(descending: &[i64]) -> Self {
        Polynomial::new(descending.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn from_bigints(descending: &[BigInt]) -> Self {
        Polynomial::new(descending.iter().map(C::from_bigint).collect())
    }

    /// x^k
    pub fn x_power(k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[0] = C::one();
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Descending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> C {
        self.coeffs.first().cloned().unwrap_or_else(C::zero)
    }

    /// Trailing (constant) coefficient; equals `eval(0)`.
    pub fn constant_term(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of x^e (zero when absent).
    pub fn coeff_of(&self, e: usize) -> C {
        match self.degree() {
            Some(d) if e <= d => self.coeffs[d - e].clone(),
            _ => C::zero(),
        }
    }

    /// Descending coefficients padded/read as if the polynomial had the given
    /// degree; needed where formulas index coefficients of a fixed-degree
    /// slot even when leading entries vanish.
    pub fn coeffs_padded(&self, degree: usize) -> Vec<C> {
        (0..=degree).map(|k| self.coeff_of(degree - k)).collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.pick(n, k);
            let b = rhs.pick(n, k);
            out.push(a.add(&b));
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    fn pick(&self, padded_len: usize, k: usize) -> C {
        let skip = padded_len - self.coeffs.len();
        if k < skip {
            C::zero()
        } else {
            self.coeffs[k - skip].clone()
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.mul_rational(q)).collect())
    }

    /// Horner evaluation; `eval(0)` is the trailing coefficient.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        match self.degree() {
            None | Some(0) => Polynomial::zero(),
            Some(d) => Polynomial::new(
                self.coeffs[..d]
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.mul(&C::from_i64((d - k) as i64)))
                    .collect(),
            ),
        }
    }

    /// Long division: `self = q * den + r` with `deg r < deg den`.
    ///
    /// Requires the divisor's leading coefficient to divide exactly at every
    /// step (always true over fields; true for the ring instantiations used
    /// here whenever the division is exact overall).
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self), Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let dd = den.degree().unwrap();
        let lead = den.leading();
        let mut rem = self.coeffs.clone();
        let mut quo: Vec<C> = Vec::new();
        while rem.len() > dd {
            let t = match rem[0].checked_div(&lead) {
                Some(t) => t,
                None => return Err(Error::NonZeroRemainder),
            };
            for (k, dc) in den.coeffs.iter().enumerate() {
                let prod = t.mul(dc);
                rem[k] = rem[k].sub(&prod);
            }
            quo.push(t);
            rem.remove(0); // rem[0] is now exactly t*lead - t*lead
        }
        Ok((Polynomial::new(quo), Polynomial::new(rem)))
    }

    /// Exact quotient `self / den`; the remainder must be zero (or pure
    /// rounding noise relative to the largest coefficient of `self` for
    /// inexact rings).
    pub fn div_exact(&self, den: &Self) -> Result<Self, Error> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            return Ok(q);
        }
        // anchor: the input coefficient with the largest magnitude rank
        let anchor = self
            .coeffs
            .iter()
            .max_by_key(|c| c.magnitude_rank().unwrap_or(i64::MIN))
            .cloned()
            .unwrap_or_else(C::one);
        if r.coeffs().iter().all(|c| c.is_negligible_against(&anchor)) {
            Ok(q)
        } else {
            Err(Error::NonZeroRemainder)
        }
    }
}

impl Polynomial<Rational> {
    /// Monic gcd via the Euclidean algorithm (rational coefficients).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("division over a field");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.mul_rational(&lead.recip())
    }

    /// Joint rescaling of a (numerator, denominator) pair by one rational
    /// factor so that all coefficients become integers with overall content 1
    /// and the denominator's leading coefficient is positive. Returns the
    /// rescaled pair and the factor `t` that was applied (`new = t * old`).
    pub fn normalize_pair_to_integer(
        num: &Self,
        den: &Self,
    ) -> (Self, Self, Rational) {
        use num_integer::Integer;
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
        }
        if numer_gcd.is_zero() {
            // both polynomials are zero; nothing to scale
            return (num.clone(), den.clone(), Rational::from_integer(BigInt::one()));
        }
        let mut t = Rational::new(denom_lcm, numer_gcd);
        if den.leading().mul_rational(&t).is_negative() {
            t = -t;
        }
        (num.mul_rational(&t), den.mul_rational(&t), t)
    }
}

impl<C: Coeff> std::fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree().unwrap();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = d - k;
            match e {
                0 => write!(f, "{:?}", c)?,
                1 => write!(f, "{:?}*x", c)?,
                _ => write!(f, "{:?}*x^{}", c, e)?,
            }
        }
        Ok(())
    }
}
