//! Configurable-precision floating point on top of a binary big-float core.
//!
//! [`Fp`] bundles a value with its working precision in bits; arithmetic runs
//! at the larger operand precision, so precision chosen at the inputs flows
//! through a whole computation without extra plumbing. [`FloatCtx`] fixes a
//! decimal digit count for a run and owns the shared constants cache, exact
//! rational conversion, and decimal parsing/rendering.
//!
//! Integers embed *exactly* whatever their size (the mantissa is widened to
//! the full bit length), so combinatorial factors never lose bits; rounding
//! happens only in genuinely inexact operations.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;

use super::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Headroom added on top of the bits needed for the requested decimal digits.
const GUARD_BITS: usize = 32;

/// Mantissa bits needed to honour `digits` decimal digits, plus guard room.
pub fn digits_to_bits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
}

/// A floating-point value tagged with its working precision (in bits).
#[derive(Debug, Clone)]
pub struct Fp {
    v: BigFloat,
    prec: usize,
}

impl Fp {
    pub fn zero() -> Self {
        Fp { v: BigFloat::from_i64(0, 64), prec: 64 }
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        let prec = prec.max(64);
        Fp { v: BigFloat::from_i64(n, prec), prec }
    }

    /// Exact embedding of an arbitrary-size natural number: the magnitude is
    /// shifted to a whole number of 64-bit words and installed as the mantissa
    /// with exponent equal to the bit length.
    pub fn from_biguint(mag: &BigUint, prec_floor: usize) -> Self {
        if mag.is_zero() {
            let mut z = Fp::zero();
            z.prec = prec_floor.max(64);
            return z;
        }
        let bitlen = mag.bits() as usize;
        let shift = (64 - (bitlen % 64)) % 64;
        let shifted = mag << shift;
        let limbs = shifted.to_u64_digits();
        let v = BigFloat::from_words(&limbs, Sign::Pos, bitlen as i32);
        let prec = prec_floor.max(limbs.len() * 64).max(64);
        Fp { v, prec }
    }

    pub fn from_bigint(n: &BigInt, prec_floor: usize) -> Self {
        let f = Fp::from_biguint(n.magnitude(), prec_floor);
        if n.is_negative() { f.neg() } else { f }
    }

    /// Rounded value of an exact rational at `prec` bits.
    pub fn from_rational(x: &Rational, prec: usize) -> Self {
        let prec = prec.max(64);
        let num = Fp::from_bigint(x.numer(), 64);
        let den = Fp::from_biguint(x.denom().magnitude(), 64);
        Fp { v: num.v.div(&den.v, prec, RM), prec }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn raw(&self) -> &BigFloat {
        &self.v
    }

    pub fn from_raw(v: BigFloat, prec: usize) -> Self {
        Fp { v, prec }
    }

    fn join(&self, rhs: &Fp) -> usize {
        self.prec.max(rhs.prec)
    }

    pub fn add(&self, rhs: &Fp) -> Fp {
        let p = self.join(rhs);
        Fp { v: self.v.add(&rhs.v, p, RM), prec: p }
    }

    pub fn sub(&self, rhs: &Fp) -> Fp {
        let p = self.join(rhs);
        Fp { v: self.v.sub(&rhs.v, p, RM), prec: p }
    }

    pub fn mul(&self, rhs: &Fp) -> Fp {
        let p = self.join(rhs);
        Fp { v: self.v.mul(&rhs.v, p, RM), prec: p }
    }

    pub fn div(&self, rhs: &Fp) -> Fp {
        let p = self.join(rhs);
        Fp { v: self.v.div(&rhs.v, p, RM), prec: p }
    }

    pub fn neg(&self) -> Fp {
        Fp { v: self.v.neg(), prec: self.prec }
    }

    pub fn abs(&self) -> Fp {
        if self.is_negative() { self.neg() } else { self.clone() }
    }

    pub fn sqrt(&self) -> Fp {
        Fp { v: self.v.sqrt(self.prec, RM), prec: self.prec }
    }

    /// Multiply by an exact rational (numerator and denominator are embedded
    /// exactly; one rounded division at the end).
    pub fn mul_rational(&self, q: &Rational) -> Fp {
        let num = Fp::from_bigint(q.numer(), 64);
        let den = Fp::from_biguint(q.denom().magnitude(), 64);
        let wide = self.prec + 64;
        let t = self.v.mul(&num.v, wide, RM);
        Fp { v: t.div(&den.v, self.prec, RM), prec: self.prec }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        matches!(self.v.sign(), Some(Sign::Neg)) && !self.v.is_zero()
    }

    pub fn cmp(&self, rhs: &Fp) -> Option<Ordering> {
        self.v.cmp(&rhs.v).map(|s| s.cmp(&0))
    }

    /// Binary exponent e with |x| in [2^(e-1), 2^e); None for zero/NaN.
    pub fn exponent(&self) -> Option<i32> {
        if self.v.is_zero() || self.v.is_nan() {
            None
        } else {
            self.v.exponent()
        }
    }

    /// Cheap log10 estimate from the binary exponent alone (within ~0.31).
    pub fn approx_log10(&self) -> Option<f64> {
        self.exponent()
            .map(|e| (e as f64 - 0.5) * std::f64::consts::LOG10_2)
    }

    /// True when |self| <= |anchor| * 2^-(working precision - 16): the value
    /// is indistinguishable from rounding noise on the scale of `anchor`.
    pub fn is_negligible_against(&self, anchor: &Fp) -> bool {
        if self.is_zero() {
            return true;
        }
        let (Some(se), Some(ae)) = (self.exponent(), anchor.exponent()) else {
            return false;
        };
        let margin = self.prec.min(anchor.prec).saturating_sub(16) as i64;
        (se as i64) <= (ae as i64) - margin
    }

    pub fn max(&self, rhs: &Fp) -> Fp {
        match self.cmp(rhs) {
            Some(Ordering::Less) => rhs.clone(),
            _ => self.clone(),
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

/// Shared state for a float-mode run: decimal digit count, derived bit
/// precision, and the transcendental-constants cache.
///
/// Not `Sync` (the cache sits in a `RefCell`); create one per thread.
pub struct FloatCtx {
    digits: usize,
    bits: usize,
    cc: RefCell<Consts>,
}

impl FloatCtx {
    pub fn new(digits: usize) -> Self {
        FloatCtx {
            digits,
            bits: digits_to_bits(digits),
            cc: RefCell::new(Consts::new().expect("constants cache allocation")),
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn pi(&self) -> Fp {
        let v = self.cc.borrow_mut().pi(self.bits, RM);
        Fp::from_raw(v, self.bits)
    }

    pub fn from_i64(&self, n: i64) -> Fp {
        Fp::from_i64(n, self.bits)
    }

    pub fn from_rational(&self, x: &Rational) -> Fp {
        Fp::from_rational(x, self.bits)
    }

    /// Exact power of ten (negative exponents cost one rounded division).
    pub fn pow10(&self, k: i64) -> Fp {
        let mag = BigUint::from(10u32).pow(k.unsigned_abs() as u32);
        let t = Fp::from_biguint(&mag, self.bits);
        if k >= 0 {
            t
        } else {
            self.from_i64(1).div(&t)
        }
    }

    pub fn sin(&self, x: &Fp) -> Fp {
        let v = x.v.sin(self.bits, RM, &mut self.cc.borrow_mut());
        Fp::from_raw(v, self.bits)
    }

    pub fn cos(&self, x: &Fp) -> Fp {
        let v = x.v.cos(self.bits, RM, &mut self.cc.borrow_mut());
        Fp::from_raw(v, self.bits)
    }

    /// cot x = cos x / sin x.
    pub fn cot(&self, x: &Fp) -> Fp {
        self.cos(x).div(&self.sin(x))
    }

    /// Natural log of |x|; None for zero.
    pub fn ln_abs(&self, x: &Fp) -> Option<Fp> {
        if x.is_zero() {
            return None;
        }
        let v = x.abs().v.ln(self.bits, RM, &mut self.cc.borrow_mut());
        Some(Fp::from_raw(v, self.bits))
    }

    /// log10 |x| as f64, accurate to full f64 resolution; None for zero.
    ///
    /// |log10 x| always fits comfortably in an f64 (binary exponents are
    /// i32), so the rendering round-trip loses nothing that matters for
    /// order-of-convergence measurements.
    pub fn log10_abs(&self, x: &Fp) -> Option<f64> {
        let ln = self.ln_abs(x)?;
        let ln10 = self.ln_abs(&self.from_i64(10)).expect("ln(10) is finite");
        self.to_f64(&ln.div(&ln10))
    }

    /// Round-trip through the decimal renderer to get an f64 approximation.
    pub fn to_f64(&self, x: &Fp) -> Option<f64> {
        if x.is_zero() {
            return Some(0.0);
        }
        let s = self.format_sig(x, 17);
        s.parse::<f64>().ok()
    }

    pub fn parse(&self, s: &str) -> Fp {
        let v = BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut self.cc.borrow_mut());
        Fp::from_raw(v, self.bits)
    }

    /// Decimal digits by which `a` and `b` agree, measured as
    /// -log10(|a-b| / max(|b|, tiny)); `None` when either is NaN-ish.
    /// Equal values report the context digit count (agreement saturates).
    pub fn digits_agreed(&self, a: &Fp, b: &Fp) -> Option<f64> {
        let diff = a.sub(b).abs();
        if diff.is_zero() {
            return Some(self.digits as f64);
        }
        let scale = b.abs().max(&a.abs());
        let rel = diff.div(&scale);
        let d = -self.log10_abs(&rel)?;
        Some(d.min(self.digits as f64))
    }

    /// Render `x` with `sig` significant digits: plain decimal for moderate
    /// exponents, scientific (`d.dddde±k`) otherwise.
    pub fn format_sig(&self, x: &Fp, sig: usize) -> String {
        let sig = sig.max(1);
        if x.is_zero() {
            return "0".to_string();
        }
        let (sign, mut digits, exp) = x
            .v
            .convert_to_radix(Radix::Dec, RM, &mut self.cc.borrow_mut())
            .expect("decimal conversion of a finite value");
        let mut exp = exp as i64; // value = 0.d1 d2 ... * 10^exp
        // round the digit string to `sig` digits
        if digits.len() > sig {
            let round_up = digits[sig] >= 5;
            digits.truncate(sig);
            if round_up {
                let mut i = sig;
                loop {
                    if i == 0 {
                        digits.insert(0, 1);
                        digits.truncate(sig);
                        exp += 1;
                        break;
                    }
                    i -= 1;
                    if digits[i] == 9 {
                        digits[i] = 0;
                    } else {
                        digits[i] += 1;
                        break;
                    }
                }
            }
        }
        while digits.len() < sig {
            digits.push(0);
        }
        let neg = sign == Sign::Neg;
        let exp10 = exp - 1; // value = d1.d2... * 10^exp10
        let body = if (-4..=8).contains(&exp10) {
            let ds: String = digits.iter().map(|d| (b'0' + d) as char).collect();
            if exp10 >= 0 {
                let point = (exp10 + 1) as usize;
                if point >= ds.len() {
                    format!("{}{}", ds, "0".repeat(point - ds.len()))
                } else {
                    format!("{}.{}", &ds[..point], &ds[point..])
                }
            } else {
                format!("0.{}{}", "0".repeat((-exp10 - 1) as usize), ds)
            }
        } else {
            let mut it = digits.iter().map(|d| (b'0' + d) as char);
            let head = it.next().unwrap();
            let tail: String = it.collect();
            if tail.is_empty() {
                format!("{}e{}", head, exp10)
            } else {
                format!("{}.{}e{}", head, tail, exp10)
            }
        };
        if neg {
            format!("-{}", body)
        } else {
            body
        }
    }
}
