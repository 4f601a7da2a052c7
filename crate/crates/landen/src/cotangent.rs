//! The integer polynomial pair behind the cotangent multiple-angle identity
//! `cot(m*t) = P_m(cot t) / Q_m(cot t)`, which drives the change of variables
//! underlying every transformation step.
//!
//! `P_m` collects the even binomials with alternating signs, `Q_m` the odd
//! ones: `P_m(x) = sum_j (-1)^j C(m, 2j) x^(m-2j)` (degree m, monic) and
//! `Q_m(x) = sum_j (-1)^j C(m, 2j+1) x^(m-2j-1)` (degree m-1, leading
//! coefficient m). Both expansions follow from de Moivre applied to
//! `(cos t + i sin t)^m` divided through by `sin^m t`.

use num_bigint::BigInt;

use crate::upoly::{Coeff, Polynomial};
use crate::Error;

/// `(P_m, Q_m)` with exact integer coefficients, descending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotangentPair {
    order: usize,
    p: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl CotangentPair {
    /// Build the pair for multiplication order `m >= 2`.
    pub fn build(m: usize) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::InvalidOrder(m));
        }
        let binom = pascal_row(m);
        // descending: index k holds the coefficient of x^(m-k) in P
        let mut p = vec![BigInt::from(0); m + 1];
        let mut q = vec![BigInt::from(0); m];
        for j in 0..=m / 2 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            p[2 * j] = &binom[2 * j] * sign;
            if 2 * j + 1 <= m {
                q[2 * j] = &binom[2 * j + 1] * sign;
            }
        }
        Ok(CotangentPair { order: m, p, q })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Descending coefficients of `P_m` (degree m).
    pub fn p_coeffs(&self) -> &[BigInt] {
        &self.p
    }

    /// Descending coefficients of `Q_m` (degree m-1).
    pub fn q_coeffs(&self) -> &[BigInt] {
        &self.q
    }

    pub fn p_poly<C: Coeff>(&self) -> Polynomial<C> {
        Polynomial::from_bigints(&self.p)
    }

    pub fn q_poly<C: Coeff>(&self) -> Polynomial<C> {
        Polynomial::from_bigints(&self.q)
    }
}

/// Row `n` of Pascal's triangle: C(n, 0) .. C(n, n).
pub fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 0..n {
        let next = &row[k] * BigInt::from((n - k) as i64) / BigInt::from((k + 1) as i64);
        row.push(next);
    }
    row
}

/// C(n, k) with the usual convention of 0 outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::float::FloatCtx;
    use crate::scalars::Rational;
    use crate::upoly::Polynomial;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rejects_orders_below_two() {
        assert_eq!(CotangentPair::build(0), Err(Error::InvalidOrder(0)));
        assert_eq!(CotangentPair::build(1), Err(Error::InvalidOrder(1)));
    }

    #[test]
    fn duplication_pair() {
        let c = CotangentPair::build(2).unwrap();
        assert_eq!(c.p_coeffs(), &ints(&[1, 0, -1])[..]); // x^2 - 1
        assert_eq!(c.q_coeffs(), &ints(&[2, 0])[..]); // 2x
    }

    #[test]
    fn triplication_and_quadruplication_pairs() {
        // hand-expanded de Moivre forms for m = 3 and m = 4
        let c3 = CotangentPair::build(3).unwrap();
        assert_eq!(c3.p_coeffs(), &ints(&[1, 0, -3, 0])[..]); // x^3 - 3x
        assert_eq!(c3.q_coeffs(), &ints(&[3, 0, -1])[..]); // 3x^2 - 1
        let c4 = CotangentPair::build(4).unwrap();
        assert_eq!(c4.p_coeffs(), &ints(&[1, 0, -6, 0, 1])[..]);
        assert_eq!(c4.q_coeffs(), &ints(&[4, 0, -4, 0])[..]);
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 6), BigInt::from(0));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(pascal_row(6), ints(&[1, 6, 15, 20, 15, 6, 1]));
    }

    #[test]
    fn multiple_angle_identity_numerically() {
        // cot(m t) = P_m(cot t) / Q_m(cot t) at 40 digits for a spread of
        // angles kept away from the poles of either side.
        let ctx = FloatCtx::new(40);
        let tol = ctx.pow10(-30);
        for m in 2..=8usize {
            let pair = CotangentPair::build(m).unwrap();
            let p: Polynomial<crate::scalars::float::Fp> = pair.p_poly();
            let q: Polynomial<crate::scalars::float::Fp> = pair.q_poly();
            for k in 1..=20i64 {
                // t = (2k+1)/40 in (0.07, 1.03), skipping angles too close
                // to a pole of either side
                let t = ctx.from_rational(&Rational::new((2 * k + 1).into(), 40.into()));
                let mt = t.mul(&ctx.from_i64(m as i64));
                let smt = ctx.sin(&mt);
                if smt.abs().cmp(&ctx.pow10(-3)) != Some(std::cmp::Ordering::Greater) {
                    continue;
                }
                let ct = ctx.cot(&t);
                let lhs = ctx.cot(&mt);
                let rhs = p.eval(&ct).div(&q.eval(&ct));
                let diff = lhs.sub(&rhs).abs();
                assert!(
                    diff.cmp(&tol) == Some(std::cmp::Ordering::Less),
                    "m={m} k={k}: residual too large"
                );
            }
        }
    }

    #[test]
    fn pair_degrees_and_leading_terms() {
        for m in 2..=9usize {
            let c = CotangentPair::build(m).unwrap();
            assert_eq!(c.p_coeffs().len(), m + 1);
            assert_eq!(c.q_coeffs().len(), m);
            assert_eq!(c.p_coeffs()[0], BigInt::from(1), "P_{m} is monic");
            assert_eq!(c.q_coeffs()[0], BigInt::from(m as i64));
        }
    }
}
