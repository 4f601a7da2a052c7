//! Sparse multivariate polynomials over exact rationals.
//!
//! This is the coefficient ring for *symbolic* runs of the transformation
//! pipeline: feeding in a fully generic rational function (every input
//! coefficient its own variable) makes the pipeline output closed-form
//! coefficient formulas instead of numbers. Only the operations the pipeline
//! actually performs are provided: ring arithmetic, exact division (used by
//! the fraction-free determinant and the exact quotient step), rational
//! scaling, and evaluation back into an arbitrary coefficient ring.
//!
//! Terms are keyed by sorted `(variable, exponent)` pairs compared in
//! lexicographic order of the full exponent vector (variable 0 strongest), so
//! leading terms are well defined and exact division terminates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalars::Rational;
use crate::upoly::Coeff;
use crate::Error;

/// Product of variables with positive exponents, sorted by variable id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    /// The empty product (the constant monomial).
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: usize) -> Self {
        Monomial(vec![(id, 1)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < rhs.0.len() {
            match (self.0.get(i), rhs.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        out.push((va, ea + eb));
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        out.push((va, ea));
                        i += 1;
                    } else {
                        out.push((vb, eb));
                        j += 1;
                    }
                }
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// `self / rhs` when every exponent of `rhs` is covered; `None` otherwise.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut i = 0;
        for &(vb, eb) in &rhs.0 {
            loop {
                let &(va, ea) = self.0.get(i)?;
                if va < vb {
                    out.push((va, ea));
                    i += 1;
                } else if va == vb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        out.push((va, ea - eb));
                    }
                    i += 1;
                    break;
                } else {
                    return None; // rhs has a variable self lacks
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        Some(Monomial(out))
    }

    /// Dense exponent row of the given arity.
    pub fn to_dense(&self, arity: usize) -> Vec<u32> {
        let mut row = vec![0u32; arity];
        for &(v, e) in &self.0 {
            row[v] = e;
        }
        row
    }

    pub fn from_dense(row: &[u32]) -> Self {
        Monomial(
            row.iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| (v, e))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Lexicographic on the full exponent vector, variable 0 strongest: the
    /// monomial with the larger exponent at the first differing variable is
    /// larger. A missing variable counts as exponent 0.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Equal,
                (Some(_), None) => return Greater,
                (None, Some(_)) => return Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Greater; // self nonzero at an earlier variable
                    } else {
                        return Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero, so the representation is
/// canonical and `==` means mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(Monomial::unit(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(id: usize) -> Self {
        MultiPoly::term(Monomial::var(id), <Rational as One>::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest variable id appearing, `None` for constants.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.max_var()).max()
    }

    /// Leading term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if Zero::is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Self::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        if Zero::is_zero(q) {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Exact division: `Some(q)` iff `self == q * rhs`.
    ///
    /// Reduces the leading term against `rhs`'s leading term; for an exact
    /// quotient this always succeeds and strictly descends in the monomial
    /// order, and any failure along the way proves inexactness.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let (dm, dc) = rhs.leading_term()?; // None for a zero divisor
        let mut rem = self.clone();
        let mut quo = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(dm)?;
            let qc = rc / dc;
            let piece = MultiPoly::term(qm.clone(), qc.clone());
            rem = rem.sub(&piece.mul(rhs));
            Self::insert_add(&mut quo, qm, qc);
        }
        Some(MultiPoly { terms: quo })
    }

    /// Evaluate in any coefficient ring by substituting `vals[i]` for
    /// variable `i`.
    pub fn eval<C: Coeff>(&self, vals: &[C]) -> Result<C, Error> {
        if let Some(v) = self.max_var() {
            if v >= vals.len() {
                return Err(Error::ArityMismatch {
                    expected: v + 1,
                    got: vals.len(),
                });
            }
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = C::one();
            for &(v, e) in m.exponents() {
                for _ in 0..e {
                    t = t.mul(&vals[v]);
                }
            }
            acc = acc.add(&t.mul_rational(c));
        }
        Ok(acc)
    }

    /// Terms as dense exponent rows, leading term first.
    pub fn dense_terms(&self, arity: usize) -> Vec<(Rational, Vec<u32>)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (c.clone(), m.to_dense(arity)))
            .collect()
    }

    pub fn from_dense_terms<I>(rows: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<u32>)>,
    {
        let mut terms = BTreeMap::new();
        for (c, row) in rows {
            Self::insert_add(&mut terms, Monomial::from_dense(&row), c);
        }
        MultiPoly { terms }
    }

    /// Joint content data of the coefficients: (lcm of denominators, gcd of
    /// numerators); `None` for the zero polynomial.
    pub fn content_parts(&self) -> Option<(BigInt, BigInt)> {
        use num_integer::Integer;
        if self.is_zero() {
            return None;
        }
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        Some((lcm, gcd.abs()))
    }
}

impl Coeff for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(<Rational as One>::one())
    }
    fn from_bigint(n: &BigInt) -> Self {
        MultiPoly::constant(Rational::from_integer(n.clone()))
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MultiPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        MultiPoly::checked_div(self, rhs)
    }
    fn mul_rational(&self, q: &Rational) -> Self {
        MultiPoly::mul_rational(self, q)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for &(v, e) in m.exponents() {
                if e == 1 {
                    write!(f, "*v{}", v)?;
                } else {
                    write!(f, "*v{}^{}", v, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};
    use proptest::prelude::*;

    fn v(id: usize) -> MultiPoly {
        MultiPoly::var(id)
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(rat_int(n))
    }

    #[test]
    fn monomial_order_is_lex_with_v0_strongest() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let x2 = x.mul(&x);
        let xy = x.mul(&y);
        let y3 = y.mul(&y).mul(&y);
        assert!(x > y);
        assert!(x2 > xy);
        assert!(xy > y3); // any positive power of v0 beats none
        assert!(x2 > x);
        assert!(Monomial::unit() < y);
        // multiplicativity at the spots that break naive orderings
        assert!(xy < x2); // v1 < v0 times common factor v0
    }

    #[test]
    fn monomial_division() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let xy2 = x.mul(&y).mul(&y);
        assert_eq!(xy2.checked_div(&y), Some(x.mul(&y)));
        assert_eq!(xy2.checked_div(&x.mul(&x)), None);
        assert_eq!(xy2.checked_div(&Monomial::var(2)), None);
        assert_eq!(xy2.checked_div(&Monomial::unit()), Some(xy2.clone()));
        assert_eq!(xy2.checked_div(&xy2), Some(Monomial::unit()));
    }

    #[test]
    fn arithmetic_and_canonical_zero() {
        let p = v(0).add(&v(1)); // v0 + v1
        let q = v(0).sub(&v(1)); // v0 - v1
        let prod = p.mul(&q);
        let expect = v(0).mul(&v(0)).sub(&v(1).mul(&v(1)));
        assert_eq!(prod, expect);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.sub(&p).term_count(), 0);
        assert_eq!(prod.term_count(), 2);
        assert_eq!(c(0), MultiPoly::zero());
    }

    #[test]
    fn exact_division_recovers_factors() {
        // (v0 + v1)^2 * (v0 - 2) / (v0 + v1) and / (v0 - 2)
        let p = v(0).add(&v(1));
        let q = v(0).sub(&c(2));
        let prod = p.mul(&p).mul(&q);
        assert_eq!(prod.checked_div(&p), Some(p.mul(&q)));
        assert_eq!(prod.checked_div(&q), Some(p.mul(&p)));
        // not a factor
        assert_eq!(prod.checked_div(&v(0).add(&c(1))), None);
        // dividing by a single variable works termwise
        let r = v(0).mul(&v(1)).add(&v(0).mul(&v(0)));
        assert_eq!(r.checked_div(&v(0)), Some(v(1).add(&v(0))));
        assert_eq!(r.checked_div(&MultiPoly::zero()), None);
    }

    #[test]
    fn evaluation_substitutes_into_other_rings() {
        // 3 v0^2 v1 - 1/2 v2
        let p = v(0)
            .mul(&v(0))
            .mul(&v(1))
            .mul_rational(&rat_int(3))
            .sub(&v(2).mul_rational(&rat(1, 2)));
        let vals = [rat_int(2), rat_int(5), rat_int(8)];
        assert_eq!(p.eval(&vals).unwrap(), rat_int(56)); // 3*4*5 - 4
        assert_eq!(
            p.eval(&vals[..2]),
            Err(Error::ArityMismatch { expected: 3, got: 2 })
        );
        // constants need no values at all
        assert_eq!(c(7).eval::<Rational>(&[]).unwrap(), rat_int(7));
    }

    #[test]
    fn dense_roundtrip_and_ordering() {
        let p = v(1).mul(&v(1)).add(&v(0).mul_rational(&rat(3, 4))).sub(&c(6));
        let rows = p.dense_terms(3);
        assert_eq!(
            rows,
            vec![
                (rat(3, 4), vec![1, 0, 0]),
                (rat_int(1), vec![0, 2, 0]),
                (rat_int(-6), vec![0, 0, 0]),
            ]
        );
        assert_eq!(MultiPoly::from_dense_terms(rows), p);
    }

    #[test]
    fn content_parts_examples() {
        let p = v(0).mul_rational(&rat(4, 3)).add(&v(1).mul_rational(&rat(2, 9)));
        assert_eq!(
            p.content_parts(),
            Some((BigInt::from(9), BigInt::from(2)))
        );
        assert_eq!(MultiPoly::zero().content_parts(), None);
        assert_eq!(
            c(-12).content_parts(),
            Some((BigInt::from(1), BigInt::from(12)))
        );
    }

    proptest! {
        /// Evaluation is a ring homomorphism: evaluating after arithmetic
        /// equals arithmetic after evaluation.
        #[test]
        fn eval_commutes_with_arithmetic(
            ca in -9i64..9, cb in -9i64..9, cc in -9i64..9,
            x in -7i64..7, y in -7i64..7,
        ) {
            let p = v(0).mul_rational(&rat_int(ca)).add(&v(1).mul(&v(1)).mul_rational(&rat_int(cb)));
            let q = v(1).mul_rational(&rat_int(cc)).add(&c(3));
            let vals = [rat_int(x), rat_int(y)];
            let lhs = p.mul(&q).add(&p).eval(&vals).unwrap();
            let pe = p.eval(&vals).unwrap();
            let qe = q.eval(&vals).unwrap();
            prop_assert_eq!(lhs, &pe * &qe + &pe);
        }

        /// checked_div inverts mul for random small polynomials.
        #[test]
        fn division_inverts_multiplication(
            ca in 1i64..9, cb in -9i64..9, cc in -9i64..9, cd in 1i64..9,
        ) {
            let p = v(0).mul_rational(&rat_int(ca)).add(&v(1).mul_rational(&rat_int(cb)));
            let q = v(2).mul_rational(&rat_int(cd)).add(&c(cc));
            let prod = p.mul(&q);
            prop_assert_eq!(prod.checked_div(&p), Some(q));
        }
    }
}
