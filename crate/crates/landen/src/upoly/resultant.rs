//! Resultants via Sylvester matrices with fraction-free elimination, plus the
//! evaluation–interpolation scheme for resultants that carry a parameter.

use num_bigint::BigInt;

use super::{Coeff, Polynomial};
use crate::scalars::Rational;

/// Sylvester matrix of `(a, b)` with the standard dimension
/// `deg a + deg b`: the first `deg b` rows hold shifted copies of `a`'s
/// coefficients, the remaining `deg a` rows shifted copies of `b`'s.
///
/// Degree-zero arguments contribute no rows of their own kind, which gives
/// the usual conventions `res(a, c) = c^(deg a)` and `res(c, d) = 1`.
pub fn sylvester_matrix<C: Coeff>(a: &Polynomial<C>, b: &Polynomial<C>) -> Vec<Vec<C>> {
    let da = a.degree().expect("nonzero polynomial");
    let db = b.degree().expect("nonzero polynomial");
    let n = da + db;
    let mut m = vec![vec![C::zero(); n]; n];
    for i in 0..db {
        for (k, c) in a.coeffs().iter().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for j in 0..da {
        for (k, c) in b.coeffs().iter().enumerate() {
            m[db + j][j + k] = c.clone();
        }
    }
    m
}

/// Determinant by Bareiss one-step fraction-free elimination.
///
/// Every division is exact over an integral domain (the intermediate entries
/// are signed minors), so the same code serves exact rings and floats; zero
/// pivots are repaired by row swaps and an unrepairable zero column means the
/// determinant is zero.
pub fn det_bareiss<C: Coeff>(mut m: Vec<Vec<C>>) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    let mut sign_flip = false;
    let mut denom = C::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&l| !m[l][k].is_zero()) {
                Some(l) => {
                    m.swap(k, l);
                    sign_flip = !sign_flip;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .checked_div(&denom)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][k] = C::zero();
        }
        denom = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// `res(a, b)` for nonzero `a`, `b`; zero inputs return zero.
pub fn resultant<C: Coeff>(a: &Polynomial<C>, b: &Polynomial<C>) -> C {
    if a.is_zero() || b.is_zero() {
        return C::zero();
    }
    det_bareiss(sylvester_matrix(a, b))
}

/// Resultant in `z` of `a(z)` against the pencil `g0(z) - x * g1(z)`,
/// returned as a polynomial in the parameter `x`.
///
/// The result has degree at most `deg a` in `x`, so it is recovered exactly
/// from `deg a + 1` scalar resultants at the integer nodes `0, 1, -1, 2, -2,
/// ...` followed by Newton interpolation (whose only divisions are by integer
/// node differences, available in every coefficient ring used here).
pub fn resultant_linear_pencil<C: Coeff>(
    a: &Polynomial<C>,
    g0: &[BigInt],
    g1: &[BigInt],
) -> Polynomial<C> {
    let da = a.degree().expect("nonzero polynomial");
    let nodes: Vec<i64> = interpolation_nodes(da + 1);
    let mut points = Vec::with_capacity(nodes.len());
    for &x in &nodes {
        // g0 - x*g1 over the integers, embedded into C afterwards
        let g: Vec<BigInt> = {
            let len = g0.len().max(g1.len());
            (0..len)
                .map(|k| {
                    let idx0 = k as i64 - (len - g0.len()) as i64;
                    let idx1 = k as i64 - (len - g1.len()) as i64;
                    let c0 = if idx0 >= 0 { g0[idx0 as usize].clone() } else { BigInt::from(0) };
                    let c1 = if idx1 >= 0 { g1[idx1 as usize].clone() } else { BigInt::from(0) };
                    c0 - BigInt::from(x) * c1
                })
                .collect()
        };
        let gp = Polynomial::<C>::from_bigints(&g);
        points.push((x, resultant(a, &gp)));
    }
    interpolate(&points)
}

/// The node sequence 0, 1, -1, 2, -2, ...
pub fn interpolation_nodes(count: usize) -> Vec<i64> {
    (0..count)
        .map(|k| {
            let half = ((k + 1) / 2) as i64;
            if k % 2 == 1 {
                half
            } else {
                -half
            }
        })
        .collect()
}

/// Newton interpolation through `(x_i, y_i)` with distinct integer nodes.
pub fn interpolate<C: Coeff>(points: &[(i64, C)]) -> Polynomial<C> {
    let n = points.len();
    assert!(n > 0, "interpolation needs at least one point");
    // divided differences, built layer by layer in place
    let mut dd: Vec<C> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs = vec![dd[0].clone()];
    for layer in 1..n {
        for i in 0..n - layer {
            let num = dd[i + 1].sub(&dd[i]);
            let span = points[i + layer].0 - points[i].0;
            dd[i] = num.mul_rational(&Rational::new(1.into(), BigInt::from(span)));
        }
        dd.truncate(n - layer);
        coeffs.push(dd[0].clone());
    }
    // Horner assembly: p = (..(c_{n-1} (x - x_{n-2}) + c_{n-2})..)(x - x_0) + c_0
    let mut poly = Polynomial::constant(coeffs[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Polynomial::new(vec![C::one(), C::from_i64(-points[i].0)]);
        poly = poly.mul(&lin).add(&Polynomial::constant(coeffs[i].clone()));
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat_int, Rational};
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    fn p(cs: &[i64]) -> P {
        P::from_i64s(cs)
    }

    /// Oracle used by the property tests: resultant from the root-product
    /// form `lc(a)^(deg b) * prod b(r_i)` with the roots supplied explicitly.
    fn resultant_from_roots(lead_a: i64, roots_a: &[Rational], b: &P) -> Rational {
        let mut acc = rat_int(1);
        for r in roots_a {
            acc *= b.eval(r);
        }
        let db = b.degree().unwrap() as u32;
        let lead = rat_int(lead_a);
        let mut lp = rat_int(1);
        for _ in 0..db {
            lp *= &lead;
        }
        lp * acc
    }

    #[test]
    fn resultant_examples() {
        // res(x^2 - 3x + 2, x - 3) = (3-1)(3-2) scaled: lc 1 -> value 2
        assert_eq!(resultant(&p(&[1, -3, 2]), &p(&[1, -3])), rat_int(2));
        // shared root -> zero
        assert_eq!(resultant(&p(&[1, -3, 2]), &p(&[1, -1])), rat_int(0));
        // constant second argument: c^(deg a)
        assert_eq!(resultant(&p(&[2, 0, 5]), &p(&[7])), rat_int(49));
        // two constants
        assert_eq!(resultant(&p(&[4]), &p(&[9])), rat_int(1));
        // zero input
        assert_eq!(resultant(&P::zero(), &p(&[1, 1])), rat_int(0));
    }

    #[test]
    fn determinant_handles_zero_pivots() {
        // leading 2x2 block forces a swap
        let m = vec![
            vec![rat_int(0), rat_int(2), rat_int(1)],
            vec![rat_int(3), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(4)],
        ];
        assert_eq!(det_bareiss(m), rat_int(-24));
        let singular = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert_eq!(det_bareiss(singular), rat_int(0));
    }

    #[test]
    fn interpolation_nodes_sequence() {
        assert_eq!(interpolation_nodes(5), vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = p(&[3, -2, 0, 7]);
        let pts: Vec<(i64, Rational)> = interpolation_nodes(4)
            .into_iter()
            .map(|x| (x, target.eval(&rat_int(x))))
            .collect();
        assert_eq!(interpolate(&pts), target);
    }

    #[test]
    fn pencil_resultant_matches_direct_substitution() {
        // a = x^2+4x+15 against the degree-2 pencil (z^2 - 1) - x * 2z
        let a = p(&[1, 4, 15]);
        let g0: Vec<BigInt> = [1i64, 0, -1].iter().map(|&c| BigInt::from(c)).collect();
        let g1: Vec<BigInt> = [2i64, 0].iter().map(|&c| BigInt::from(c)).collect();
        let h = resultant_linear_pencil(&a, &g0, &g1);
        // compare against scalar resultants at a few fresh x values
        for x in [3i64, -5, 10] {
            let g = Polynomial::<Rational>::new(vec![
                rat_int(1),
                rat_int(-2 * x),
                rat_int(-1),
            ]);
            assert_eq!(h.eval(&rat_int(x)), resultant(&a, &g), "x = {x}");
        }
        assert_eq!(h.degree(), Some(2));
    }

    proptest! {
        #[test]
        fn resultant_antisymmetry(
            a in proptest::collection::vec(-9i64..9, 2..6),
            b in proptest::collection::vec(-9i64..9, 2..6),
        ) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let da = pa.degree().unwrap();
            let db = pb.degree().unwrap();
            let lhs = resultant(&pa, &pb);
            let rhs = resultant(&pb, &pa);
            let expected = if (da * db) % 2 == 1 { -rhs.clone() } else { rhs.clone() };
            prop_assert_eq!(lhs, expected);
        }

        #[test]
        fn resultant_vanishes_iff_shared_root_here(
            root in -10i64..10,
            a_extra in -9i64..9,
            b_extra in -9i64..9,
        ) {
            prop_assume!(a_extra != b_extra);
            // a = (x - root)(x - a_extra), b = (x - root)(x - b_extra)
            let pa = p(&[1, -(root + a_extra), root * a_extra]);
            let pb = p(&[1, -(root + b_extra), root * b_extra]);
            prop_assert_eq!(resultant(&pa, &pb), rat_int(0));
            // remove the shared root from b: now nonzero unless roots collide
            let pb2 = p(&[1, -b_extra]);
            if b_extra != root && b_extra != a_extra {
                prop_assert!(resultant(&pa, &pb2) != rat_int(0));
            }
        }

        #[test]
        fn resultant_matches_root_product_oracle(
            r1 in -8i64..8,
            r2 in -8i64..8,
            lead in 1i64..5,
            b in proptest::collection::vec(-9i64..9, 2..5),
        ) {
            let pb = p(&b);
            prop_assume!(!pb.is_zero() && pb.degree().unwrap() >= 1);
            // a = lead (x - r1)(x - r2)
            let pa = p(&[lead, -lead * (r1 + r2), lead * r1 * r2]);
            let oracle = resultant_from_roots(lead, &[rat_int(r1), rat_int(r2)], &pb);
            prop_assert_eq!(resultant(&pa, &pb), oracle);
        }

        #[test]
        fn interpolation_roundtrip(
            cs in proptest::collection::vec(-50i64..50, 1..7),
        ) {
            let target = p(&cs);
            let n = cs.len();
            let pts: Vec<(i64, Rational)> = interpolation_nodes(n)
                .into_iter()
                .map(|x| (x, target.eval(&rat_int(x))))
                .collect();
            prop_assert_eq!(interpolate(&pts), target);
        }
    }
}
