//! Closed-form coefficient maps, computed once and reused.
//!
//! Running the transformation pipeline with every input coefficient replaced
//! by its own variable (via [`MultiPoly`]) yields polynomial formulas for the
//! output coefficients: a [`LandenMap`]. Applying the map to a concrete
//! function is then just polynomial evaluation — identical results to running
//! the pipeline directly, but without resultants or divisions, which makes
//! repeated integration of many functions with the same shape cheap.
//!
//! Maps serialize to a line-oriented text format (see [`LandenMap::save`])
//! so they can be cached on disk between runs.

pub mod multipoly;

use std::io::Write as _;
use std::path::Path;

use num_traits::{One, Zero};

use crate::scalars::{parse_rational, Rational};
use crate::transform::{transform_raw, RationalFunction};
use crate::upoly::{Coeff, Polynomial};
use crate::Error;

pub use multipoly::MultiPoly;

/// Guard rails for symbolic generation.
#[derive(Debug, Clone, Copy)]
pub struct GenLimits {
    /// Cap on the total number of terms across all stored formulas.
    pub max_terms: usize,
}

impl Default for GenLimits {
    fn default() -> Self {
        GenLimits { max_terms: 1_000_000 }
    }
}

/// Precomputed coefficient formulas for one (degree, order) pair.
///
/// Variables are numbered `0..=p` for the denominator coefficients (leading
/// first) and `p+1..=2p-1` for the numerator coefficients (leading first),
/// 2p variables in all. Formulas are stored with integer coefficients of
/// joint content 1; `scale` carries the factor taken out, so that
///
/// ```text
/// raw pipeline output = scale * stored formula value
/// ```
///
/// holds coefficient-wise, exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct LandenMap {
    p: usize,
    m: usize,
    scale: Rational,
    /// p+1 formulas for the new denominator, leading coefficient first.
    den: Vec<MultiPoly>,
    /// p-1 formulas for the new numerator, leading coefficient first.
    num: Vec<MultiPoly>,
}

impl LandenMap {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Factor mapping stored formula values back to raw pipeline output.
    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn den_formulas(&self) -> &[MultiPoly] {
        &self.den
    }

    pub fn num_formulas(&self) -> &[MultiPoly] {
        &self.num
    }

    /// Number of variables the formulas take.
    pub fn arity(&self) -> usize {
        2 * self.p
    }

    pub fn total_terms(&self) -> usize {
        self.den
            .iter()
            .chain(&self.num)
            .map(MultiPoly::term_count)
            .sum()
    }

    /// Run the pipeline symbolically for denominator degree `p` and order `m`.
    pub fn generate(p: usize, m: usize, limits: &GenLimits) -> Result<LandenMap, Error> {
        if p < 2 || p % 2 == 1 {
            return Err(Error::OddDegree(p));
        }
        let den = Polynomial::new((0..=p).map(MultiPoly::var).collect());
        let num = Polynomial::new((0..p - 1).map(|k| MultiPoly::var(p + 1 + k)).collect());
        let generic = RationalFunction::new(num, den);
        let (j, h) = transform_raw(&generic, m)?;

        // joint content of every coefficient formula of both polynomials
        let mut lcm_den = num_bigint::BigInt::one();
        let mut gcd_num = num_bigint::BigInt::zero();
        for g in h.coeffs().iter().chain(j.coeffs()) {
            if let Some((l, g)) = g.content_parts() {
                use num_integer::Integer;
                lcm_den = lcm_den.lcm(&l);
                gcd_num = gcd_num.gcd(&g);
            }
        }
        let t = if gcd_num.is_zero() {
            <Rational as One>::one()
        } else {
            Rational::new(lcm_den, gcd_num)
        };
        let scale = t.recip();

        let store = |poly: &Polynomial<MultiPoly>, len: usize| -> Vec<MultiPoly> {
            poly.coeffs_padded(len - 1)
                .iter()
                .map(|g| g.mul_rational(&t))
                .collect()
        };
        let map = LandenMap {
            p,
            m,
            scale,
            den: store(&h, p + 1),
            num: store(&j, p - 1),
        };
        let total = map.total_terms();
        if total > limits.max_terms {
            return Err(Error::ResourceLimit { terms: total, limit: limits.max_terms });
        }
        Ok(map)
    }

    /// Evaluate the formulas on a concrete function: exactly the raw pipeline
    /// output `(J, H)`, bit for bit in exact rings.
    pub fn apply<C: Coeff>(
        &self,
        f: &RationalFunction<C>,
    ) -> Result<(Polynomial<C>, Polynomial<C>), Error> {
        let pd = f.den.degree().ok_or(Error::ZeroDenominator)?;
        if pd != self.p {
            return Err(Error::ArityMismatch { expected: self.p, got: pd });
        }
        if let Some(dn) = f.num.degree() {
            if dn > self.p - 2 {
                return Err(Error::DegreeGap { num: dn, den: self.p });
            }
        }
        let mut vals = f.den.coeffs_padded(self.p);
        vals.extend(f.num.coeffs_padded(self.p - 2));
        let eval_all = |formulas: &[MultiPoly]| -> Result<Polynomial<C>, Error> {
            let coeffs = formulas
                .iter()
                .map(|g| Ok(g.eval(&vals)?.mul_rational(&self.scale)))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Polynomial::new(coeffs))
        };
        Ok((eval_all(&self.num)?, eval_all(&self.den)?))
    }

    /// Serialize to the cache format:
    ///
    /// ```text
    /// landen-map v1 p=<p> m=<m> scale=<rational>
    /// den0 <terms> <coef>:<e0>,...,<e_{2p-1}> ...
    /// ...
    /// num0 ...
    /// ```
    ///
    /// one line per formula (`den0..den<p>` then `num0..num<p-2>`, leading
    /// coefficients first), terms ordered leading-first, coefficients as
    /// integers or `n/d` rationals.
    pub fn to_text(&self) -> String {
        let arity = self.arity();
        let mut out = format!(
            "landen-map v1 p={} m={} scale={}\n",
            self.p, self.m, self.scale
        );
        let mut emit = |name: &str, idx: usize, g: &MultiPoly| {
            out.push_str(&format!("{}{} {}", name, idx, g.term_count()));
            for (c, row) in g.dense_terms(arity) {
                let exps: Vec<String> = row.iter().map(u32::to_string).collect();
                out.push_str(&format!(" {}:{}", c, exps.join(",")));
            }
            out.push('\n');
        };
        for (k, g) in self.den.iter().enumerate() {
            emit("den", k, g);
        }
        for (k, g) in self.num.iter().enumerate() {
            emit("num", k, g);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<LandenMap, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty file"))?;
        let mut ht = header.split_whitespace();
        if ht.next() != Some("landen-map") {
            return Err(bad("missing landen-map header"));
        }
        match ht.next() {
            Some("v1") => {}
            Some(v) => return Err(Error::VersionMismatch(v.to_string())),
            None => return Err(bad("missing version")),
        }
        let (mut p, mut m, mut scale) = (None, None, <Rational as One>::one());
        for tok in ht {
            let (key, val) = tok.split_once('=').ok_or_else(|| bad("malformed header token"))?;
            match key {
                "p" => p = Some(val.parse::<usize>().map_err(|_| bad("bad p"))?),
                "m" => m = Some(val.parse::<usize>().map_err(|_| bad("bad m"))?),
                "scale" => scale = parse_rational(val).map_err(|_| bad("bad scale"))?,
                _ => return Err(bad("unknown header key")),
            }
        }
        let p = p.ok_or_else(|| bad("missing p"))?;
        let m = m.ok_or_else(|| bad("missing m"))?;
        if p < 2 || p % 2 == 1 || m < 2 {
            return Err(bad("invalid dimensions"));
        }
        let arity = 2 * p;

        let mut parse_formula = |expect: &str| -> Result<MultiPoly, Error> {
            let line = lines.next().ok_or_else(|| bad("truncated file"))?;
            let mut toks = lines_tokens(line);
            let name = toks.next().ok_or_else(|| bad("empty formula line"))?;
            if name != expect {
                return Err(bad(&format!("expected {expect}, found {name}")));
            }
            let count: usize = toks
                .next()
                .ok_or_else(|| bad("missing term count"))?
                .parse()
                .map_err(|_| bad("bad term count"))?;
            let mut rows = Vec::with_capacity(count);
            for _ in 0..count {
                let t = toks.next().ok_or_else(|| bad("missing term"))?;
                let (cs, es) = t.split_once(':').ok_or_else(|| bad("malformed term"))?;
                let coef = parse_rational(cs).map_err(|_| bad("bad coefficient"))?;
                let row = es
                    .split(',')
                    .map(|e| e.parse::<u32>().map_err(|_| bad("bad exponent")))
                    .collect::<Result<Vec<_>, Error>>()?;
                if row.len() != arity {
                    return Err(bad("wrong exponent count"));
                }
                rows.push((coef, row));
            }
            if toks.next().is_some() {
                return Err(bad("trailing tokens"));
            }
            Ok(MultiPoly::from_dense_terms(rows))
        };

        let mut den = Vec::with_capacity(p + 1);
        for k in 0..=p {
            den.push(parse_formula(&format!("den{k}"))?);
        }
        let mut num = Vec::with_capacity(p - 1);
        for k in 0..p - 1 {
            num.push(parse_formula(&format!("num{k}"))?);
        }
        if lines.next().is_some() {
            return Err(bad("trailing lines"));
        }
        Ok(LandenMap { p, m, scale, den, num })
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_text().as_bytes())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<LandenMap, Error> {
        let text = std::fs::read_to_string(path)?;
        LandenMap::from_text(&text)
    }
}

fn bad(msg: &str) -> Error {
    Error::FormatError(msg.to_string())
}

fn lines_tokens(line: &str) -> impl Iterator<Item = &str> {
    line.split_whitespace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    fn v(id: usize) -> MultiPoly {
        MultiPoly::var(id)
    }

    /// Sum of products `sum_i coef_i * a_{i0} * b_{i1}` in the map's variable
    /// numbering for degree-p inputs: `a_k -> var k`, `b_k -> var p+1+k`.
    fn bilinear(p: usize, terms: &[(i64, usize, usize)]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for &(c, ai, bi) in terms {
            acc = acc.add(&v(ai).mul(&v(p + 1 + bi)).mul_rational(&rat_int(c)));
        }
        acc
    }

    /// Same, but products of two denominator coefficients.
    fn aa(terms: &[(i64, usize, usize)]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for &(c, i, j) in terms {
            acc = acc.add(&v(i).mul(&v(j)).mul_rational(&rat_int(c)));
        }
        acc
    }

    fn raw_formulas(map: &LandenMap) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
        let rescale = |g: &MultiPoly| g.mul_rational(map.scale());
        (
            map.den_formulas().iter().map(rescale).collect(),
            map.num_formulas().iter().map(rescale).collect(),
        )
    }

    #[test]
    fn quartic_denominator_formulas() {
        let map = LandenMap::generate(4, 2, &GenLimits::default()).unwrap();
        let (h, _) = raw_formulas(&map);
        assert_eq!(h[0], aa(&[(16, 0, 4)]));
        assert_eq!(h[1], aa(&[(8, 1, 4), (-8, 0, 3)]));
        assert_eq!(h[2], aa(&[(4, 0, 2), (-4, 1, 3), (16, 0, 4), (4, 2, 4)]));
        assert_eq!(
            h[3],
            aa(&[(-2, 0, 1), (2, 1, 2), (-6, 0, 3), (-2, 2, 3), (6, 1, 4), (2, 3, 4)])
        );
        // constant term factors as A(1) * A(-1)
        let a_at_1 = v(0).add(&v(1)).add(&v(2)).add(&v(3)).add(&v(4));
        let a_at_m1 = v(0).sub(&v(1)).add(&v(2)).sub(&v(3)).add(&v(4));
        assert_eq!(h[4], a_at_1.mul(&a_at_m1));
    }

    #[test]
    fn sextic_map_matches_closed_forms() {
        let map = LandenMap::generate(6, 2, &GenLimits::default()).unwrap();
        // every formula here already has integer coefficients with joint
        // content 1 (the constant term factors as A(1)*A(-1), which is
        // primitive), so no rescaling was needed at generation time
        assert!(<Rational as One>::is_one(map.scale()));
        let (h, d) = raw_formulas(&map);

        assert_eq!(h[0], aa(&[(64, 0, 6)]));
        assert_eq!(h[1], aa(&[(-32, 0, 5), (32, 1, 6)]));
        assert_eq!(h[2], aa(&[(16, 0, 4), (-16, 1, 5), (96, 0, 6), (16, 2, 6)]));
        assert_eq!(
            h[3],
            aa(&[
                (-8, 0, 3),
                (8, 1, 4),
                (-40, 0, 5),
                (-8, 2, 5),
                (40, 1, 6),
                (8, 3, 6),
            ])
        );
        assert_eq!(
            h[4],
            aa(&[
                (4, 0, 2),
                (-4, 1, 3),
                (16, 0, 4),
                (4, 2, 4),
                (-16, 1, 5),
                (-4, 3, 5),
                (36, 0, 6),
                (16, 2, 6),
                (4, 4, 6),
            ])
        );
        assert_eq!(
            h[5],
            aa(&[
                (-2, 0, 1),
                (2, 1, 2),
                (-6, 0, 3),
                (-2, 2, 3),
                (6, 1, 4),
                (2, 3, 4),
                (-10, 0, 5),
                (-6, 2, 5),
                (-2, 4, 5),
                (10, 1, 6),
                (6, 3, 6),
                (2, 5, 6),
            ])
        );
        let a_at_1 = v(0).add(&v(1)).add(&v(2)).add(&v(3)).add(&v(4)).add(&v(5)).add(&v(6));
        let a_at_m1 = v(0).sub(&v(1)).add(&v(2)).sub(&v(3)).add(&v(4)).sub(&v(5)).add(&v(6));
        assert_eq!(h[6], a_at_1.mul(&a_at_m1));

        assert_eq!(d[0], bilinear(6, &[(32, 6, 0), (32, 0, 4)]));
        assert_eq!(
            d[1],
            bilinear(6, &[(-16, 5, 0), (16, 6, 1), (-16, 0, 3), (16, 1, 4)])
        );
        assert_eq!(
            d[2],
            bilinear(
                6,
                &[
                    (8, 4, 0),
                    (24, 6, 0),
                    (-8, 5, 1),
                    (8, 0, 2),
                    (8, 6, 2),
                    (-8, 1, 3),
                    (24, 0, 4),
                    (8, 2, 4),
                ]
            )
        );
        assert_eq!(
            d[3],
            bilinear(
                6,
                &[
                    (-4, 3, 0),
                    (-8, 5, 0),
                    (-4, 0, 1),
                    (4, 4, 1),
                    (8, 6, 1),
                    (4, 1, 2),
                    (-4, 5, 2),
                    (-8, 0, 3),
                    (-4, 2, 3),
                    (4, 6, 3),
                    (8, 1, 4),
                    (4, 3, 4),
                ]
            )
        );
        // the constant term is (c0 + c2 + ... + c10)/32 for the padded
        // product C = B*Z, so each even-index b column pairs with every
        // even-index a and each odd-index b column with every odd-index a
        assert_eq!(
            d[4],
            bilinear(
                6,
                &[
                    (2, 0, 0),
                    (2, 2, 0),
                    (2, 4, 0),
                    (2, 6, 0),
                    (-2, 1, 1),
                    (-2, 3, 1),
                    (-2, 5, 1),
                    (2, 0, 2),
                    (2, 2, 2),
                    (2, 4, 2),
                    (2, 6, 2),
                    (-2, 1, 3),
                    (-2, 3, 3),
                    (-2, 5, 3),
                    (2, 0, 4),
                    (2, 2, 4),
                    (2, 4, 4),
                    (2, 6, 4),
                ]
            )
        );
    }

    #[test]
    fn sextic_intermediate_stages_match_closed_forms() {
        use crate::cotangent::CotangentPair;
        use crate::transform::{dims, expansion_e, product_c, quotient_z, resultant_h};

        let p = 6usize;
        let pair = CotangentPair::build(2).unwrap();
        let d = dims(p, 2);
        let a: Polynomial<MultiPoly> = Polynomial::new((0..=p).map(MultiPoly::var).collect());
        let b: Polynomial<MultiPoly> =
            Polynomial::new((0..p - 1).map(|k| MultiPoly::var(p + 1 + k)).collect());

        let h = resultant_h(&a, &pair);
        let e = expansion_e(&h, &pair, &d);
        let z = quotient_z(&e, &a).unwrap();
        let c = product_c(&b, &z, &d);

        // the degree-12 expansion is anti-palindromic up to sign: its front
        // coefficients carry alternating signs and the mirrored tail repeats
        // them with the sign stripped on the odd ones
        let e_front = [
            aa(&[(64, 0, 6)]),
            aa(&[(-64, 0, 5), (64, 1, 6)]),
            aa(&[(64, 0, 4), (-64, 1, 5), (64, 2, 6)]),
            aa(&[(-64, 0, 3), (64, 1, 4), (-64, 2, 5), (64, 3, 6)]),
            aa(&[(64, 0, 2), (-64, 1, 3), (64, 2, 4), (-64, 3, 5), (64, 4, 6)]),
            aa(&[
                (-64, 0, 1),
                (64, 1, 2),
                (-64, 2, 3),
                (64, 3, 4),
                (-64, 4, 5),
                (64, 5, 6),
            ]),
            aa(&[
                (64, 0, 0),
                (-64, 1, 1),
                (64, 2, 2),
                (-64, 3, 3),
                (64, 4, 4),
                (-64, 5, 5),
                (64, 6, 6),
            ]),
        ];
        let ec = e.coeffs_padded(12);
        for (k, want) in e_front.iter().enumerate() {
            assert_eq!(&ec[k], want, "expansion coefficient {k}");
            let mirrored = if k % 2 == 1 { want.neg() } else { want.clone() };
            assert_eq!(ec[12 - k], mirrored, "expansion coefficient {}", 12 - k);
        }

        // the exact quotient by A flips the variable order and alternates signs
        let z_expect: Vec<MultiPoly> = (0..=6)
            .map(|k| {
                let sign = if k % 2 == 1 { -64 } else { 64 };
                MultiPoly::var(6 - k).mul_rational(&rat_int(sign))
            })
            .collect();
        assert_eq!(z.coeffs(), &z_expect[..]);

        // padded product with the numerator, descending, degree s = 10
        let c_expect = [
            bilinear(6, &[(64, 6, 0)]),
            bilinear(6, &[(-64, 5, 0), (64, 6, 1)]),
            bilinear(6, &[(64, 4, 0), (-64, 5, 1), (64, 6, 2)]),
            bilinear(6, &[(-64, 3, 0), (64, 4, 1), (-64, 5, 2), (64, 6, 3)]),
            bilinear(
                6,
                &[(64, 2, 0), (-64, 3, 1), (64, 4, 2), (-64, 5, 3), (64, 6, 4)],
            ),
            bilinear(
                6,
                &[(-64, 1, 0), (64, 2, 1), (-64, 3, 2), (64, 4, 3), (-64, 5, 4)],
            ),
            bilinear(
                6,
                &[(64, 0, 0), (-64, 1, 1), (64, 2, 2), (-64, 3, 3), (64, 4, 4)],
            ),
            bilinear(6, &[(64, 0, 1), (-64, 1, 2), (64, 2, 3), (-64, 3, 4)]),
            bilinear(6, &[(64, 0, 2), (-64, 1, 3), (64, 2, 4)]),
            bilinear(6, &[(64, 0, 3), (-64, 1, 4)]),
            bilinear(6, &[(64, 0, 4)]),
        ];
        assert_eq!(c.len(), 11);
        for (k, want) in c_expect.iter().enumerate() {
            assert_eq!(&c[k], want, "product coefficient {k}");
        }
    }

    #[test]
    fn apply_matches_pipeline_bit_for_bit() {
        for (p, m) in [(2usize, 2usize), (2, 3), (4, 2), (4, 3)] {
            let map = LandenMap::generate(p, m, &GenLimits::default()).unwrap();
            // a specific awkward input: mixed signs and non-integer entries
            let den = Polynomial::new(
                (0..=p)
                    .map(|k| rat(2 * k as i64 + 3, 1 + (k as i64 % 3)))
                    .collect(),
            );
            let num = Polynomial::new(
                (0..p - 1).map(|k| rat(k as i64 - 2, 5)).collect(),
            );
            let f = RationalFunction::new(num, den);
            let (j, h) = transform_raw(&f, m).unwrap();
            let (jm, hm) = map.apply(&f).unwrap();
            assert_eq!(j, jm, "numerator mismatch at p={p} m={m}");
            assert_eq!(h, hm, "denominator mismatch at p={p} m={m}");
        }
    }

    #[test]
    fn apply_rejects_wrong_shapes() {
        let map = LandenMap::generate(4, 2, &GenLimits::default()).unwrap();
        let quad = RationalFunction::new(
            Polynomial::<Rational>::from_i64s(&[1]),
            Polynomial::from_i64s(&[1, 4, 15]),
        );
        assert!(matches!(
            map.apply(&quad),
            Err(Error::ArityMismatch { expected: 4, got: 2 })
        ));
        let wide = RationalFunction::new(
            Polynomial::<Rational>::from_i64s(&[1, 0, 0, 1]),
            Polynomial::from_i64s(&[1, 0, 2, 0, 3]),
        );
        assert!(matches!(map.apply(&wide), Err(Error::DegreeGap { .. })));
    }

    #[test]
    fn stored_formulas_are_primitive_integers() {
        for (p, m) in [(2usize, 2usize), (2, 3), (4, 2), (6, 2)] {
            let map = LandenMap::generate(p, m, &GenLimits::default()).unwrap();
            let mut lcm = num_bigint::BigInt::from(1);
            let mut gcd = num_bigint::BigInt::from(0);
            for g in map.den_formulas().iter().chain(map.num_formulas()) {
                if let Some((l, n)) = g.content_parts() {
                    use num_integer::Integer;
                    lcm = lcm.lcm(&l);
                    gcd = gcd.gcd(&n);
                }
            }
            assert_eq!(lcm, 1u32.into(), "denominators survive at p={p} m={m}");
            assert_eq!(gcd, 1u32.into(), "content survives at p={p} m={m}");
        }
    }

    #[test]
    fn generation_rejects_bad_dimensions_and_enforces_limits() {
        assert!(matches!(
            LandenMap::generate(3, 2, &GenLimits::default()),
            Err(Error::OddDegree(3))
        ));
        assert!(matches!(
            LandenMap::generate(4, 1, &GenLimits::default()),
            Err(Error::InvalidOrder(1))
        ));
        assert!(matches!(
            LandenMap::generate(4, 2, &GenLimits { max_terms: 10 }),
            Err(Error::ResourceLimit { limit: 10, .. })
        ));
    }

    #[test]
    fn text_roundtrip_is_identity() {
        for (p, m) in [(2usize, 2usize), (4, 2), (2, 3)] {
            let map = LandenMap::generate(p, m, &GenLimits::default()).unwrap();
            let text = map.to_text();
            let back = LandenMap::from_text(&text).unwrap();
            assert_eq!(map, back, "roundtrip at p={p} m={m}");
        }
    }

    #[test]
    fn text_format_shape() {
        let map = LandenMap::generate(2, 2, &GenLimits::default()).unwrap();
        let text = map.to_text();
        let mut lines = text.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("landen-map v1 p=2 m=2 scale="));
        let names: Vec<&str> = lines
            .map(|l| l.split_whitespace().next().unwrap())
            .collect();
        assert_eq!(names, vec!["den0", "den1", "den2", "num0"]);
    }

    #[test]
    fn malformed_text_is_rejected() {
        let good = LandenMap::generate(2, 2, &GenLimits::default()).unwrap().to_text();
        // wrong version
        let bad_version = good.replace("v1", "v9");
        assert!(matches!(
            LandenMap::from_text(&bad_version),
            Err(Error::VersionMismatch(v)) if v == "v9"
        ));
        // truncated
        let truncated: String = good.lines().take(2).collect::<Vec<_>>().join("\n");
        assert!(matches!(
            LandenMap::from_text(&truncated),
            Err(Error::FormatError(_))
        ));
        // mangled term
        let mangled = good.replace(':', ";");
        assert!(matches!(
            LandenMap::from_text(&mangled),
            Err(Error::FormatError(_))
        ));
        // empty
        assert!(LandenMap::from_text("").is_err());
    }

    #[test]
    fn save_and_load_through_files() {
        let dir = std::env::temp_dir().join("landen-map-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("map-4-2.txt");
        let map = LandenMap::generate(4, 2, &GenLimits::default()).unwrap();
        map.save(&path).unwrap();
        let back = LandenMap::load(&path).unwrap();
        assert_eq!(map, back);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn bilinear_helper_builds_what_it_says() {
        // 3 a0 b1 - a2 b0 at p = 2: vars a0=0, a2=2, b0=3, b1=4
        let g = bilinear(2, &[(3, 0, 1), (-1, 2, 0)]);
        let direct = v(0)
            .mul(&v(4))
            .mul_rational(&rat_int(3))
            .sub(&v(2).mul(&v(3)));
        assert_eq!(g, direct);
    }
}
