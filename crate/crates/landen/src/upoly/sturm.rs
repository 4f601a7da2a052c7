//! Counting distinct real roots with Sturm chains (exact rational
//! arithmetic), used to certify that a denominator has no real poles.

use num_traits::Signed;

use super::Polynomial;
use crate::scalars::Rational;

/// Number of *distinct* real roots of `p` (multiplicities collapsed).
///
/// The chain starts from the squarefree part `p / gcd(p, p')`, then the sign
/// variations of the standard sequence at -inf and +inf are differenced.
/// Degree-zero and zero polynomials have no roots by convention.
pub fn real_root_count(p: &Polynomial<Rational>) -> usize {
    let Some(deg) = p.degree() else { return 0 };
    if deg == 0 {
        return 0;
    }
    let deriv = p.derivative();
    let g = p.gcd(&deriv);
    let sf = p.div_exact(&g).expect("gcd divides the polynomial");
    if sf.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let at_neg = variations(&chain, SignAt::NegInfinity);
    let at_pos = variations(&chain, SignAt::PosInfinity);
    at_neg - at_pos
}

fn sturm_chain(p: &Polynomial<Rational>) -> Vec<Polynomial<Rational>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2]
            .div_rem(&chain[n - 1])
            .expect("division over a field");
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

#[derive(Clone, Copy)]
enum SignAt {
    NegInfinity,
    PosInfinity,
}

/// Sign of a polynomial at +/-infinity: leading sign, flipped at -inf for odd
/// degree.
fn sign_at(p: &Polynomial<Rational>, end: SignAt) -> i8 {
    let Some(deg) = p.degree() else { return 0 };
    let lead = p.leading();
    let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
    if matches!(end, SignAt::NegInfinity) && deg % 2 == 1 {
        s = -s;
    }
    s
}

fn variations(chain: &[Polynomial<Rational>], end: SignAt) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for p in chain {
        let s = sign_at(p, end);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}
