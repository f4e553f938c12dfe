//! Polynomial gcd over the bivariate Laurent ring.
//!
//! Fraction reduction clears the Laurent shifts and rational denominators,
//! then runs a primitive polynomial-remainder-sequence gcd over Z, treating
//! the polynomial as an element of (Z[u])[v] with `u = q^(1/2)`,
//! `v = l^(1/2)`. Contents and primitive parts keep coefficient growth in
//! check; everything stays exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentQL, Rat};

/// Dense univariate polynomial over Z, index = exponent, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Dense in `v`, coefficients univariate in `u`.
type BPoly = Vec<UPoly>;

fn utrim(mut p: UPoly) -> UPoly {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn uzero(p: &UPoly) -> bool {
    p.is_empty()
}

fn udeg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if uzero(a) || uzero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    utrim(out)
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    utrim(out)
}

fn uscale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn ucontent(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn uprimitive(p: UPoly) -> UPoly {
    if uzero(&p) {
        return p;
    }
    let mut g = ucontent(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Exact division; `None` if the division leaves a remainder.
fn udivexact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!uzero(b), "division by zero polynomial");
    if uzero(a) {
        return Some(Vec::new());
    }
    if udeg(a) < udeg(b) {
        return None;
    }
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); udeg(a) - udeg(b) + 1];
    let lb = b.last().unwrap();
    while !uzero(&rem) && udeg(&rem) >= udeg(b) {
        let lr = rem.last().unwrap();
        let (q, r) = lr.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        let shift = udeg(&rem) - udeg(b);
        quot[shift] = q.clone();
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(uscale(b, &q));
        rem = usub(&rem, &sub);
    }
    if uzero(&rem) {
        Some(utrim(quot))
    } else {
        None
    }
}

/// Primitive-PRS gcd in Z[u]; result primitive with positive leading coefficient.
fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut a = uprimitive(a.clone());
    let mut b = uprimitive(b.clone());
    if uzero(&a) {
        return b;
    }
    if uzero(&b) {
        return a;
    }
    if udeg(&a) < udeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !uzero(&b) {
        let r = uprem(&a, &b);
        a = b;
        b = uprimitive(r);
    }
    uprimitive(a)
}

/// Pseudo-remainder of `a` by `b` in Z[u] (defined up to leading-coeff powers).
fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !uzero(&r) && udeg(&r) >= udeg(b) {
        let shift = udeg(&r) - udeg(b);
        let lr = r.last().unwrap().clone();
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(uscale(b, &lr));
        r = usub(&uscale(&r, &lb), &sub);
    }
    r
}

fn btrim(mut p: BPoly) -> BPoly {
    while p.last().map(uzero).unwrap_or(false) {
        p.pop();
    }
    p
}

fn bzero(p: &BPoly) -> bool {
    p.is_empty()
}

fn bdeg(p: &BPoly) -> usize {
    p.len().saturating_sub(1)
}

/// Content of `p` in the `v`-direction: gcd in Z[u] of the coefficients.
fn bcontent(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if !uzero(c) {
            g = ugcd(&g, c);
        }
    }
    g
}

fn bdiv_ucoeff(p: &BPoly, g: &UPoly) -> BPoly {
    p.iter()
        .map(|c| {
            if uzero(c) {
                Vec::new()
            } else {
                udivexact(c, g).expect("content division is exact")
            }
        })
        .collect()
}

fn bscale_u(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|x| umul(x, c)).collect()
}

fn bsub(a: &BPoly, b: &BPoly) -> BPoly {
    let mut out = vec![Vec::new(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = usub(&out[i], c);
    }
    btrim(out)
}

/// Pseudo-remainder in (Z[u])[v].
fn bprem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !bzero(&r) && bdeg(&r) >= bdeg(b) {
        let shift = bdeg(&r) - bdeg(b);
        let lr = r.last().unwrap().clone();
        let mut sub: BPoly = vec![Vec::new(); shift];
        sub.extend(bscale_u(b, &lr));
        r = bsub(&bscale_u(&r, &lb), &sub);
    }
    r
}

fn bprimitive(p: BPoly) -> BPoly {
    if bzero(&p) {
        return p;
    }
    let c = bcontent(&p);
    bdiv_ucoeff(&p, &c)
}

fn bgcd(a: &BPoly, b: &BPoly) -> BPoly {
    if bzero(a) {
        return b.clone();
    }
    if bzero(b) {
        return a.clone();
    }
    let ca = bcontent(a);
    let cb = bcontent(b);
    let cg = ugcd(&ca, &cb);
    let mut pa = bdiv_ucoeff(a, &ca);
    let mut pb = bdiv_ucoeff(b, &cb);
    if bdeg(&pa) < bdeg(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !bzero(&pb) {
        let r = bprem(&pa, &pb);
        pa = pb;
        pb = bprimitive(r);
    }
    let pp = bprimitive(pa);
    pp.iter().map(|c| umul(c, &cg)).collect()
}

/// Convert a Laurent polynomial to an integer bivariate polynomial, shifting
/// exponents to start at zero and clearing rational denominators.
fn to_bpoly(p: &LaurentQL) -> BPoly {
    let (qmin, qmax, lmin, lmax) = p.exponent_range().expect("nonzero");
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut out: BPoly = vec![vec![BigInt::zero(); (qmax - qmin + 1) as usize]; (lmax - lmin + 1) as usize];
    for (&(eq, el), c) in p.terms() {
        let scaled = c * Rat::from_integer(denom_lcm.clone());
        debug_assert!(scaled.denom().is_one());
        out[(el - lmin) as usize][(eq - qmin) as usize] = scaled.numer().clone();
    }
    out.iter_mut().for_each(|row| *row = utrim(std::mem::take(row)));
    btrim(out)
}

fn from_bpoly(p: &BPoly) -> LaurentQL {
    let mut out = LaurentQL::zero();
    for (el, row) in p.iter().enumerate() {
        for (eq, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.insert_add((eq as i64, el as i64), Rat::from_integer(c.clone()));
            }
        }
    }
    out
}

/// Gcd of two Laurent polynomials, up to a unit of the Laurent ring.
///
/// The result is a genuine polynomial (minimal exponents zero), primitive
/// over Z with positive leading coefficient.
pub(crate) fn laurent_gcd(a: &LaurentQL, b: &LaurentQL) -> LaurentQL {
    if a.is_zero() {
        return normalize_poly(b);
    }
    if b.is_zero() {
        return normalize_poly(a);
    }
    let g = bgcd(&to_bpoly(a), &to_bpoly(b));
    let mut p = from_bpoly(&g);
    if p.leading_sign() < 0 {
        p = -p;
    }
    p
}

fn normalize_poly(p: &LaurentQL) -> LaurentQL {
    if p.is_zero() {
        return LaurentQL::zero();
    }
    let (qmin, _, lmin, _) = p.exponent_range().unwrap();
    let mut q = from_bpoly(&to_bpoly(&p.shift(-qmin, -lmin)));
    if q.leading_sign() < 0 {
        q = -q;
    }
    q
}

/// Exact division in the Laurent ring; `None` when `g` does not divide `p`.
pub(crate) fn laurent_divexact(p: &LaurentQL, g: &LaurentQL) -> Option<LaurentQL> {
    assert!(!g.is_zero(), "division by zero");
    if p.is_zero() {
        return Some(LaurentQL::zero());
    }
    // Long division by leading terms in (eq, el)-lex order. When g divides p
    // the quotient support lies in the exponent box below (the extreme
    // q- and l-strata of a product never cancel), so any escape from the box
    // certifies a nonzero remainder.
    let (pq0, pq1, pl0, pl1) = p.exponent_range().unwrap();
    let (gq0, gq1, gl0, gl1) = g.exponent_range().unwrap();
    let (bq0, bq1) = (pq0 - gq0, pq1 - gq1);
    let (bl0, bl1) = (pl0 - gl0, pl1 - gl1);
    if bq1 < bq0 || bl1 < bl0 {
        return None;
    }
    let mut rem = p.clone();
    let mut quot = LaurentQL::zero();
    let (glead, gc) = {
        let (k, c) = g.terms().next_back().expect("nonzero divisor");
        (*k, c.clone())
    };
    while !rem.is_zero() {
        let (rk, rc) = {
            let (k, c) = rem.terms().next_back().unwrap();
            (*k, c.clone())
        };
        let tk = (rk.0 - glead.0, rk.1 - glead.1);
        if tk.0 < bq0 || tk.0 > bq1 || tk.1 < bl0 || tk.1 > bl1 {
            return None;
        }
        let t = LaurentQL::monomial(tk.0, tk.1, rc / &gc);
        quot = &quot + &t;
        rem = &rem - &(&t * g);
    }
    Some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentQL {
        LaurentQL::s()
    }

    #[test]
    fn gcd_of_s_squared_and_s() {
        let g = laurent_gcd(&(&s() * &s()), &s());
        // s up to a unit: as a polynomial starting at exponent 0 this is q - 1
        let expect = LaurentQL::q_half(2) - LaurentQL::one();
        assert_eq!(g, expect);
    }

    #[test]
    fn divexact_cancels() {
        let s2 = &s() * &s();
        let q = laurent_divexact(&s2, &s()).unwrap();
        assert_eq!(q, s());
        assert!(laurent_divexact(&(&s2 + &LaurentQL::one()), &s()).is_none());
    }

    #[test]
    fn gcd_with_lambda_content() {
        // gcd(l*s^2*(l-1), s*(l-1)) should be s*(l-1) up to units
        let lm1 = LaurentQL::l_half(2) - LaurentQL::one();
        let a = &(&(&s() * &s()) * &lm1) * &LaurentQL::l_half(2);
        let b = &s() * &lm1;
        let g = laurent_gcd(&a, &b);
        let q1 = laurent_divexact(&a, &g).unwrap();
        let q2 = laurent_divexact(&b, &g).unwrap();
        assert!(laurent_gcd(&q1, &q2).num_terms() == 1);
    }
}
