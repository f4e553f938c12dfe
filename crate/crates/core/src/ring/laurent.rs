//! Laurent polynomials in `q^(1/2)` and `l^(1/2)` with big-rational
//! coefficients.
//!
//! Exponents are stored doubled, so the key `(1, 0)` is `q^(1/2)` and
//! `(-2, 4)` is `q^(-1) l^2`. Keeping the doubled exponents in plain integers
//! makes half-integer bookkeeping exact and turns the "all integer or all
//! half-integer powers" checks used elsewhere into parity tests.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_int, Rat};

/// A Laurent polynomial in `q^(1/2)`, `l^(1/2)`.
///
/// The term map never contains zero coefficients; the zero polynomial is the
/// empty map. Values are immutable in practice: all operations build fresh
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentQL {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl LaurentQL {
    pub fn zero() -> Self {
        LaurentQL { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rat::one())
    }

    pub fn int(n: i64) -> Self {
        Self::monomial(0, 0, rat_int(n))
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c * q^(eq/2) * l^(el/2)` (doubled exponents).
    pub fn monomial(eq: i64, el: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, el), c);
        }
        LaurentQL { terms }
    }

    /// `q^(n/2)`.
    pub fn q_half(n: i64) -> Self {
        Self::monomial(n, 0, Rat::one())
    }

    /// `l^(n/2)`.
    pub fn l_half(n: i64) -> Self {
        Self::monomial(0, n, Rat::one())
    }

    /// The skein variable `s = q^(1/2) - q^(-1/2)`.
    pub fn s() -> Self {
        Self::q_half(1) - Self::q_half(-1)
    }

    /// `l^(1/2) - l^(-1/2)`.
    pub fn l_diff() -> Self {
        Self::l_half(1) - Self::l_half(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Iterate terms as `((eq, el), coeff)` in ascending key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, eq: i64, el: i64) -> Rat {
        self.terms.get(&(eq, el)).cloned().unwrap_or_else(Rat::zero)
    }

    pub(crate) fn insert_add(&mut self, key: (i64, i64), c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rat) -> Rat) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.insert_add(*k, f(c));
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply every exponent pair by `d` (the Adams substitution
    /// `q -> q^d`, `l -> l^d` on polynomials).
    pub fn adams(&self, d: i64) -> Self {
        let mut out = Self::zero();
        for (&(eq, el), c) in &self.terms {
            out.insert_add((eq * d, el * d), c.clone());
        }
        out
    }

    /// Substitute `q -> 1/q`, `l -> 1/l`.
    pub fn invert_vars(&self) -> Self {
        let mut out = Self::zero();
        for (&(eq, el), c) in &self.terms {
            out.insert_add((-eq, -el), c.clone());
        }
        out
    }

    /// Shift all exponents by `(dq, dl)` (multiply by a monomial).
    pub fn shift(&self, dq: i64, dl: i64) -> Self {
        let mut out = Self::zero();
        for (&(eq, el), c) in &self.terms {
            out.insert_add((eq + dq, el + dl), c.clone());
        }
        out
    }

    /// Extremes of the doubled exponents, `(min_eq, max_eq, min_el, max_el)`.
    /// Returns `None` for the zero polynomial.
    pub fn exponent_range(&self) -> Option<(i64, i64, i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut it = self.terms.keys();
        let &(q0, l0) = it.next().unwrap();
        let (mut qmin, mut qmax, mut lmin, mut lmax) = (q0, q0, l0, l0);
        for &(eq, el) in it {
            qmin = qmin.min(eq);
            qmax = qmax.max(eq);
            lmin = lmin.min(el);
            lmax = lmax.max(el);
        }
        Some((qmin, qmax, lmin, lmax))
    }

    /// Evaluate at `q^(1/2) = u`, `l^(1/2) = v` (both nonzero).
    pub fn eval(&self, u: &Rat, v: &Rat) -> Rat {
        assert!(!u.is_zero() && !v.is_zero(), "evaluation point must be nonzero");
        let mut acc = Rat::zero();
        for (&(eq, el), c) in &self.terms {
            acc += c * rat_pow(u, eq) * rat_pow(v, el);
        }
        acc
    }

    /// Split into `l`-degree slices: doubled `l`-exponent -> polynomial in `q` only.
    pub fn by_l_exponent(&self) -> BTreeMap<i64, LaurentQL> {
        let mut out: BTreeMap<i64, LaurentQL> = BTreeMap::new();
        for (&(eq, el), c) in &self.terms {
            out.entry(el).or_default().insert_add((eq, 0), c.clone());
        }
        out
    }

    /// True when no term involves `q` (doubled `q`-exponent zero everywhere).
    pub fn is_l_only(&self) -> bool {
        self.terms.keys().all(|&(eq, _)| eq == 0)
    }

    /// Leading coefficient in ascending `(eq, el)` order, i.e. of the greatest key.
    pub(crate) fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }
}

fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let p = x.pow(e.unsigned_abs() as u32);
    if e > 0 {
        p
    } else {
        p.recip()
    }
}

impl Add for &LaurentQL {
    type Output = LaurentQL;
    fn add(self, rhs: &LaurentQL) -> LaurentQL {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentQL {
    type Output = LaurentQL;
    fn sub(self, rhs: &LaurentQL) -> LaurentQL {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentQL {
    type Output = LaurentQL;
    fn mul(self, rhs: &LaurentQL) -> LaurentQL {
        let mut out = LaurentQL::zero();
        for (&(aq, al), ac) in &self.terms {
            for (&(bq, bl), bc) in &rhs.terms {
                out.insert_add((aq + bq, al + bl), ac * bc);
            }
        }
        out
    }
}

impl Neg for &LaurentQL {
    type Output = LaurentQL;
    fn neg(self) -> LaurentQL {
        self.map_coeffs(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $fn:ident) => {
        impl $trait for LaurentQL {
            type Output = LaurentQL;
            fn $fn(self, rhs: LaurentQL) -> LaurentQL {
                (&self).$fn(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentQL {
    type Output = LaurentQL;
    fn neg(self) -> LaurentQL {
        -&self
    }
}

impl fmt::Display for LaurentQL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::print_laurent(self))
    }
}

impl LaurentQL {
    /// Sign of the coefficient of the greatest `(eq, el)` key; 0 for zero.
    pub(crate) fn leading_sign(&self) -> i32 {
        match self.leading_coeff() {
            None => 0,
            Some(c) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentQL {
        LaurentQL::s()
    }

    #[test]
    fn s_is_difference_of_half_powers() {
        let p = LaurentQL::q_half(1) - LaurentQL::q_half(-1);
        assert_eq!(p, s());
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn s_squared() {
        // s * s = q - 2 + 1/q
        let expect = LaurentQL::q_half(2) - LaurentQL::int(2) + LaurentQL::q_half(-2);
        assert_eq!(&s() * &s(), expect);
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let p = &s() * &LaurentQL::l_diff();
        assert_eq!(&p + &LaurentQL::zero(), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn adams_doubles_exponents() {
        // psi_2(q^(1/2) - q^(-1/2)) = q - 1/q
        let got = s().adams(2);
        let expect = LaurentQL::q_half(2) - LaurentQL::q_half(-2);
        assert_eq!(got, expect);
        // composition law via polynomials
        let p = &s() * &LaurentQL::l_half(3);
        assert_eq!(p.adams(3).adams(2), p.adams(6));
    }

    #[test]
    fn eval_matches_structure() {
        let p = &s() * &s();
        let u = Rat::new(3.into(), 2.into());
        let v = Rat::one();
        let sval = &u - u.recip();
        assert_eq!(p.eval(&u, &v), &sval * &sval);
    }
}
