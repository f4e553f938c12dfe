//! Reduced fractions of Laurent polynomials — the value type for all link
//! invariants.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::{laurent_divexact, laurent_gcd};
use super::{LaurentQL, Rat, RingError};

/// A rational function of `q^(1/2)`, `l^(1/2)` in canonical reduced form.
///
/// Canonical form: `den` is a genuine polynomial (minimal exponents zero)
/// with no common factor with `num` and with the coefficient of its greatest
/// `(eq, el)` key equal to one; the constant `0` is `0/1`. Equality is plain
/// structural equality of the canonical fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: LaurentQL,
    den: LaurentQL,
}

impl RatFn {
    /// Build `num/den` in canonical form. Fails on a zero denominator.
    pub fn new(num: LaurentQL, den: LaurentQL) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFn { num, den: LaurentQL::one() });
        }
        let (nq, _, nl, _) = num.exponent_range().unwrap();
        let (dq, _, dl, _) = den.exponent_range().unwrap();
        let mut n = num.shift(-nq, -nl);
        let mut d = den.shift(-dq, -dl);
        let g = laurent_gcd(&n, &d);
        if !g.is_one() {
            n = laurent_divexact(&n, &g).expect("gcd divides numerator");
            d = laurent_divexact(&d, &g).expect("gcd divides denominator");
        }
        // The quotients may have picked up a monomial offset; push any
        // denominator offset into the numerator to pin the canonical form.
        let (dq2, _, dl2, _) = d.exponent_range().unwrap();
        d = d.shift(-dq2, -dl2);
        let lead = d.leading_coeff().unwrap().clone();
        let inv = lead.recip();
        n = n.scale(&inv).shift(nq - dq - dq2, nl - dl - dl2);
        d = d.scale(&inv);
        Ok(RatFn { num: n, den: d })
    }

    pub fn zero() -> Self {
        RatFn { num: LaurentQL::zero(), den: LaurentQL::one() }
    }

    pub fn one() -> Self {
        RatFn { num: LaurentQL::one(), den: LaurentQL::one() }
    }

    pub fn int(n: i64) -> Self {
        RatFn { num: LaurentQL::int(n), den: LaurentQL::one() }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFn { num: LaurentQL::from_rat(c), den: LaurentQL::one() }
    }

    pub fn num(&self) -> &LaurentQL {
        &self.num
    }

    pub fn den(&self) -> &LaurentQL {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentQL> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self, RingError> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// Integer power, negative allowed (then `self` must be nonzero).
    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return RatFn::one();
        }
        let base = if e < 0 {
            self.recip().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = RatFn::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// `s^e` as a rational function, any integer `e`.
    pub fn s_pow(e: i64) -> Self {
        RatFn::from(LaurentQL::s()).powi(e)
    }

    /// `q -> q^d`, `l -> l^d` on numerator and denominator.
    pub fn adams(&self, d: i64) -> Self {
        assert!(d >= 1, "adams substitution needs d >= 1");
        RatFn::new(self.num.adams(d), self.den.adams(d)).expect("nonzero denominator")
    }

    /// `q -> 1/q`, `l -> 1/l`.
    pub fn invert_vars(&self) -> Self {
        RatFn::new(self.num.invert_vars(), self.den.invert_vars()).expect("nonzero denominator")
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluate at `q^(1/2) = u`, `l^(1/2) = v`; `None` when the denominator
    /// vanishes there.
    pub fn eval(&self, u: &Rat, v: &Rat) -> Option<Rat> {
        let d = self.den.eval(u, v);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(u, v) / d)
    }
}

impl From<LaurentQL> for RatFn {
    fn from(p: LaurentQL) -> Self {
        RatFn { num: p, den: LaurentQL::one() }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        assert!(!rhs.is_zero(), "division by zero invariant");
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominator")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $fn:ident) => {
        impl $trait for RatFn {
            type Output = RatFn;
            fn $fn(self, rhs: RatFn) -> RatFn {
                (&self).$fn(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::print_expr(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentQL {
        LaurentQL::s()
    }

    #[test]
    fn zero_numerator_is_canonical_zero() {
        let f = RatFn::new(LaurentQL::zero(), &s() * &LaurentQL::l_half(7)).unwrap();
        assert_eq!(f, RatFn::zero());
        assert!(RatFn::new(LaurentQL::one(), LaurentQL::zero()).is_err());
    }

    #[test]
    fn exact_quotient_cancels() {
        // s^2 / s = s
        let f = RatFn::new(&s() * &s(), s()).unwrap();
        assert_eq!(f, RatFn::from(s()));
    }

    #[test]
    fn common_factor_invariance() {
        // normalize(a*c, b*c) == normalize(a, b)
        let a = &LaurentQL::l_half(2) - &LaurentQL::one();
        let b = s();
        let c = &(&s() * &s()) + &LaurentQL::l_half(-3);
        let f1 = RatFn::new(a.clone(), b.clone()).unwrap();
        let f2 = RatFn::new(&a * &c, &b * &c).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn lambda_factor_reduction() {
        // (l - 1)/(l^(1/2) - l^(-1/2)) reduces to l^(1/2); check by evaluation
        let num = &LaurentQL::l_half(2) - &LaurentQL::one();
        let den = LaurentQL::l_diff();
        let f = RatFn::new(num, den).unwrap();
        let pts = [(3, 2), (5, 7), (2, 9), (11, 3), (7, 4)];
        for (a, b) in pts {
            let u = Rat::new(a.into(), b.into());
            let v = Rat::new((a + b).into(), a.into());
            assert_eq!(f.eval(&u, &v).unwrap(), v);
        }
        assert_eq!(f, RatFn::from(LaurentQL::l_half(1)));
    }

    #[test]
    fn adams_on_quotients() {
        // psi_2 of (l^(1/2)-l^(-1/2))/s = (l - 1/l)/(q - 1/q)
        let dim = RatFn::new(LaurentQL::l_diff(), s()).unwrap();
        let got = dim.adams(2);
        let expect = RatFn::new(
            LaurentQL::l_half(2) - LaurentQL::l_half(-2),
            LaurentQL::q_half(2) - LaurentQL::q_half(-2),
        )
        .unwrap();
        assert_eq!(got, expect);
        // ring homomorphism on a product
        let f = RatFn::new(&s() + &LaurentQL::l_half(1), s()).unwrap();
        assert_eq!((&f * &dim).adams(3), &f.adams(3) * &dim.adams(3));
    }

    #[test]
    fn field_laws_spot_check() {
        let f = RatFn::new(&s() + &LaurentQL::one(), s()).unwrap();
        let g = RatFn::new(LaurentQL::l_diff(), &s() * &s()).unwrap();
        let h = RatFn::int(3);
        let left = &(&f + &g) * &h;
        let right = &(&f * &h) + &(&g * &h);
        assert_eq!(left, right);
        assert_eq!(&(&f / &g) * &g, f);
    }
}
