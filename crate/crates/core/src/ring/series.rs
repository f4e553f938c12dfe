//! Truncated Laurent series in `y`, where `q = e^y` and `l` stays symbolic.
//!
//! Substituting `q^(a/2) -> sum_n (a/2)^n y^n / n!` turns a rational function
//! of `q^(1/2)`, `l^(1/2)` into a Laurent series in `y` whose coefficients
//! are Laurent polynomials in `l^(1/2)` with rational coefficients. A finite
//! pole order in `y` is supported; all arithmetic is exact.

use num_traits::{One, Zero};

use super::{rat_int, LaurentQL, Rat, RatFn, RingError};

/// Coefficients of `y^(lead) .. y^(lead + coeffs.len() - 1)`; each entry is a
/// Laurent polynomial in `l^(1/2)` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSeries {
    lead: i64,
    coeffs: Vec<LaurentQL>,
}

impl YSeries {
    pub fn lead(&self) -> i64 {
        self.lead
    }

    /// Greatest order carried by the truncation.
    pub fn order(&self) -> i64 {
        self.lead + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `y^n`; zero outside the carried window below the
    /// truncation order, panics above it.
    pub fn coeff(&self, n: i64) -> LaurentQL {
        assert!(n <= self.order(), "coefficient beyond truncation order");
        if n < self.lead {
            return LaurentQL::zero();
        }
        self.coeffs[(n - self.lead) as usize].clone()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &LaurentQL)> {
        self.coeffs.iter().enumerate().map(|(i, c)| (self.lead + i as i64, c))
    }

    /// Equality of all coefficients up to the smaller truncation order.
    pub fn agrees_with(&self, other: &YSeries) -> bool {
        let hi = self.order().min(other.order());
        let lo = self.lead.min(other.lead);
        (lo..=hi).all(|n| self.coeff(n) == other.coeff(n))
    }

    pub fn mul_truncated(&self, other: &YSeries, order: i64) -> YSeries {
        let lead = self.lead + other.lead;
        let len = (order - lead + 1).max(0) as usize;
        let mut coeffs = vec![LaurentQL::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < len {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        YSeries { lead, coeffs }
    }

    pub fn add(&self, other: &YSeries) -> YSeries {
        let lead = self.lead.min(other.lead);
        let order = self.order().min(other.order());
        let len = (order - lead + 1).max(0) as usize;
        let mut coeffs = vec![LaurentQL::zero(); len];
        for (n, c) in self.coeffs() {
            if n <= order {
                coeffs[(n - lead) as usize] = &coeffs[(n - lead) as usize] + c;
            }
        }
        for (n, c) in other.coeffs() {
            if n <= order {
                coeffs[(n - lead) as usize] = &coeffs[(n - lead) as usize] + c;
            }
        }
        YSeries { lead, coeffs }
    }
}

/// Series of a Laurent polynomial to orders `0..=n`: every monomial
/// `c q^(eq/2) l^(el/2)` contributes `c (eq/2)^n / n! l^(el/2)`.
fn poly_series(p: &LaurentQL, n: i64) -> Vec<LaurentQL> {
    let mut out = vec![LaurentQL::zero(); (n + 1) as usize];
    for (&(eq, el), c) in p.terms() {
        let a = Rat::new(eq.into(), 2.into());
        let mut pw = Rat::one();
        let mut fact = Rat::one();
        for k in 0..=n {
            if k > 0 {
                pw *= &a;
                fact *= rat_int(k);
            }
            let coeff = c * &pw / &fact;
            if !coeff.is_zero() {
                out[k as usize] = &out[k as usize] + &LaurentQL::monomial(0, el, coeff);
            }
        }
    }
    out
}

/// Expand `f` as a Laurent series in `y` up to and including `y^order`.
///
/// A pole of finite order is allowed: the result starts at the pole order of
/// the denominator minus the vanishing order of the numerator.
pub fn expand_y(f: &RatFn, order: i64) -> Result<YSeries, RingError> {
    if f.is_zero() {
        return Ok(YSeries { lead: order, coeffs: vec![LaurentQL::zero()] });
    }
    let den = f.den();
    // The y-valuation of a nonzero Laurent polynomial is at most its
    // q-degree spread (in whole powers of q).
    let bound = den
        .exponent_range()
        .map(|(q0, q1, _, _)| (q1 - q0) / 2 + 1)
        .unwrap_or(0);
    let work = order.max(0) + bound + 1;
    let ds = poly_series(den, work);
    let p0 = match ds.iter().position(|c| !c.is_zero()) {
        Some(p) => p as i64,
        None => return Err(RingError::EssentialSingularity),
    };
    let ns = poly_series(f.num(), order.max(0) + p0);
    // Quotient of ns by ds, shifted: f = y^{-p0} * ns / (ds >> p0).
    let dshift: Vec<&LaurentQL> = ds[p0 as usize..].iter().collect();
    let d0 = dshift[0];
    let d0_inv = invert_l_unit(d0)?;
    let len = (order + p0 + 1) as usize;
    let mut quot = vec![LaurentQL::zero(); len];
    for n in 0..len {
        let mut acc = if n < ns.len() { ns[n].clone() } else { LaurentQL::zero() };
        for k in 1..=n.min(dshift.len() - 1) {
            acc = &acc - &(dshift[k] * &quot[n - k]);
        }
        quot[n] = mul_l_ratfn(&acc, &d0_inv);
    }
    Ok(YSeries { lead: -p0, coeffs: quot })
}

/// Inverse of a Laurent polynomial in `l` only, as a rational function.
fn invert_l_unit(p: &LaurentQL) -> Result<RatFn, RingError> {
    RatFn::new(LaurentQL::one(), p.clone())
}

/// Multiply an `l`-only polynomial by an `l`-only rational function; the
/// product must clear the denominator (it does for series division because
/// the recurrences stay polynomial after the leading-unit division, checked).
fn mul_l_ratfn(p: &LaurentQL, f: &RatFn) -> LaurentQL {
    let prod = &RatFn::from(p.clone()) * f;
    prod.as_laurent()
        .cloned()
        .unwrap_or_else(|| panic!("series coefficient left a denominator: {prod:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sfn() -> RatFn {
        RatFn::from(LaurentQL::s())
    }

    #[test]
    fn s_expands_to_sinh_series() {
        // s = e^(y/2) - e^(-y/2) = y + y^3/24 + ...
        let ser = expand_y(&sfn(), 3).unwrap();
        assert_eq!(ser.coeff(0), LaurentQL::zero());
        assert_eq!(ser.coeff(1), LaurentQL::one());
        assert_eq!(ser.coeff(2), LaurentQL::zero());
        assert_eq!(ser.coeff(3), LaurentQL::from_rat(Rat::new(1.into(), 24.into())));
    }

    #[test]
    fn fundamental_dimension_series() {
        // (l^(1/2)-l^(-1/2))/s = (l^(1/2)-l^(-1/2)) (1/y - y/24 + ...)
        let dim = RatFn::new(LaurentQL::l_diff(), LaurentQL::s()).unwrap();
        let ser = expand_y(&dim, 1).unwrap();
        let ld = LaurentQL::l_diff();
        assert_eq!(ser.lead(), -1);
        assert_eq!(ser.coeff(-1), ld);
        assert_eq!(ser.coeff(0), LaurentQL::zero());
        assert_eq!(ser.coeff(1), ld.scale(&Rat::new((-1).into(), 24.into())));
    }

    #[test]
    fn constant_lambda_series() {
        let ser = expand_y(&RatFn::from(LaurentQL::l_half(2)), 4).unwrap();
        assert_eq!(ser.coeff(0), LaurentQL::l_half(2));
        for n in 1..=4 {
            assert!(ser.coeff(n).is_zero());
        }
    }

    #[test]
    fn multiplicativity_on_polynomials() {
        let f = RatFn::from(&LaurentQL::s() + &LaurentQL::l_half(1));
        let g = RatFn::from(&LaurentQL::q_half(3) - &LaurentQL::l_half(-2));
        let lhs = expand_y(&(&f * &g), 5).unwrap();
        let rhs = expand_y(&f, 5).unwrap().mul_truncated(&expand_y(&g, 5).unwrap(), 5);
        assert!(lhs.agrees_with(&rhs));
    }
}
