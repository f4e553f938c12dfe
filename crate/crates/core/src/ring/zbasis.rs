//! Rewriting Laurent polynomials in the basis `z = s^2 = q - 2 + 1/q`.
//!
//! A polynomial with integer `q`-powers and `q <-> 1/q` symmetric
//! `q`-dependence (coefficients may involve `l`) is a unique polynomial in
//! `z` with `l`-coefficients. The rewrite peels from the top `q`-degree down
//! and fails exactly when the input is not symmetric.

use super::{LaurentQL, RingError};

/// `z = q - 2 + 1/q` as a Laurent polynomial.
pub fn z_poly() -> LaurentQL {
    LaurentQL::q_half(2) - LaurentQL::int(2) + LaurentQL::q_half(-2)
}

/// Express `p` as `sum_g c_g(l) z^g`; returns the coefficients `c_0..c_G`.
///
/// Fails with `NotZExpressible` when `p` has half-integer `q`-powers or is
/// not symmetric under `q <-> 1/q`.
pub fn rewrite_in_z(p: &LaurentQL) -> Result<Vec<LaurentQL>, RingError> {
    if p.terms().any(|(&(eq, _), _)| eq % 2 != 0) {
        return Err(RingError::NotZExpressible);
    }
    let mut rem = p.clone();
    let mut coeffs: Vec<LaurentQL> = Vec::new();
    let z = z_poly();
    while !rem.is_zero() {
        let (_, qmax, _, _) = rem.exponent_range().unwrap();
        if qmax < 0 {
            return Err(RingError::NotZExpressible);
        }
        let g = (qmax / 2) as usize;
        // leading l-coefficient: the q^(qmax/2) stratum
        let mut lead = LaurentQL::zero();
        for (&(eq, el), c) in rem.terms() {
            if eq == qmax {
                lead.insert_add((0, el), c.clone());
            }
        }
        if coeffs.len() <= g {
            coeffs.resize(g + 1, LaurentQL::zero());
        }
        coeffs[g] = &coeffs[g] + &lead;
        rem = &rem - &(&lead * &z.pow(g as u32));
    }
    if coeffs.is_empty() {
        coeffs.push(LaurentQL::zero());
    }
    Ok(coeffs)
}

/// Evaluate `sum_g c_g z^g` back to a Laurent polynomial.
pub fn from_z_coeffs(coeffs: &[LaurentQL]) -> LaurentQL {
    let z = z_poly();
    let mut acc = LaurentQL::zero();
    for (g, c) in coeffs.iter().enumerate() {
        acc = &acc + &(c * &z.pow(g as u32));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_itself() {
        let coeffs = rewrite_in_z(&z_poly()).unwrap();
        assert_eq!(coeffs, vec![LaurentQL::zero(), LaurentQL::one()]);
    }

    #[test]
    fn lambda_times_shifted() {
        // l (q + 1/q) = l (z + 2)
        let p = &LaurentQL::l_half(2) * &(LaurentQL::q_half(2) + LaurentQL::q_half(-2));
        let coeffs = rewrite_in_z(&p).unwrap();
        assert_eq!(coeffs.len(), 2);
        assert_eq!(coeffs[0], LaurentQL::l_half(2).scale(&crate::ring::rat_int(2)));
        assert_eq!(coeffs[1], LaurentQL::l_half(2));
        assert_eq!(from_z_coeffs(&coeffs), p);
    }

    #[test]
    fn antisymmetric_is_rejected() {
        let p = LaurentQL::q_half(2) - LaurentQL::q_half(-2);
        assert_eq!(rewrite_in_z(&p), Err(RingError::NotZExpressible));
        // half-integer powers are rejected outright
        assert_eq!(rewrite_in_z(&LaurentQL::s()), Err(RingError::NotZExpressible));
    }

    #[test]
    fn round_trip_on_a_polynomial_in_z() {
        let z = z_poly();
        let c0 = LaurentQL::l_half(-3);
        let c1 = &LaurentQL::l_half(2) - &LaurentQL::int(4);
        let c2 = LaurentQL::int(7);
        let p = &(&c0 + &(&c1 * &z)) + &(&c2 * &z.pow(2));
        let coeffs = rewrite_in_z(&p).unwrap();
        assert_eq!(coeffs, vec![c0, c1, c2]);
        assert_eq!(from_z_coeffs(&coeffs), p);
    }
}
