//! Dense univariate polynomials over a [`FieldContext`].

use crate::error::FieldError;
use crate::gf::{FieldContext, FieldElement};

/// Coefficients in increasing degree; the canonical form has no trailing
/// zeros, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldContext) -> Self {
        Poly {
            coeffs: vec![ctx.one()],
        }
    }

    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_indices(ctx: &FieldContext, indices: &[u64]) -> Result<Self, FieldError> {
        let coeffs = indices.iter().map(|&i| ctx.element(i)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn monomial(ctx: &FieldContext, c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(ctx: &FieldContext, n: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); n + 1];
        coeffs[0] = ctx.neg(ctx.one());
        coeffs[n] = ctx.add(coeffs[n], ctx.one());
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, ctx: &FieldContext, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| ctx.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficient indices padded with zeros to `len`.
    pub fn to_indices(&self, len: usize) -> Vec<u64> {
        let mut out = vec![0u64; len.max(self.coeffs.len())];
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            *o = c.index();
        }
        out
    }

    pub fn add(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| ctx.add(self.coeff(ctx, i), other.coeff(ctx, i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| ctx.sub(self.coeff(ctx, i), other.coeff(ctx, i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: FieldElement, ctx: &FieldContext) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| ctx.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &Poly, ctx: &FieldContext) -> Result<(Poly, Poly), FieldError> {
        let dd = d.degree().ok_or(FieldError::DivisionByZero)?;
        let lead_inv = ctx.inv(d.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![ctx.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = ctx.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + i] = ctx.sub(rem[k - dd + i], ctx.mul(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, d: &Poly, ctx: &FieldContext) -> Result<Poly, FieldError> {
        self.div_rem(d, ctx).map(|(_, r)| r)
    }

    /// Reduction modulo `X^n - 1` by folding exponents.
    pub fn reduce_cyclic(&self, n: usize, ctx: &FieldContext) -> Poly {
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![ctx.zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = ctx.add(out[i % n], c);
        }
        Poly::new(out)
    }

    /// `self(X^k) mod (X^n - 1)`.
    pub fn substitute_power(&self, k: u64, n: usize, ctx: &FieldContext) -> Poly {
        let mut out = vec![ctx.zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let e = ((i as u128 * k as u128) % n as u128) as usize;
            out[e] = ctx.add(out[e], c);
        }
        Poly::new(out)
    }

    pub fn monic(&self, ctx: &FieldContext) -> Poly {
        match self.leading() {
            Some(l) => self.scale(ctx.inv(l), ctx),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly, ctx: &FieldContext) -> Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.rem(&y, ctx).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic(ctx)
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, x: FieldElement, ctx: &FieldContext) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(ctx.zero(), |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// Coefficient map into another field (e.g. a subfield embedding).
    pub fn map(&self, f: impl Fn(FieldElement) -> FieldElement) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// Truncation modulo `X^len`.
    pub fn truncate(&self, len: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(len).copied().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn division_identity() {
        let f = make_field(3, 2).unwrap();
        let a = Poly::from_indices(&f, &[1, 2, 0, 5, 7, 3]).unwrap();
        let d = Poly::from_indices(&f, &[4, 0, 1]).unwrap();
        let (q, r) = a.div_rem(&d, &f).unwrap();
        assert_eq!(q.mul(&d, &f).add(&r, &f), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.div_rem(&Poly::zero(), &f), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn gcd_of_cyclotomic_factors() {
        let f = make_field(2, 1).unwrap();
        let x3 = Poly::x_pow_minus_one(&f, 3);
        let x5 = Poly::x_pow_minus_one(&f, 5);
        assert_eq!(Poly::gcd(&x3, &x5, &f), Poly::from_indices(&f, &[1, 1]).unwrap());
        assert_eq!(Poly::gcd(&Poly::zero(), &Poly::zero(), &f), Poly::zero());
    }

    #[test]
    fn substitution_and_cyclic_reduction() {
        let f = make_field(2, 1).unwrap();
        let g = Poly::from_indices(&f, &[1, 1]).unwrap();
        // 1 + X^{-1} mod X^3 - 1 = 1 + X^2
        let s = g.substitute_power(2, 3, &f);
        assert_eq!(s, Poly::from_indices(&f, &[1, 0, 1]).unwrap());
        let sq = g.mul(&g, &f).mul(&g, &f).reduce_cyclic(2, &f);
        assert_eq!(sq.to_indices(2), vec![0, 0]);
    }
}
