//! Polynomials in the distinguished variable `y` with Laurent polynomial
//! coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, ExponentVec, LaurentPoly, Result, Scalar};

/// Dense in `y`: `coeffs[i]` is the coefficient of `y^i`. Trailing zero
/// coefficients are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct YPoly<C> {
    nvars: usize,
    coeffs: Vec<LaurentPoly<C>>,
}

impl<C: Scalar> YPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        YPoly {
            nvars,
            coeffs: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_laurent(LaurentPoly::one(nvars))
    }

    pub fn y(nvars: usize) -> Self {
        Self::y_pow(nvars, 1)
    }

    pub fn y_pow(nvars: usize, k: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(nvars); k];
        coeffs.push(LaurentPoly::one(nvars));
        YPoly { nvars, coeffs }
    }

    pub fn from_laurent(c: LaurentPoly<C>) -> Self {
        Self::from_coeffs(c.nvars(), vec![c])
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_laurent(LaurentPoly::constant(nvars, c))
    }

    pub fn from_coeffs(nvars: usize, coeffs: Vec<LaurentPoly<C>>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.nvars() == nvars));
        let mut p = YPoly { nvars, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `y`-degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `y`-degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[LaurentPoly<C>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> LaurentPoly<C> {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.nvars))
    }

    pub fn leading(&self) -> Option<&LaurentPoly<C>> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// The `y`-free part if the polynomial has `y`-degree 0 (or is zero).
    pub fn as_laurent(&self) -> Option<LaurentPoly<C>> {
        match self.coeffs.len() {
            0 => Some(LaurentPoly::zero(self.nvars)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_polynomial())
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly<C>) -> LaurentPoly<C>) -> Self {
        Self::from_coeffs(self.nvars, self.coeffs.iter().map(&mut f).collect())
    }

    pub fn scale(&self, c: &LaurentPoly<C>) -> Self {
        self.map_coeffs(|a| a * c)
    }

    pub fn scale_scalar(&self, c: &C) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    pub fn mul_y_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![LaurentPoly::zero(self.nvars); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly {
            nvars: self.nvars,
            coeffs,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.nvars,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&C::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Evaluates at `y = v` by Horner's rule.
    pub fn eval(&self, v: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut acc = LaurentPoly::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    /// Composition `self(g(y))`.
    pub fn compose(&self, g: &YPoly<C>) -> Self {
        let mut acc = Self::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::from_laurent(c.clone());
        }
        acc
    }

    /// `self(y + s)`.
    pub fn shift(&self, s: &LaurentPoly<C>) -> Self {
        let lin = Self::from_coeffs(self.nvars, vec![s.clone(), LaurentPoly::one(self.nvars)]);
        self.compose(&lin)
    }

    /// `f(y - a_1/n)`, which has no `y^{n-1}` term, together with the shift
    /// `a_1/n`.
    pub fn depress(&self) -> Result<(Self, LaurentPoly<C>)> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = self.deg();
        if n == 0 {
            return Ok((self.clone(), LaurentPoly::zero(self.nvars)));
        }
        let s = self.coeff(n - 1).scale(&(C::one() / C::from_i64(n as i64)));
        if s.is_zero() {
            return Ok((self.clone(), s));
        }
        Ok((self.shift(&-&s), s))
    }

    /// `x_i -> x_i^{-1}` in every coefficient.
    pub fn mero_involute(&self) -> Self {
        self.map_coeffs(|c| c.involute())
    }

    /// `x_i -> t_i^k` in every coefficient.
    pub fn scale_exponents(&self, k: i64) -> Self {
        self.map_coeffs(|c| c.scale_exponents(k))
    }

    /// Division with remainder by a monic divisor.
    pub fn div_rem(&self, g: &YPoly<C>) -> Result<(Self, Self)> {
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let m = g.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= m {
            return Ok((Self::zero(self.nvars), self.clone()));
        }
        let mut quot = vec![LaurentPoly::zero(self.nvars); rem.len() - m];
        for i in (m..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[i], LaurentPoly::zero(self.nvars));
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs[..m].iter().enumerate() {
                let t = gj * &c;
                rem[i - m + j] = &rem[i - m + j] - &t;
            }
            quot[i - m] = c;
        }
        rem.truncate(m);
        Ok((
            Self::from_coeffs(self.nvars, quot),
            Self::from_coeffs(self.nvars, rem),
        ))
    }

    /// Total degree in `x` of the largest coefficient (0 for constants).
    pub fn max_coeff_degree(&self) -> i64 {
        self.coeffs
            .iter()
            .filter_map(|c| c.max_total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Views the polynomial as a Laurent polynomial in `nvars + 1` variables
    /// with `y` last.
    pub fn to_laurent(&self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.nvars + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            for (e, v) in c.iter() {
                let mut x = e.0.clone();
                x.push(i as i64);
                out.add_term(ExponentVec(x), v.clone());
            }
        }
        out
    }

    /// Inverse of [`to_laurent`](Self::to_laurent); fails on negative `y`
    /// exponents.
    pub fn from_laurent_with_y(p: &LaurentPoly<C>) -> Result<Self> {
        let nvars = p
            .nvars()
            .checked_sub(1)
            .ok_or_else(|| Error::Invalid("no y variable".into()))?;
        let mut coeffs: Vec<LaurentPoly<C>> = Vec::new();
        for (e, v) in p.iter() {
            let k = *e.0.last().unwrap();
            if k < 0 {
                return Err(Error::NegativeExponent);
            }
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, LaurentPoly::zero(nvars));
            }
            coeffs[k].add_term(ExponentVec(e.0[..nvars].to_vec()), v.clone());
        }
        Ok(Self::from_coeffs(nvars, coeffs))
    }
}

impl<C: Scalar> Add for &YPoly<C> {
    type Output = YPoly<C>;
    fn add(self, rhs: &YPoly<C>) -> YPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::from_coeffs(
            self.nvars,
            (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect(),
        )
    }
}

impl<C: Scalar> Sub for &YPoly<C> {
    type Output = YPoly<C>;
    fn sub(self, rhs: &YPoly<C>) -> YPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::from_coeffs(
            self.nvars,
            (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect(),
        )
    }
}

impl<C: Scalar> Mul for &YPoly<C> {
    type Output = YPoly<C>;
    fn mul(self, rhs: &YPoly<C>) -> YPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero(self.nvars);
        }
        let mut out = vec![LaurentPoly::zero(self.nvars); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        YPoly::from_coeffs(self.nvars, out)
    }
}

impl<C: Scalar> Neg for &YPoly<C> {
    type Output = YPoly<C>;
    fn neg(self) -> YPoly<C> {
        self.map_coeffs(|c| -c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Scalar> $tr for YPoly<C> {
            type Output = YPoly<C>;
            fn $m(self, rhs: YPoly<C>) -> YPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Scalar> Neg for YPoly<C> {
    type Output = YPoly<C>;
    fn neg(self) -> YPoly<C> {
        -&self
    }
}

/// Constant-coefficient helper used by tests and examples: `c * x^e * y^k`.
pub fn ymono<C: Scalar>(e: ExponentVec, k: usize, c: C) -> YPoly<C> {
    let nvars = e.len();
    if c.is_zero() {
        return YPoly::zero(nvars);
    }
    YPoly::from_laurent(LaurentPoly::monomial(e, c)).mul_y_pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ev, q, Q};

    fn x(e: ExponentVec, c: i64) -> YPoly<Q> {
        ymono(e, 0, q(c, 1))
    }

    fn y(k: usize) -> YPoly<Q> {
        YPoly::y_pow(1, k)
    }

    #[test]
    fn depress_examples() {
        let f = &y(2) - &x(ev![3], 1);
        let (g, s) = f.depress().unwrap();
        assert_eq!(g, f);
        assert!(s.is_zero());

        // y^2 + 2xy + x^3 -> y^2 - x^2 + x^3, shift x
        let f = &(&y(2) + &ymono(ev![1], 1, q(2, 1))) + &x(ev![3], 1);
        let (g, s) = f.depress().unwrap();
        assert_eq!(g, &(&y(2) - &x(ev![2], 1)) + &x(ev![3], 1));
        assert_eq!(s, LaurentPoly::monomial(ev![1], q(1, 1)));
        assert_eq!(g.shift(&s), f);

        // y^3 + 3y^2 -> y^3 - 3y + 2, shift 1
        let f = &y(3) + &ymono(ev![0], 2, q(3, 1));
        let (g, s) = f.depress().unwrap();
        let expect = &(&y(3) - &ymono(ev![0], 1, q(3, 1))) + &x(ev![0], 2);
        assert_eq!(g, expect);
        assert_eq!(s, LaurentPoly::constant(1, q(1, 1)));

        let nm = ymono(ev![0], 2, q(2, 1));
        assert_eq!(nm.depress(), Err(Error::NotMonic));
    }

    #[test]
    fn division_by_monic() {
        let g = &y(2) - &x(ev![1], 1);
        let a = &(&y(3) + &x(ev![2], 5)) + &ymono(ev![-1], 1, q(1, 3));
        let (qt, r) = a.div_rem(&g).unwrap();
        assert!(r.deg() < 2);
        assert_eq!(&(&qt * &g) + &r, a);
    }

    #[test]
    fn involution_is_involutive() {
        let f = &(&y(2) - &x(ev![3], 1)) + &ymono(ev![-2], 1, q(7, 2));
        assert_eq!(
            f.mero_involute(),
            &(&y(2) - &x(ev![-3], 1)) + &ymono(ev![2], 1, q(7, 2))
        );
        assert_eq!(f.mero_involute().mero_involute(), f);
    }

    #[test]
    fn laurent_view_roundtrip() {
        let f = &(&y(2) - &x(ev![3], 1)) + &ymono(ev![-2], 1, q(7, 2));
        assert_eq!(YPoly::from_laurent_with_y(&f.to_laurent()).unwrap(), f);
    }
}
