//! Sparse Laurent polynomials in `x1, ..., xe`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exponent::{grlex_cmp, valuation_cmp};
use crate::{Error, ExponentVec, Result, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<C> {
    nvars: usize,
    terms: BTreeMap<ExponentVec, C>,
}

/// Initial form data of a nonzero Laurent polynomial: the homogeneous
/// component of least total degree, its lexicographically greatest exponent,
/// and the coefficient there.
#[derive(Clone, PartialEq, Debug)]
pub struct OrderData<C> {
    pub initial_form: LaurentPoly<C>,
    pub exp: ExponentVec,
    pub inco: C,
    pub monomial: LaurentPoly<C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(ExponentVec::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn monomial(exp: ExponentVec, c: C) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVec::unit(nvars, i, 1), C::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExponentVec, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(
                e.len(),
                nvars,
                "exponent length must match the variable count"
            );
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVec, &C)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &ExponentVec> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &ExponentVec) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: ExponentVec, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// `Some(c)` if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVec, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_nonneg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &ExponentVec, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e + exp, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.total_degree()).min()
    }

    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Coordinate-wise minimum of the support; `None` for zero.
    pub fn support_min(&self) -> Option<ExponentVec> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.clone();
        let min = it.fold(first, |acc, e| {
            acc.iter().zip(&e.0).map(|(a, b)| *a.min(b)).collect()
        });
        Some(ExponentVec(min))
    }

    pub fn homogeneous_component(&self, deg: i64) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of total degree above `deg`.
    pub fn truncate_above(&self, deg: i64) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() <= deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn initial_data(&self) -> Result<OrderData<C>> {
        let exp = self
            .terms
            .keys()
            .min_by(|a, b| valuation_cmp(a, b))
            .ok_or(Error::ZeroPolynomial)?
            .clone();
        let initial_form = self.homogeneous_component(exp.total_degree());
        let inco = self.coeff(&exp);
        let monomial = Self::monomial(exp.clone(), inco.clone());
        Ok(OrderData {
            initial_form,
            exp,
            inco,
            monomial,
        })
    }

    /// `exp` of the initial form (see [`OrderData`]).
    pub fn order_exp(&self) -> Result<ExponentVec> {
        self.terms
            .keys()
            .min_by(|a, b| valuation_cmp(a, b))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Exponent maximal in the diagonal (graded lexicographic) order.
    pub fn diag_leading_exp(&self) -> Result<ExponentVec> {
        self.terms
            .keys()
            .max_by(|a, b| grlex_cmp(a, b))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    fn leading_term(&self) -> Option<(&ExponentVec, &C)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    fn coord_bounds(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for e in it {
            for (i, &c) in e.0.iter().enumerate() {
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some((e, c)) = divisor.as_monomial() {
            let inv = C::one() / c.clone();
            return Some(self.mul_monomial(&-e, &inv));
        }
        // Quotient exponents of an exact division lie in this box.
        let (alo, ahi) = self.coord_bounds()?;
        let (blo, bhi) = divisor.coord_bounds()?;
        let lo: Vec<i64> = alo.iter().zip(&blo).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = ahi.iter().zip(&bhi).map(|(a, b)| a - b).collect();
        let (lb_exp, lb_coeff) = divisor.leading_term()?;
        let (lb_exp, lb_coeff) = (lb_exp.clone(), lb_coeff.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((le, lc)) = rem.leading_term() {
            let qe = le - &lb_exp;
            if qe
                .0
                .iter()
                .enumerate()
                .any(|(i, &c)| c < lo[i] || c > hi[i])
            {
                return None;
            }
            let qc = lc.clone() / lb_coeff.clone();
            rem = &rem - &divisor.mul_monomial(&qe, &qc);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// `x_i -> x_i^{-1}` for every variable.
    pub fn involute(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `x_i -> t_i^k` for every variable.
    pub fn scale_exponents(&self, k: i64) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.scale(k), c.clone()))
                .collect(),
        }
    }

    /// Inverse of [`scale_exponents`](Self::scale_exponents); `None` if some
    /// exponent is not divisible by `k`.
    pub fn unscale_exponents(&self, k: i64) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.div_exact(k)?, c.clone());
        }
        Some(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Keeps only the terms whose exponents satisfy `pred`.
    pub fn filter_terms(&self, mut pred: impl FnMut(&ExponentVec) -> bool) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| pred(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_i -> images[i]`. Negative exponents are allowed only
    /// for monomial images.
    pub fn substitute(&self, images: &[LaurentPoly<C>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::AmbientMismatch(images.len(), self.nvars));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<BTreeMap<i64, LaurentPoly<C>>> = vec![BTreeMap::new(); self.nvars];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let factor = match cache[i].get(&k) {
                    Some(p) => p.clone(),
                    None => {
                        let p = if k > 0 {
                            images[i].pow(k as u32)
                        } else {
                            let (me, mc) =
                                images[i].as_monomial().ok_or(Error::NegativeExponent)?;
                            LaurentPoly::monomial(-me, C::one() / mc.clone()).pow((-k) as u32)
                        };
                        cache[i].insert(k, p.clone());
                        p
                    }
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Embeds into `nvars + extra` variables, new variables appended.
    pub fn extend_vars(&self, extra: usize) -> Self {
        LaurentPoly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.0.clone();
                    v.extend(std::iter::repeat_n(0, extra));
                    (ExponentVec(v), c.clone())
                })
                .collect(),
        }
    }

    /// Variables whose exponent is nonzero somewhere.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|e| e.0[i] != 0))
            .collect()
    }
}

impl<C: Scalar> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Scalar> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Scalar> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ev, q, Q};

    fn lp(nvars: usize, terms: &[(&[i64], i64)]) -> LaurentPoly<Q> {
        LaurentPoly::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (ExponentVec(e.to_vec()), q(*c, 1))),
        )
    }

    #[test]
    fn initial_data_examples() {
        let u = lp(2, &[(&[2, 1], 1), (&[3, 0], 1), (&[4, 0], 1)]);
        let d = u.initial_data().unwrap();
        assert_eq!(d.exp, ev![3, 0]);
        assert_eq!(d.inco, q(1, 1));
        assert_eq!(d.initial_form, lp(2, &[(&[2, 1], 1), (&[3, 0], 1)]));

        let c = LaurentPoly::constant(2, q(5, 1));
        let d = c.initial_data().unwrap();
        assert_eq!(d.exp, ev![0, 0]);
        assert_eq!(d.inco, q(5, 1));

        let l = lp(1, &[(&[-3], 1), (&[0], 1)]);
        assert_eq!(l.initial_data().unwrap().exp, ev![-3]);
        assert!(LaurentPoly::<Q>::zero(1).initial_data().is_err());
    }

    #[test]
    fn diag_leading_exp_examples() {
        assert_eq!(
            lp(2, &[(&[2, 0], 1), (&[3, 2], -1)])
                .diag_leading_exp()
                .unwrap(),
            ev![3, 2]
        );
        assert_eq!(lp(1, &[(&[3], 1)]).diag_leading_exp().unwrap(), ev![3]);
        assert_eq!(
            lp(2, &[(&[2, 1], 1), (&[1, 2], 1)])
                .diag_leading_exp()
                .unwrap(),
            ev![2, 1]
        );
    }

    #[test]
    fn exact_division() {
        let a = lp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = lp(2, &[(&[1, 0], 1), (&[0, 1], -1), (&[-1, 0], 2)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        let not = &p + &LaurentPoly::one(2);
        assert_eq!(not.div_exact(&a), None);
    }

    #[test]
    fn substitution_with_monomial_inverse() {
        // x1^-1 * x2 with x1 -> 2*x1, x2 -> x1 + x2
        let p = lp(2, &[(&[-1, 1], 1)]);
        let imgs = vec![lp(2, &[(&[1, 0], 2)]), lp(2, &[(&[1, 0], 1), (&[0, 1], 1)])];
        let r = p.substitute(&imgs).unwrap();
        let expect = LaurentPoly::from_terms(2, vec![(ev![0, 0], q(1, 2)), (ev![-1, 1], q(1, 2))]);
        assert_eq!(r, expect);
        let bad = vec![lp(2, &[(&[1, 0], 1), (&[0, 1], 1)]), lp(2, &[(&[0, 1], 1)])];
        assert_eq!(p.substitute(&bad), Err(Error::NegativeExponent));
    }
}
