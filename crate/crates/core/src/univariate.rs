//! Dense univariate polynomials over the coefficient field: gcds, squarefree
//! decomposition and the small root solver used by the root oracle and the
//! plane algorithms.

use crate::{Error, Result, Scalar};

/// Coefficients from degree 0 upwards, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<C>(Vec<C>);

impl<C: Scalar> UPoly<C> {
    pub fn new(mut c: Vec<C>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, v: &C) -> C {
        self.0
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * v.clone() + c.clone())
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(l) => {
                let l = l.clone();
                UPoly(self.0.iter().map(|c| c.clone() / l.clone()).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly(vec![]), self.clone());
        }
        let lead = d.0[dd].clone();
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..=dd {
                rem[i - dd + j] = rem[i - dd + j].clone() - c.clone() * d.0[j].clone();
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree decomposition by Yun's algorithm: monic factors `a_i`
    /// with multiplicity `i`, omitting trivial ones.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly<C>, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::new(vec![C::one()]);
        }
        let f = self.monic();
        f.div_rem(&f.gcd(&f.derivative())).0
    }

    /// Nonzero roots of a polynomial whose squarefree part is linear, a
    /// binomial `c^k - a`, or a quadratic with rational discriminant root.
    /// Roots are returned in a fixed order; for even binomials the positive
    /// root comes first.
    pub fn solve_simple(&self) -> Result<Vec<C>> {
        let s = self.squarefree_part();
        let deg = s.degree().unwrap_or(0);
        let c = &s.0;
        match deg {
            0 => Ok(vec![]),
            1 => Ok(vec![-c[0].clone()]),
            _ if c[1..deg].iter().all(|v| v.is_zero()) => {
                let a = -c[0].clone();
                match a.nth_root(deg as u32) {
                    Some(r) if deg.is_multiple_of(2) => Ok(vec![r.clone(), -r]),
                    Some(r) => Ok(vec![r]),
                    None => Err(Error::AlgebraicExtensionRequired(format!(
                        "c^{} = {} has no rational solution",
                        deg, a
                    ))),
                }
            }
            2 => {
                let (p, q0) = (c[1].clone(), c[0].clone());
                let two = C::from_i64(2);
                let disc = p.clone() * p.clone() - C::from_i64(4) * q0;
                let r = disc.nth_root(2).ok_or_else(|| {
                    Error::AlgebraicExtensionRequired(format!(
                        "quadratic with discriminant {}",
                        disc
                    ))
                })?;
                let hi = (-p.clone() + r.clone()) / two.clone();
                let lo = (-p - r) / two;
                Ok(vec![hi, lo])
            }
            _ => Err(Error::AlgebraicExtensionRequired(format!(
                "irreducible factor structure of degree {} not handled",
                deg
            ))),
        }
    }
}

impl<C: Scalar> std::ops::Sub for &UPoly<C> {
    type Output = UPoly<C>;
    fn sub(self, rhs: &UPoly<C>) -> UPoly<C> {
        let n = self.0.len().max(rhs.0.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(C::zero)
                        - rhs.0.get(i).cloned().unwrap_or_else(C::zero)
                })
                .collect(),
        )
    }
}

impl<C: Scalar> std::ops::Mul for &UPoly<C> {
    type Output = UPoly<C>;
    fn mul(self, rhs: &UPoly<C>) -> UPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly(vec![]);
        }
        let mut out = vec![C::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }
}
