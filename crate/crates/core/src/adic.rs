//! Adic expansions along one base or a ladder of bases, the Tschirnhausen
//! transform and approximate roots.

use std::collections::BTreeMap;

use crate::{Error, Result, Scalar, YPoly};

/// `f = sum_theta a_theta * G^theta` with every `a_theta` of `y`-degree below
/// the smallest base.
#[derive(Clone, PartialEq, Debug)]
pub struct AdicExpansion<C> {
    pub bases: Vec<YPoly<C>>,
    pub support: BTreeMap<Vec<usize>, YPoly<C>>,
}

impl<C: Scalar> AdicExpansion<C> {
    pub fn coefficient(&self, theta: &[usize]) -> Option<&YPoly<C>> {
        self.support.get(theta)
    }

    /// Multiplies the expansion back out.
    pub fn reconstruct(&self, nvars: usize) -> YPoly<C> {
        let mut acc = YPoly::zero(nvars);
        for (theta, a) in &self.support {
            let mut t = a.clone();
            for (g, &k) in self.bases.iter().zip(theta) {
                if k > 0 {
                    t = &t * &g.pow(k as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

/// Coefficients `c_0, c_1, ...` with `f = sum c_j g^j` and `deg_y c_j < deg_y g`.
pub fn adic_coefficients<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>) -> Result<Vec<YPoly<C>>> {
    if !g.is_monic() || g.deg() == 0 {
        return Err(Error::NotMonic);
    }
    let mut out = Vec::new();
    let mut cur = f.clone();
    while !cur.is_zero() {
        let (qt, r) = cur.div_rem(g)?;
        out.push(r);
        cur = qt;
    }
    Ok(out)
}

/// Single-base expansion, returned with one-element exponent tuples.
pub fn adic_expand<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>) -> Result<AdicExpansion<C>> {
    let coeffs = adic_coefficients(f, g)?;
    Ok(AdicExpansion {
        bases: vec![g.clone()],
        support: coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (vec![j], c))
            .collect(),
    })
}

fn check_ladder<C: Scalar>(bases: &[YPoly<C>]) -> Result<()> {
    for (i, g) in bases.iter().enumerate() {
        if !g.is_monic() || g.deg() == 0 {
            return Err(Error::BadLadder(format!(
                "base {} is not monic of positive degree",
                i + 1
            )));
        }
        if i > 0 {
            let (a, b) = (bases[i - 1].deg(), g.deg());
            if b <= a || b % a != 0 {
                return Err(Error::BadLadder(format!(
                    "degree {} of base {} is not a proper multiple of {}",
                    b,
                    i + 1,
                    a
                )));
            }
        }
    }
    Ok(())
}

/// Expansion along `G = (g_1, ..., g_h)` with `theta_i < deg g_{i+1} / deg g_i`
/// for `i < h`.
pub fn multi_adic_expand<C: Scalar>(f: &YPoly<C>, bases: &[YPoly<C>]) -> Result<AdicExpansion<C>> {
    check_ladder(bases)?;
    if bases.is_empty() && f.deg() > 0 {
        return Err(Error::BadLadder(
            "empty base list for a polynomial involving y".into(),
        ));
    }
    let mut support = BTreeMap::new();
    expand_rec(f, bases, &mut Vec::new(), &mut support)?;
    Ok(AdicExpansion {
        bases: bases.to_vec(),
        support,
    })
}

fn expand_rec<C: Scalar>(
    f: &YPoly<C>,
    bases: &[YPoly<C>],
    suffix: &mut Vec<usize>,
    out: &mut BTreeMap<Vec<usize>, YPoly<C>>,
) -> Result<()> {
    if f.is_zero() {
        return Ok(());
    }
    let Some((last, rest)) = bases.split_last() else {
        let mut theta: Vec<usize> = suffix.clone();
        theta.reverse();
        out.insert(theta, f.clone());
        return Ok(());
    };
    for (j, c) in adic_coefficients(f, last)?.into_iter().enumerate() {
        suffix.push(j);
        expand_rec(&c, rest, suffix, out)?;
        suffix.pop();
    }
    Ok(())
}

/// `g + a_1/d` where `a_1` is the coefficient of `g^{d-1}` in the `g`-adic
/// expansion of `f`.
pub fn tschirnhausen<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>, d: usize) -> Result<YPoly<C>> {
    Ok(tschirnhausen_step(f, g, d)?.0)
}

fn tschirnhausen_step<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>, d: usize) -> Result<(YPoly<C>, bool)> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::DegreeNotDivisible {
            degree: n,
            divisor: d,
        });
    }
    if g.deg() != n / d {
        return Err(Error::DegreeMismatch {
            expected: n / d,
            found: g.deg(),
        });
    }
    let coeffs = adic_coefficients(f, g)?;
    let a1 = coeffs
        .get(d - 1)
        .cloned()
        .unwrap_or_else(|| YPoly::zero(f.nvars()));
    if a1.is_zero() {
        return Ok((g.clone(), true));
    }
    let inv = C::one() / C::from_i64(d as i64);
    Ok((g + &a1.scale_scalar(&inv), false))
}

/// The unique monic `g` of degree `n/d` with `deg_y(f - g^d) < n - n/d`,
/// reached by iterating the Tschirnhausen transform from `y^{n/d}`.
pub fn approximate_root<C: Scalar>(f: &YPoly<C>, d: usize) -> Result<YPoly<C>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::DegreeNotDivisible {
            degree: n,
            divisor: d,
        });
    }
    let mut g = YPoly::y_pow(f.nvars(), n / d);
    for _ in 0..=n {
        let (next, fixed) = tschirnhausen_step(f, &g, d)?;
        if fixed {
            return Ok(g);
        }
        g = next;
    }
    Err(Error::NoFixedPoint(n + 1))
}
