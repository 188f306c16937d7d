//! Formal orders over an adic support and straightness of generalized Newton
//! polygons.

use std::cmp::Ordering;

use crate::adic::{adic_coefficients, multi_adic_expand};
use crate::charseq::strictly_below;
use crate::{valuation_cmp, Error, ExponentVec, Result, Scalar, YPoly};

/// Weights: `r0[i]` for the variable `x_{i+1}`, `r[j]` for the base `G_{j+1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightSystem {
    pub r0: Vec<ExponentVec>,
    pub r: Vec<ExponentVec>,
}

impl WeightSystem {
    pub fn new(r0: Vec<ExponentVec>, r: Vec<ExponentVec>) -> Self {
        WeightSystem { r0, r }
    }

    /// `r0 = (s e_1, ..., s e_e)`.
    pub fn scaled_units(e: usize, s: i64, r: Vec<ExponentVec>) -> Self {
        WeightSystem {
            r0: (0..e).map(|i| ExponentVec::unit(e, i, s)).collect(),
            r,
        }
    }

    pub fn scale(&self, s: i64) -> Self {
        WeightSystem {
            r0: self.r0.iter().map(|v| v * s).collect(),
            r: self.r.iter().map(|v| v * s).collect(),
        }
    }

    fn value(&self, gamma: &ExponentVec, theta: &[usize]) -> ExponentVec {
        let e = self.r0.first().map_or(0, |v| v.len());
        let mut acc = ExponentVec::zero(e);
        for (g, w) in gamma.0.iter().zip(&self.r0) {
            acc = &acc + &(w * *g);
        }
        for (t, w) in theta.iter().zip(&self.r) {
            acc = &acc + &(w * *t as i64);
        }
        acc
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct FormalOrder {
    pub value: ExponentVec,
    pub theta: Vec<usize>,
}

/// Minimum over the adic support of `gamma . r0 + theta . r`, where `gamma`
/// is the initial exponent of the coefficient at `theta`.
pub fn formal_order_full<C: Scalar>(
    w: &WeightSystem,
    bases: &[YPoly<C>],
    f: &YPoly<C>,
) -> Result<FormalOrder> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if w.r.len() != bases.len() {
        return Err(Error::Invalid(format!(
            "{} base weights for {} bases",
            w.r.len(),
            bases.len()
        )));
    }
    if w.r0.len() != f.nvars() {
        return Err(Error::AmbientMismatch(w.r0.len(), f.nvars()));
    }
    let exp = multi_adic_expand(f, bases)?;
    let mut best: Option<FormalOrder> = None;
    let mut tie: Option<Vec<usize>> = None;
    for (theta, c) in &exp.support {
        let c = c.as_laurent().ok_or_else(|| {
            Error::Invalid("adic coefficients involve y; the first base must be linear".into())
        })?;
        let value = w.value(&c.order_exp()?, theta);
        match &best {
            Some(b) => match valuation_cmp(&value, &b.value) {
                Ordering::Less => {
                    best = Some(FormalOrder {
                        value,
                        theta: theta.clone(),
                    });
                    tie = None;
                }
                Ordering::Equal => tie = Some(theta.clone()),
                Ordering::Greater => {}
            },
            None => {
                best = Some(FormalOrder {
                    value,
                    theta: theta.clone(),
                })
            }
        }
    }
    let best = best.expect("nonzero polynomial has a nonempty support");
    if let Some(second) = tie {
        return Err(Error::NonUniqueMinimizer {
            first: best.theta,
            second,
            value: best.value,
        });
    }
    Ok(best)
}

pub fn formal_order<C: Scalar>(
    w: &WeightSystem,
    bases: &[YPoly<C>],
    f: &YPoly<C>,
) -> Result<ExponentVec> {
    formal_order_full(w, bases, f).map(|o| o.value)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Straightness {
    NotStraight,
    Straight,
    StrictlyStraight,
}

impl Straightness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Straightness::NotStraight => "not_straight",
            Straightness::Straight => "straight",
            Straightness::StrictlyStraight => "strictly_straight",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct GnpPoint {
    pub k: usize,
    /// `fO(a_k)`; `None` when `a_k = 0`.
    pub order: Option<ExponentVec>,
    /// `(d - k) fO(G)`.
    pub base_part: ExponentVec,
}

#[derive(Clone, PartialEq, Debug)]
pub struct GnpData {
    pub d: usize,
    pub base_order: ExponentVec,
    pub points: Vec<GnpPoint>,
    pub classification: Straightness,
}

/// Expands `f = base^d + a_1 base^{d-1} + ... + a_d` and compares each
/// `fO(a_k)` with `k fO(base)`. Vector inequalities are coordinate-wise;
/// "strict" means `>=` everywhere and not equal.
pub fn straightness_classify<C: Scalar>(
    f: &YPoly<C>,
    w: &WeightSystem,
    bases: &[YPoly<C>],
    base: &YPoly<C>,
    d: usize,
) -> Result<GnpData> {
    let coeffs = adic_coefficients(f, base)?;
    if coeffs.len() != d + 1 || !coeffs[d].is_monic() || coeffs[d].deg() != 0 {
        return Err(Error::DegreeMismatch {
            expected: d,
            found: coeffs.len().saturating_sub(1),
        });
    }
    let base_order = formal_order(w, bases, base)?;
    let mut points = Vec::with_capacity(d + 1);
    let mut class = Straightness::StrictlyStraight;
    for k in 0..=d {
        let a = &coeffs[d - k];
        let order = if a.is_zero() {
            None
        } else {
            Some(formal_order(w, bases, a)?)
        };
        let target = &base_order * k as i64;
        if k == d {
            if order.as_ref() != Some(&target) {
                class = Straightness::NotStraight;
            }
        } else if k > 0 {
            if let Some(o) = &order {
                if !target.le_all(o) {
                    class = Straightness::NotStraight;
                } else if !strictly_below(&target, o) && class == Straightness::StrictlyStraight {
                    class = Straightness::Straight;
                }
            }
        }
        points.push(GnpPoint {
            k,
            order,
            base_part: &base_order * (d - k) as i64,
        });
    }
    Ok(GnpData {
        d,
        base_order,
        points,
        classification: class,
    })
}
