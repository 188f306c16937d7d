//! Fractional power series roots of quasi-ordinary polynomials at finite
//! precision, and the checks built on them.
//!
//! A root of `F(t_1^n, ..., t_e^n, y)` is built one monomial at a time. The
//! exponents are ordered by total degree and then lexicographically (the
//! order of [`valuation_cmp`]); with respect to that group order the usual
//! Newton polygon step picks the next exponent and an edge polynomial fixes
//! its coefficient. Truncation is by total degree.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::charseq::strictly_below;
use crate::lattice::{gcd_of_minors, lattice_member};
use crate::resultant::discriminant_y;
use crate::univariate::UPoly;
use crate::{valuation_cmp, Error, ExponentVec, LaurentPoly, Result, Scalar, YPoly};

/// A root `y = series(t)` of `F(t^p, y)`. Every term of total degree at most
/// `precision` is correct; when `exact` the series is the whole root.
#[derive(Clone, PartialEq, Debug)]
pub struct Parametrization<C> {
    pub p: i64,
    pub series: LaurentPoly<C>,
    pub precision: i64,
    pub exact: bool,
}

impl<C: Scalar> Parametrization<C> {
    pub fn exact(p: i64, series: LaurentPoly<C>) -> Self {
        Parametrization {
            p,
            series,
            precision: i64::MAX,
            exact: true,
        }
    }

    /// Lowest total degree in the series; `precision + 1` for an empty one.
    fn min_degree(&self) -> i64 {
        self.series
            .min_total_degree()
            .unwrap_or_else(|| self.precision.saturating_add(1))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct RootExpansion<C> {
    pub param: Parametrization<C>,
    /// Characteristic exponents read off the support.
    pub m: Vec<ExponentVec>,
}

/// Orders rational vectors like [`valuation_cmp`]: total degree, then the
/// lexicographically greater vector first.
fn qvec_cmp(a: &[BigRational], b: &[BigRational]) -> Ordering {
    let sa: BigRational = a.iter().sum();
    let sb: BigRational = b.iter().sum();
    sa.cmp(&sb).then_with(|| b.cmp(a))
}

fn lowest(p: &LaurentPoly<impl Scalar>) -> Option<ExponentVec> {
    p.exponents().min_by(|a, b| valuation_cmp(a, b)).cloned()
}

const MAX_STEPS: usize = 10_000;

/// One root of `f(t^n, y)` through total degree `precision`, with the
/// characteristic exponents of its support.
pub fn expand_root<C: Scalar>(f: &YPoly<C>, precision: i64) -> Result<RootExpansion<C>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    if n == 0 {
        return Err(Error::Invalid("a constant polynomial has no roots".into()));
    }
    // Without this the peeling below can run on indefinitely.
    let disc = discriminant_y(f)?;
    let corner = disc.support_min().ok_or(Error::ZeroDiscriminant)?;
    if disc.coeff(&corner).is_zero() {
        return Err(Error::NotQuasiOrdinary(format!(
            "discriminant corner {} missing",
            corner
        )));
    }
    let e = f.nvars();
    let mut h = f.scale_exponents(n as i64);
    let mut series = LaurentPoly::zero(e);
    let mut last: Option<ExponentVec> = None;
    let mut exact = false;
    for step in 0.. {
        if step == MAX_STEPS {
            return Err(Error::InsufficientPrecision(format!(
                "gave up after {} terms below degree {}",
                MAX_STEPS, precision
            )));
        }
        let b0 = h.coeff(0);
        let Some(v0) = lowest(&b0) else {
            exact = true;
            break;
        };
        // Steepest edge from the point of index 0.
        let mut best: Option<(Vec<BigRational>, usize)> = None;
        for (i, bi) in h.coeffs().iter().enumerate().skip(1) {
            let Some(vi) = lowest(bi) else { continue };
            let den = BigInt::from(i as i64);
            let s: Vec<BigRational> = (&v0 - &vi)
                .0
                .iter()
                .map(|&c| BigRational::new(BigInt::from(c), den.clone()))
                .collect();
            match &best {
                Some((b, _)) if qvec_cmp(&s, b) == Ordering::Less => {}
                _ => best = Some((s, i)),
            }
        }
        let (slope, k) =
            best.ok_or_else(|| Error::Invariant("monic polynomial without y terms".into()))?;
        let mu = slope
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<i64>>>()
            .map(ExponentVec)
            .ok_or_else(|| {
                Error::NotQuasiOrdinary(format!(
                    "edge slope {:?} is not an integral exponent for x = t^{}",
                    slope.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    n
                ))
            })?;
        if mu.total_degree() > precision {
            break;
        }
        if let Some(prev) = &last {
            if valuation_cmp(&mu, prev) != Ordering::Greater {
                return Err(Error::NotQuasiOrdinary(format!(
                    "root exponents stopped increasing at {} after {}",
                    mu, prev
                )));
            }
        }
        let edge: Vec<C> = (0..=k)
            .map(|i| h.coeff(i).coeff(&(&v0 - &(&mu * i as i64))))
            .collect();
        let roots = UPoly::new(edge).solve_simple()?;
        let c = roots
            .into_iter()
            .next()
            .ok_or_else(|| Error::Invariant("edge polynomial without nonzero roots".into()))?;
        let term = LaurentPoly::monomial(mu.clone(), c);
        h = h.shift(&term);
        series = &series + &term;
        last = Some(mu);
    }
    let m = characteristic_exponents(&series, n as i64)?;
    let param = Parametrization {
        p: n as i64,
        series,
        precision: if exact { i64::MAX } else { precision },
        exact,
    };
    let closing = gcd_of_minors(n as i64, e, &m);
    let unit: BigInt = num_traits::Pow::pow(BigInt::from(n), e - 1);
    if closing != unit {
        if exact {
            let total: BigInt = num_traits::Pow::pow(BigInt::from(n), e);
            let conj = total / closing;
            return Err(Error::ReducibleRoot {
                root_degree: usize::try_from(conj).unwrap_or(usize::MAX),
                degree: n,
            });
        }
        return Err(Error::InsufficientPrecision(format!(
            "characteristic exponents found through degree {}: {:?}",
            precision, m
        )));
    }
    Ok(RootExpansion { param, m })
}

/// Walks the support in increasing order and keeps every exponent outside
/// the lattice generated by `(nZ)^e` and the exponents kept so far.
pub fn characteristic_exponents<C: Scalar>(
    series: &LaurentPoly<C>,
    n: i64,
) -> Result<Vec<ExponentVec>> {
    let mut support: Vec<&ExponentVec> = series.exponents().collect();
    support.sort_by(|a, b| valuation_cmp(a, b));
    let mut m: Vec<ExponentVec> = Vec::new();
    for p in support {
        if lattice_member(p, n, &m).is_none() {
            if let Some(prev) = m.last() {
                if !strictly_below(prev, p) {
                    return Err(Error::NotQuasiOrdinary(format!(
                        "support exponent {} is not above the characteristic exponent {}",
                        p, prev
                    )));
                }
            }
            m.push(p.clone());
        }
    }
    Ok(m)
}

/// Elementary symmetric functions of the conjugates of a root of an
/// irreducible polynomial of degree `n = p`: `F(t^n, y)` rebuilt from one root,
/// together with the total degree through which each coefficient is certain.
fn conjugate_product<C: Scalar>(
    param: &Parametrization<C>,
    n: usize,
) -> Vec<(LaurentPoly<C>, Option<i64>)> {
    let e = param.series.nvars();
    let nn = param.p;
    let v = param.min_degree().min(0);
    let cut =
        |k: usize| -> Option<i64> { (!param.exact).then(|| param.precision + (k as i64 - 1) * v) };
    let trunc = |p: LaurentPoly<C>, k: usize| match cut(k) {
        Some(b) => p.truncate_above(b),
        None => p,
    };
    let mut power = LaurentPoly::one(e);
    let mut sums = vec![LaurentPoly::zero(e)];
    for k in 1..=n {
        power = trunc(&power * &param.series, k);
        let restricted = power
            .filter_terms(|x| x.0.iter().all(|c| c % nn == 0))
            .scale(&C::from_i64(n as i64));
        sums.push(restricted);
    }
    let mut el = vec![LaurentPoly::one(e)];
    for k in 1..=n {
        let mut acc = LaurentPoly::zero(e);
        for i in 1..=k {
            let t = &el[k - i] * &sums[i];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        el.push(trunc(acc.scale(&(C::one() / C::from_i64(k as i64))), k));
    }
    el.into_iter()
        .enumerate()
        .map(|(k, p)| (p, cut(k.max(1))))
        .collect()
}

/// Compares `f(t^n, y)` with the product of the `n` conjugates of the root,
/// coefficient by coefficient, through the certified degrees.
pub fn conjugate_product_check<C: Scalar>(
    f: &YPoly<C>,
    param: &Parametrization<C>,
) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    if param.p != n as i64 {
        return Err(Error::Invalid(format!(
            "parametrization has x = t^{} but the polynomial has degree {}",
            param.p, n
        )));
    }
    let v = param.min_degree();
    let target = f.scale_exponents(n as i64);
    for (k, (ek, bound)) in conjugate_product(param, n).into_iter().enumerate().skip(1) {
        let want = target.coeff(n - k);
        let got = if k % 2 == 1 { -&ek } else { ek };
        match bound {
            None => {
                if want != got {
                    return Ok(false);
                }
            }
            Some(b) => {
                if b < k as i64 * v {
                    return Err(Error::InsufficientPrecision(format!(
                        "coefficient of y^{} is certified only through degree {}",
                        n - k,
                        b
                    )));
                }
                if want.truncate_above(b) != got.truncate_above(b) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `exp` of the initial form of `g(t^n, y(t))`, with `n = param.p`.
pub fn order_via_root<C: Scalar>(g: &YPoly<C>, param: &Parametrization<C>) -> Result<ExponentVec> {
    let n = param.p;
    let e = param.series.nvars();
    let mut acc = LaurentPoly::zero(e);
    let mut power = LaurentPoly::one(e);
    let mut bound: Option<i64> = None;
    let v = param.min_degree();
    for (j, a) in g.coeffs().iter().enumerate() {
        if j > 0 {
            power = &power * &param.series;
        }
        if a.is_zero() {
            continue;
        }
        let a = a.scale_exponents(n);
        if j > 0 && !param.exact {
            let b = param.precision + a.min_total_degree().unwrap() + (j as i64 - 1) * v;
            bound = Some(bound.map_or(b, |x: i64| x.min(b)));
        }
        acc = &acc + &(&a * &power);
    }
    if acc.is_zero() {
        return Err(if param.exact {
            Error::Invalid("the polynomial vanishes on the root".into())
        } else {
            Error::InsufficientPrecision(
                "substitution vanishes through the available precision".into(),
            )
        });
    }
    let exp = acc.order_exp()?;
    if let Some(b) = bound {
        if exp.total_degree() > b {
            return Err(Error::InsufficientPrecision(format!(
                "initial exponent {} lies beyond the certified degree {}",
                exp, b
            )));
        }
    }
    Ok(exp)
}
