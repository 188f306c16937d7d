//! Quasi-ordinarity, the staged irreducibility criterion and invariance of
//! the criterion data under constant translation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive, Zero};

use crate::adic::{adic_coefficients, approximate_root};
use crate::charseq::{build_char_sequences, strictly_below, CharSeq};
use crate::gnp::{formal_order, straightness_classify, GnpData, Straightness, WeightSystem};
use crate::lattice::gcd_of_minors;
use crate::resultant::discriminant_y;
use crate::{Error, ExponentVec, LaurentPoly, Result, Scalar, YPoly};

/// Which side the input lives on: polynomials at the origin, or the
/// meromorphic polynomial `f(x^{-1}, y)` attached to a polynomial `f`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    Local,
    Meromorphic,
}

impl Convention {
    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::Local => "local",
            Convention::Meromorphic => "meromorphic",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct QoVerdict<C> {
    pub is_qo: bool,
    pub discriminant: LaurentPoly<C>,
    /// Exponent of the monomial factor when quasi-ordinary.
    pub n_exp: Option<ExponentVec>,
    /// Coordinate-wise minimum of the support when it is not in the support.
    pub offending: Option<ExponentVec>,
}

/// The discriminant is a monomial times a unit exactly when the
/// coordinate-wise minimum of its support belongs to the support.
pub fn is_quasi_ordinary<C: Scalar>(f: &YPoly<C>) -> Result<QoVerdict<C>> {
    let disc = discriminant_y(f)?;
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let min = disc.support_min().expect("nonzero discriminant");
    let hit = !disc.coeff(&min).is_zero();
    Ok(QoVerdict {
        is_qo: hit,
        discriminant: disc,
        n_exp: hit.then(|| min.clone()),
        offending: (!hit).then_some(min),
    })
}

#[derive(Clone, PartialEq, Debug)]
pub enum ReducibleReason {
    /// `y` divides the polynomial.
    ZeroConstantTerm,
    /// `D_{k+1} = D_k`.
    GcdStall,
    /// `n^{e-1}` does not divide `D_{k+1}`.
    NonIntegralIndex(BigInt),
    /// Some `r_i / d_k` is not an integer vector.
    NonIntegralWeight(ExponentVec, i64),
    /// The last coefficient of the approximate root expansion vanishes.
    PerfectPower,
    /// The formal order minimizer is not unique.
    FormalOrderTie(ExponentVec),
    /// `r_{k-1} d_{k-1} < r_k d_k` fails.
    NotIncreasing(ExponentVec, ExponentVec),
    /// `G_k` is not strictly straight.
    NotStrictlyStraight(Straightness),
}

impl ReducibleReason {
    pub fn code(&self) -> &'static str {
        match self {
            ReducibleReason::ZeroConstantTerm => "zero_constant_term",
            ReducibleReason::GcdStall => "gcd_stall",
            ReducibleReason::NonIntegralIndex(_) => "non_integral_index",
            ReducibleReason::NonIntegralWeight(..) => "non_integral_weight",
            ReducibleReason::PerfectPower => "perfect_power",
            ReducibleReason::FormalOrderTie(_) => "formal_order_tie",
            ReducibleReason::NotIncreasing(..) => "condition_ii",
            ReducibleReason::NotStrictlyStraight(_) => "condition_iii",
        }
    }
}

impl fmt::Display for ReducibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducibleReason::ZeroConstantTerm => write!(f, "y divides the polynomial"),
            ReducibleReason::GcdStall => write!(f, "the gcd sequence stalls: D_(k+1) = D_k"),
            ReducibleReason::NonIntegralIndex(d) => {
                write!(f, "D = {} is not a multiple of n^(e-1)", d)
            }
            ReducibleReason::NonIntegralWeight(r, d) => {
                write!(f, "{} is not divisible by {}", r, d)
            }
            ReducibleReason::PerfectPower => {
                write!(f, "the polynomial is a power of its approximate root")
            }
            ReducibleReason::FormalOrderTie(v) => write!(f, "formal order {} is attained twice", v),
            ReducibleReason::NotIncreasing(a, b) => write!(f, "{} < {} fails", a, b),
            ReducibleReason::NotStrictlyStraight(s) => write!(f, "G_k is {}", s.as_str()),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Verdict {
    Irreducible,
    Reducible {
        stage: usize,
        reason: ReducibleReason,
    },
}

#[derive(Clone, PartialEq, Debug)]
pub struct IrreducibilityReport<C> {
    pub convention: Convention,
    /// The polynomial after removing its `y^{n-1}` term.
    pub depressed: YPoly<C>,
    pub shift: LaurentPoly<C>,
    pub verdict: Verdict,
    pub n: i64,
    /// Data computed up to the verdict; complete on success.
    pub r: Vec<ExponentVec>,
    pub m: Vec<ExponentVec>,
    pub big_d: Vec<BigInt>,
    pub d: Vec<i64>,
    /// `G_1 = y, ..., G_{h+1} = F` (truncated at the failing stage).
    pub approx_roots: Vec<YPoly<C>>,
    /// Straightness data of `G_k` for `k = 2, ..., h + 1`.
    pub gnp_evidence: Vec<GnpData>,
    pub charseq: Option<CharSeq>,
}

impl<C: Scalar> IrreducibilityReport<C> {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }

    fn reducible(mut self, stage: usize, reason: ReducibleReason) -> Self {
        self.verdict = Verdict::Reducible { stage, reason };
        self
    }
}

fn weights(
    n: i64,
    e: usize,
    dk: i64,
    r: &[ExponentVec],
) -> std::result::Result<WeightSystem, ReducibleReason> {
    let mut ws = Vec::with_capacity(r.len());
    for ri in r {
        ws.push(
            ri.div_exact(dk)
                .ok_or_else(|| ReducibleReason::NonIntegralWeight(ri.clone(), dk))?,
        );
    }
    Ok(WeightSystem::scaled_units(e, n / dk, ws))
}

/// Runs the staged criterion on `f` (depressed first). The input must be
/// quasi-ordinary.
pub fn irreducibility_test<C: Scalar>(
    f: &YPoly<C>,
    convention: Convention,
) -> Result<IrreducibilityReport<C>> {
    let (fd, shift) = f.depress()?;
    let qo = is_quasi_ordinary(&fd)?;
    if !qo.is_qo {
        return Err(Error::NotQuasiOrdinary(format!(
            "the discriminant support has coordinate-wise minimum {} outside the support",
            qo.offending.unwrap()
        )));
    }
    let e = fd.nvars();
    let n = fd.deg() as i64;
    let unit: BigInt = Pow::pow(BigInt::from(n), e - 1);
    let mut rep = IrreducibilityReport {
        convention,
        depressed: fd.clone(),
        shift,
        verdict: Verdict::Irreducible,
        n,
        r: vec![],
        m: vec![],
        big_d: vec![Pow::pow(BigInt::from(n), e)],
        d: vec![n],
        approx_roots: vec![YPoly::y(e)],
        gnp_evidence: vec![],
        charseq: None,
    };
    if n == 1 {
        rep.approx_roots = vec![fd.clone()];
        rep.charseq = Some(build_char_sequences(1, e, &[])?);
        return Ok(rep);
    }
    let an = fd.coeff(0);
    if an.is_zero() {
        return Ok(rep.reducible(1, ReducibleReason::ZeroConstantTerm));
    }
    rep.r.push(an.order_exp()?);
    rep.m.push(rep.r[0].clone());
    let mut k = 1;
    loop {
        let next = gcd_of_minors(n, e, &rep.m);
        if &next == rep.big_d.last().unwrap() {
            return Ok(rep.reducible(k, ReducibleReason::GcdStall));
        }
        let (dq, dr) = next.div_rem(&unit);
        if !dr.is_zero() {
            return Ok(rep.reducible(k, ReducibleReason::NonIntegralIndex(next)));
        }
        let dnext = dq
            .to_i64()
            .ok_or_else(|| Error::Invariant("d does not fit in 64 bits".into()))?;
        rep.big_d.push(next);
        rep.d.push(dnext);
        if dnext == 1 {
            break;
        }
        let g = approximate_root(&fd, dnext as usize)?;
        rep.approx_roots.push(g.clone());
        let beta = adic_coefficients(&fd, &g)?.swap_remove(0);
        if beta.is_zero() {
            return Ok(rep.reducible(k + 1, ReducibleReason::PerfectPower));
        }
        let w = match weights(n, e, dnext, &rep.r) {
            Ok(w) => w,
            Err(reason) => return Ok(rep.reducible(k + 1, reason)),
        };
        let bases = &rep.approx_roots[..k];
        let rk = match formal_order(&w, bases, &beta) {
            Ok(v) => v,
            Err(Error::NonUniqueMinimizer { value, .. }) => {
                return Ok(rep.reducible(k + 1, ReducibleReason::FormalOrderTie(value)))
            }
            Err(err) => return Err(err),
        };
        let ek = rep.d[k - 1] / dnext;
        let mk = &(&rk - &(&rep.r[k - 1] * ek)) + &rep.m[k - 1];
        let lo = &rep.r[k - 1] * rep.d[k - 1];
        let hi = &rk * dnext;
        if !strictly_below(&lo, &hi) {
            return Ok(rep.reducible(k + 1, ReducibleReason::NotIncreasing(lo, hi)));
        }
        rep.r.push(rk);
        rep.m.push(mk);
        k += 1;
    }
    let h = k;
    rep.approx_roots.push(fd.clone());
    for k in 2..=h + 1 {
        let dk = rep.d[k - 1];
        let w = match weights(n, e, dk, &rep.r[..k - 1]) {
            Ok(w) => w,
            Err(reason) => return Ok(rep.reducible(k, reason)),
        };
        let ek = (rep.d[k - 2] / dk) as usize;
        let bases = &rep.approx_roots[..k - 1];
        let gk = &rep.approx_roots[k - 1];
        let data = match straightness_classify(gk, &w, bases, &bases[k - 2], ek) {
            Ok(d) => d,
            Err(Error::NonUniqueMinimizer { value, .. }) => {
                return Ok(rep.reducible(k, ReducibleReason::FormalOrderTie(value)))
            }
            Err(err) => return Err(err),
        };
        let class = data.classification;
        rep.gnp_evidence.push(data);
        if class != Straightness::StrictlyStraight {
            return Ok(rep.reducible(k, ReducibleReason::NotStrictlyStraight(class)));
        }
    }
    let cs = build_char_sequences(n, e, &rep.m)?;
    if cs.r != rep.r {
        return Err(Error::Invariant(format!(
            "criterion r = {:?} but the characteristic sequence gives {:?}",
            rep.r, cs.r
        )));
    }
    rep.charseq = Some(cs);
    Ok(rep)
}

#[derive(Clone, PartialEq, Debug)]
pub struct FamilyMember<C> {
    pub lambda: C,
    pub report: IrreducibilityReport<C>,
    pub same_semigroup: bool,
    pub same_approx_roots: bool,
}

impl<C: Scalar> FamilyMember<C> {
    pub fn holds(&self) -> bool {
        self.report.is_irreducible() && self.same_semigroup && self.same_approx_roots
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct FamilyReport<C> {
    pub base: IrreducibilityReport<C>,
    pub members: Vec<FamilyMember<C>>,
}

/// Reruns the criterion on `f - lambda` for each `lambda` and compares the
/// semigroup data and the approximate roots `G_1, ..., G_h` with those of `f`.
pub fn family_invariance<C: Scalar>(
    f: &YPoly<C>,
    lambdas: &[C],
    convention: Convention,
) -> Result<FamilyReport<C>> {
    let base = irreducibility_test(f, convention)?;
    if !base.is_irreducible() {
        return Err(Error::Invalid(
            "the base polynomial is not irreducible".into(),
        ));
    }
    let h = base.r.len();
    let mut members = Vec::with_capacity(lambdas.len());
    for l in lambdas {
        let fl = f - &YPoly::constant(f.nvars(), l.clone());
        let report = irreducibility_test(&fl, convention)?;
        let same_semigroup = report.n == base.n && report.r == base.r;
        let same_approx_roots = report.approx_roots.len() == base.approx_roots.len()
            && report.approx_roots[..h] == base.approx_roots[..h];
        members.push(FamilyMember {
            lambda: l.clone(),
            report,
            same_semigroup,
            same_approx_roots,
        });
    }
    Ok(FamilyReport { base, members })
}
