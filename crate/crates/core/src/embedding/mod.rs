//! The coordinate decision for quasi-ordinary polynomials and the plane
//! algorithms behind the quasi-ordinary property of a discriminant.

mod chain;
mod plane;

pub use chain::{AutomorphismChain, ElementaryMap, DEFAULT_DEGREE_BOUND};
pub use plane::{
    default_fuel, dominating_exponent, qo_property_decide, quasihomog_factor_count,
    tame_pair_reduce, HullEdge, NewtonPolygon2D, QoPropertyOutcome, QoStep, QuasiHomogFactors,
    SlopeSign, TameOutcome,
};

use std::fmt;

use crate::adic::adic_coefficients;
use crate::charseq::{semigroup_generators, semigroup_member, CharSeq, SemigroupMode};
use crate::irreducibility::{
    irreducibility_test, is_quasi_ordinary, Convention, ReducibleReason, Verdict,
};
use crate::{Error, ExponentVec, LaurentPoly, Result, Scalar, YPoly};

/// Applies `chain` to `f` (variables `x1, ..., xe, y`, with `y` last).
pub fn verify_chain<C: Scalar>(chain: &AutomorphismChain<C>, f: &YPoly<C>) -> Result<YPoly<C>> {
    verify_chain_bounded(chain, f, DEFAULT_DEGREE_BOUND)
}

pub fn verify_chain_bounded<C: Scalar>(
    chain: &AutomorphismChain<C>,
    f: &YPoly<C>,
    bound: i64,
) -> Result<YPoly<C>> {
    YPoly::from_laurent_with_y(&chain.apply_bounded(&f.to_laurent(), bound)?)
}

/// One step `g_{i+1} = g_i^{e_i} + a_2 g_i^{e_i - 2} + ... + a_{e_i - 1} g_i + c_i g_{i-1}`
/// with `g_0 = x_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct CascadeStage<C> {
    pub stage: usize,
    pub e: usize,
    /// `a_2, ..., a_{e_i - 1}`.
    pub middle: Vec<C>,
    pub c: C,
}

#[derive(Clone, PartialEq, Debug)]
pub struct CoordinateWitness<C> {
    /// Sends `f` to `image`.
    pub chain: AutomorphismChain<C>,
    /// Index of the variable `x_k` with `f` in `K[x_k, y]`; `None` for `n = 1`.
    pub k: Option<usize>,
    /// A single variable.
    pub image: LaurentPoly<C>,
    pub charseq: Option<CharSeq>,
    pub cascade: Vec<CascadeStage<C>>,
    /// Counts writing the unit vector `e_k` over `n e_1, ..., n e_e, -r_1, ..., -r_h`.
    pub unit_witness: Option<Vec<u64>>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum NotCoordinateReason {
    Reducible {
        stage: usize,
        reason: ReducibleReason,
    },
    NotUnitVector(ExponentVec),
    ZeroCascadeConstant {
        stage: usize,
    },
}

impl fmt::Display for NotCoordinateReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotCoordinateReason::Reducible { stage, reason } => {
                write!(
                    f,
                    "the meromorphic polynomial is reducible (stage {}: {})",
                    stage, reason
                )
            }
            NotCoordinateReason::NotUnitVector(v) => {
                write!(f, "-r_h = {} is not a canonical unit vector", v)
            }
            NotCoordinateReason::ZeroCascadeConstant { stage } => {
                write!(f, "the cascade constant c_{} vanishes", stage)
            }
        }
    }
}

impl NotCoordinateReason {
    pub fn code(&self) -> &'static str {
        match self {
            NotCoordinateReason::Reducible { .. } => "reducible",
            NotCoordinateReason::NotUnitVector(_) => "not_unit_vector",
            NotCoordinateReason::ZeroCascadeConstant { .. } => "zero_cascade_constant",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum EmbeddingVerdict<C> {
    NotApplicable(String),
    NotCoordinate(NotCoordinateReason),
    Coordinate(Box<CoordinateWitness<C>>),
}

fn mismatch<T>(msg: String) -> Result<T> {
    Err(Error::Invariant(format!(
        "criterion passed but the cascade fails: {}",
        msg
    )))
}

/// Restricts a polynomial in `x_1, ..., x_e, y` that only involves `x_k`
/// and `y` to the plane `(X, Y) = (x_k, y)`.
fn to_plane<C: Scalar>(p: &LaurentPoly<C>, k: usize) -> Result<LaurentPoly<C>> {
    let amb = p.nvars();
    let images: Vec<LaurentPoly<C>> = (0..amb)
        .map(|i| {
            if i == k {
                LaurentPoly::var(2, 0)
            } else if i == amb - 1 {
                LaurentPoly::var(2, 1)
            } else {
                LaurentPoly::zero(2)
            }
        })
        .collect();
    p.substitute(&images)
}

/// Decides whether `f` (monic in `y`, polynomial coefficients) is equivalent
/// to a coordinate, assuming its meromorphic counterpart is quasi-ordinary.
pub fn embedding_decide<C: Scalar>(f: &YPoly<C>) -> Result<EmbeddingVerdict<C>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !f.is_polynomial() {
        return Ok(EmbeddingVerdict::NotApplicable(
            "coefficients must be polynomials".into(),
        ));
    }
    let e = f.nvars();
    let amb = e + 1;
    let n = f.deg();
    if n == 0 {
        return Err(Error::Invalid("y-degree 0".into()));
    }
    let (fd, shift) = f.depress()?;
    let mut chain = AutomorphismChain::identity(amb);
    if !shift.is_zero() {
        let y = LaurentPoly::var(amb, e);
        chain.push(ElementaryMap::translate(e, &y - &shift.extend_vars(1))?);
    }
    if n == 1 {
        let image = LaurentPoly::var(amb, e);
        if verify_chain(&chain, f)?.to_laurent() != image {
            return Err(Error::Invariant("linear case does not reduce to y".into()));
        }
        return Ok(EmbeddingVerdict::Coordinate(Box::new(CoordinateWitness {
            chain,
            k: None,
            image,
            charseq: None,
            cascade: vec![],
            unit_witness: None,
        })));
    }
    let big_f = fd.mero_involute();
    match is_quasi_ordinary(&big_f) {
        Err(Error::ZeroDiscriminant) => {
            return Ok(EmbeddingVerdict::NotApplicable("zero discriminant".into()));
        }
        Err(err) => return Err(err),
        Ok(v) if !v.is_qo => {
            return Ok(EmbeddingVerdict::NotApplicable(format!(
                "the meromorphic polynomial is not quasi-ordinary (discriminant corner {} missing)",
                v.offending.unwrap()
            )));
        }
        Ok(_) => {}
    }
    let rep = irreducibility_test(&big_f, Convention::Meromorphic)?;
    if let Verdict::Reducible { stage, reason } = rep.verdict {
        return Ok(EmbeddingVerdict::NotCoordinate(
            NotCoordinateReason::Reducible { stage, reason },
        ));
    }
    let cs = rep
        .charseq
        .clone()
        .expect("irreducible reports carry the sequences");
    let h = rep.r.len();
    let neg_rh = -&rep.r[h - 1];
    let Some(k) = neg_rh.unit_index() else {
        return Ok(EmbeddingVerdict::NotCoordinate(
            NotCoordinateReason::NotUnitVector(neg_rh),
        ));
    };
    for i in 0..h {
        if -&rep.r[i] != ExponentVec::unit(e, k, rep.d[i + 1]) {
            return mismatch(format!(
                "-r_{} = {} is not d_{} e_k",
                i + 1,
                -&rep.r[i],
                i + 2
            ));
        }
    }
    let gens = semigroup_generators(&cs, SemigroupMode::Full, true)?;
    let unit_witness = semigroup_member(&ExponentVec::unit(e, k, 1), &gens)?;
    if unit_witness.is_none() {
        return mismatch("e_k is not in the semigroup".into());
    }

    // g_0 = x_k, g_1 = y, ..., g_{h+1} = f
    let mut g: Vec<YPoly<C>> = vec![YPoly::from_laurent(LaurentPoly::var(e, k))];
    g.extend(rep.approx_roots.iter().map(|p| p.mero_involute()));
    let mut cascade = Vec::with_capacity(h);
    for i in 1..=h {
        let ei = (rep.d[i - 1] / rep.d[i]) as usize;
        let coeffs = adic_coefficients(&g[i + 1], &g[i])?;
        if coeffs.len() != ei + 1 || !coeffs[ei].is_monic() || coeffs[ei].deg() != 0 {
            return mismatch(format!(
                "g_{} is not monic of degree {} in g_{}",
                i + 1,
                ei,
                i
            ));
        }
        if !coeffs[ei - 1].is_zero() {
            return mismatch(format!(
                "g_{}-adic expansion of g_{} has a nonzero second term",
                i,
                i + 1
            ));
        }
        let mut middle = Vec::new();
        for j in (1..ei - 1).rev() {
            match coeffs[j].as_laurent().and_then(|c| c.as_constant()) {
                Some(c) => middle.push(c),
                None => return mismatch(format!("coefficient of g_{}^{} is not constant", i, j)),
            }
        }
        let last = &coeffs[0];
        if last.is_zero() {
            return Ok(EmbeddingVerdict::NotCoordinate(
                NotCoordinateReason::ZeroCascadeConstant { stage: i },
            ));
        }
        let prev = &g[i - 1];
        let lead_exp = if i == 1 {
            ExponentVec::unit(e, k, 1)
        } else {
            ExponentVec::zero(e)
        };
        let c = last.coeff(prev.deg()).coeff(&lead_exp);
        if c.is_zero() || *last != prev.scale_scalar(&c) {
            return mismatch(format!(
                "last coefficient at stage {} is not a multiple of g_{}",
                i,
                i - 1
            ));
        }
        cascade.push(CascadeStage {
            stage: i,
            e: ei,
            middle,
            c,
        });
    }

    let fl = fd.to_laurent();
    if fl.used_vars().iter().any(|&v| v != k && v != e) {
        return mismatch(format!("f involves variables other than x{} and y", k + 1));
    }
    let p1 = to_plane(&fl, k)?;
    let p2 = to_plane(&g[h].to_laurent(), k)?;
    let TameOutcome::Pair { inverse, .. } = tame_pair_reduce(&p1, &p2)? else {
        return mismatch("(f, g_h) is not a coordinate pair".into());
    };
    let chain = chain.then(&inverse.lift(amb, &[k, e])?).simplify()?;
    let image = LaurentPoly::var(amb, k);
    if verify_chain(&chain, f)?.to_laurent() != image {
        return mismatch("the synthesized chain does not send f to x_k".into());
    }
    Ok(EmbeddingVerdict::Coordinate(Box::new(CoordinateWitness {
        chain,
        k: Some(k),
        image,
        charseq: Some(cs),
        cascade,
        unit_witness,
    })))
}
