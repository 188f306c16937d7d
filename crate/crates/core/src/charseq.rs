//! Characteristic sequences: lattice indices `D_k`, `d_k`, `e_k`, the `r`/`m`
//! recursion, contact, intersection orders from contact, and semigroups.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, ToPrimitive, Zero};

use crate::lattice::{gcd_of_minors, lattice_member};
use crate::roots::Parametrization;
use crate::{Error, ExponentVec, Result, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct CharSeq {
    pub n: i64,
    pub e: usize,
    /// Characteristic exponents `m_1, ..., m_h`.
    pub m: Vec<ExponentVec>,
    /// `r_1, ..., r_h`.
    pub r: Vec<ExponentVec>,
    /// `D_1, ..., D_{h+1}`.
    pub big_d: Vec<BigInt>,
    /// `d_1 = n, ..., d_{h+1} = 1`.
    pub d: Vec<i64>,
    /// `e_k = d_k / d_{k+1}`, `k = 1..h`.
    pub e_seq: Vec<i64>,
}

impl CharSeq {
    pub fn h(&self) -> usize {
        self.m.len()
    }
}

/// `a <= b` coordinate-wise with `a != b`.
pub fn strictly_below(a: &ExponentVec, b: &ExponentVec) -> bool {
    a.le_all(b) && a != b
}

fn n_pow(n: i64, k: usize) -> BigInt {
    Pow::pow(BigInt::from(n), k)
}

fn big_to_i64(v: &BigInt, what: &str) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::NonIntegral(format!("{} = {} does not fit in 64 bits", what, v)))
}

/// Index data `D`, `d`, `e` for the prefix lattices of `m`, without the
/// closing check `D_{h+1} = n^{e-1}`.
fn index_data(n: i64, e: usize, m: &[ExponentVec]) -> Result<(Vec<BigInt>, Vec<i64>, Vec<i64>)> {
    let unit = n_pow(n, e - 1);
    let mut big_d = vec![n_pow(n, e)];
    for i in 1..=m.len() {
        let next = gcd_of_minors(n, e, &m[..i]);
        if &next == big_d.last().unwrap() {
            return Err(Error::NotCharacteristic(m[i - 1].clone()));
        }
        big_d.push(next);
    }
    let mut d = Vec::with_capacity(big_d.len());
    for dd in &big_d {
        let (qt, rm) = dd.div_rem(&unit);
        if !rm.is_zero() {
            return Err(Error::NonIntegral(format!(
                "D = {} is not divisible by n^(e-1) = {}",
                dd, unit
            )));
        }
        d.push(big_to_i64(&qt, "d")?);
    }
    let e_seq = d.windows(2).map(|w| w[0] / w[1]).collect();
    Ok((big_d, d, e_seq))
}

pub fn build_char_sequences(n: i64, e: usize, m: &[ExponentVec]) -> Result<CharSeq> {
    if n < 1 || e < 1 {
        return Err(Error::Invalid(format!(
            "need n >= 1 and e >= 1, got n = {}, e = {}",
            n, e
        )));
    }
    if let Some(bad) = m.iter().find(|v| v.len() != e) {
        return Err(Error::AmbientMismatch(bad.len(), e));
    }
    if m.windows(2).any(|w| !strictly_below(&w[0], &w[1])) {
        return Err(Error::NotIncreasing);
    }
    let (big_d, d, e_seq) = index_data(n, e, m)?;
    let unit = n_pow(n, e - 1);
    if big_d.last() != Some(&unit) {
        return Err(Error::DegreeInconsistent {
            expected: unit.to_string(),
            found: big_d.last().unwrap().to_string(),
        });
    }
    let r = r_from_m(m, &e_seq);
    Ok(CharSeq {
        n,
        e,
        m: m.to_vec(),
        r,
        big_d,
        d,
        e_seq,
    })
}

/// `r_1 = m_1`, `r_{k+1} = e_k r_k + m_{k+1} - m_k`.
pub fn r_from_m(m: &[ExponentVec], e_seq: &[i64]) -> Vec<ExponentVec> {
    let mut r: Vec<ExponentVec> = Vec::with_capacity(m.len());
    for (k, mk) in m.iter().enumerate() {
        if k == 0 {
            r.push(mk.clone());
        } else {
            let prev = &r[k - 1] * e_seq[k - 1];
            r.push(&(&prev + mk) - &m[k - 1]);
        }
    }
    r
}

/// Inverts [`r_from_m`], computing each `e_k` from the lattice as it goes.
pub fn m_from_r(n: i64, e: usize, r: &[ExponentVec]) -> Result<Vec<ExponentVec>> {
    let mut m: Vec<ExponentVec> = Vec::with_capacity(r.len());
    for (k, rk) in r.iter().enumerate() {
        if k == 0 {
            m.push(rk.clone());
        } else {
            let (_, _, e_seq) = index_data(n, e, &m)?;
            let prev = &r[k - 1] * e_seq[k - 1];
            m.push(&(rk - &prev) + &m[k - 1]);
        }
    }
    Ok(m)
}

/// Contact between two parametrizations: a rational vector or infinity.
#[derive(Clone, PartialEq, Debug)]
pub enum ContactValue {
    Finite(Vec<BigRational>),
    Infinity,
}

/// `(1/pq) exp(Y(t^q) - Z(t^p))`.
pub fn contact<C: Scalar>(
    phi: &Parametrization<C>,
    psi: &Parametrization<C>,
) -> Result<ContactValue> {
    if phi.series.nvars() != psi.series.nvars() {
        return Err(Error::AmbientMismatch(
            phi.series.nvars(),
            psi.series.nvars(),
        ));
    }
    let (p, q) = (phi.p, psi.p);
    let diff = &phi.series.scale_exponents(q) - &psi.series.scale_exponents(p);
    let bound = match (phi.exact, psi.exact) {
        (true, true) => None,
        (true, false) => Some(p * psi.precision),
        (false, true) => Some(q * phi.precision),
        (false, false) => Some((q * phi.precision).min(p * psi.precision)),
    };
    if diff.is_zero() {
        if bound.is_none() || (phi.p == psi.p && phi.series == psi.series) {
            return Ok(ContactValue::Infinity);
        }
        return Err(Error::InsufficientPrecision(
            "the parametrizations agree up to the shared precision".into(),
        ));
    }
    let exp = diff.order_exp()?;
    if let Some(b) = bound {
        if exp.total_degree() > b {
            return Err(Error::InsufficientPrecision(format!(
                "leading difference at degree {} beyond the certified degree {}",
                exp.total_degree(),
                b
            )));
        }
    }
    let pq = BigInt::from(p * q);
    Ok(ContactValue::Finite(
        exp.0
            .iter()
            .map(|&c| BigRational::new(BigInt::from(c), pq.clone()))
            .collect(),
    ))
}

/// Result of the contact formula for intersection orders.
#[derive(Clone, PartialEq, Debug)]
pub struct ContactOrder {
    pub order: ExponentVec,
    /// Number of characteristic exponents `m_j <= n c`.
    pub q: usize,
    /// When `n c` lies in `M_q` but not `M_{q-1}` and differs from `m_q`:
    /// whether `n / d_{q+1}` divides the degree `m`.
    pub divisibility: Option<bool>,
}

fn to_integral(v: &[BigRational], what: &str) -> Result<ExponentVec> {
    v.iter()
        .map(|c| {
            if c.is_integer() {
                big_to_i64(&c.to_integer(), what)
            } else {
                Err(Error::NonIntegral(format!("{} has entry {}", what, c)))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(ExponentVec)
}

/// Intersection order of the branch `cs` with a branch of degree `m` having
/// contact `c` with it.
pub fn order_from_contact(cs: &CharSeq, m: i64, c: &ContactValue) -> Result<ContactOrder> {
    let ContactValue::Finite(c) = c else {
        return Err(Error::Invalid(
            "infinite contact has no finite order".into(),
        ));
    };
    if c.len() != cs.e {
        return Err(Error::AmbientMismatch(c.len(), cs.e));
    }
    if m < 1 {
        return Err(Error::Invalid(format!("degree {} must be positive", m)));
    }
    let n = BigRational::from_integer(cs.n.into());
    let nc: Vec<BigRational> = c.iter().map(|v| v * &n).collect();
    let q =
        cs.m.iter()
            .take_while(|mj| {
                mj.0.iter()
                    .zip(&nc)
                    .all(|(a, b)| BigRational::from_integer((*a).into()) <= *b)
            })
            .count();
    if q == 0 {
        let mm = BigRational::from_integer(m.into());
        let v: Vec<BigRational> = nc.iter().map(|x| x * &mm).collect();
        return Ok(ContactOrder {
            order: to_integral(&v, "n m c")?,
            q,
            divisibility: None,
        });
    }
    let nci = to_integral(&nc, "n c")?;
    let base = &(&cs.r[q - 1] * cs.d[q - 1]) + &(&(&nci - &cs.m[q - 1]) * cs.d[q]);
    let scaled = &base * m;
    let order = scaled.div_exact(cs.n).ok_or_else(|| {
        Error::NonIntegral(format!("({}) * {} / {} is not integral", base, m, cs.n))
    })?;
    let divisibility = if nci != cs.m[q - 1]
        && lattice_member(&nci, cs.n, &cs.m[..q]).is_some()
        && lattice_member(&nci, cs.n, &cs.m[..q - 1]).is_none()
    {
        Some(m % (cs.n / cs.d[q]) == 0)
    } else {
        None
    };
    Ok(ContactOrder {
        order,
        q,
        divisibility,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SemigroupMode {
    Full,
    /// Semigroup of the approximate root `App_{d_k}`, `1 <= k <= h + 1`.
    ApproxRoot(usize),
}

#[derive(Clone, PartialEq, Debug)]
pub struct SemigroupPresentation {
    pub generators: Vec<ExponentVec>,
    /// Set for [`SemigroupMode::ApproxRoot`]: the generators divide by `d_k`
    /// where the printed statement divides by `d_{k-1}`.
    pub note: Option<String>,
}

/// Generators `n e_1, ..., n e_e, r_1, ..., r_h` (negated `r` when `negate`).
pub fn semigroup_generators(
    cs: &CharSeq,
    mode: SemigroupMode,
    negate: bool,
) -> Result<SemigroupPresentation> {
    let sign = if negate { -1 } else { 1 };
    match mode {
        SemigroupMode::Full => {
            let mut g: Vec<ExponentVec> = (0..cs.e)
                .map(|i| ExponentVec::unit(cs.e, i, cs.n))
                .collect();
            g.extend(cs.r.iter().map(|r| r * sign));
            Ok(SemigroupPresentation {
                generators: g,
                note: None,
            })
        }
        SemigroupMode::ApproxRoot(k) => {
            if k == 0 || k > cs.h() + 1 {
                return Err(Error::Invalid(format!(
                    "stage {} outside 1..={}",
                    k,
                    cs.h() + 1
                )));
            }
            let dk = cs.d[k - 1];
            let mut g: Vec<ExponentVec> = (0..cs.e)
                .map(|i| ExponentVec::unit(cs.e, i, cs.n / dk))
                .collect();
            for r in &cs.r[..k - 1] {
                let v = (r * sign)
                    .div_exact(dk)
                    .ok_or_else(|| Error::NonIntegral(format!("{} / {}", r, dk)))?;
                g.push(v);
            }
            Ok(SemigroupPresentation {
                generators: g,
                note: Some("r_i divided by d_k (i < k)".into()),
            })
        }
    }
}

/// A nonnegative integer combination of `gens` equal to `v` (one count per
/// generator), or `None` if there is none.
pub fn semigroup_member(v: &ExponentVec, gens: &SemigroupPresentation) -> Result<Option<Vec<u64>>> {
    let g = &gens.generators;
    if let Some(bad) = g.iter().find(|x| !x.is_nonneg()) {
        return Err(Error::GeneratorOutsideOrthant(bad.clone()));
    }
    if g.iter().any(|x| x.len() != v.len()) {
        return Err(Error::AmbientMismatch(
            v.len(),
            g.first().map_or(0, |x| x.len()),
        ));
    }
    if !v.is_nonneg() {
        return Ok(None);
    }
    let mut counts = vec![0u64; g.len()];
    let mut dead = HashSet::new();
    Ok(search(v.clone(), 0, g, &mut counts, &mut dead).then_some(counts))
}

fn search(
    v: ExponentVec,
    idx: usize,
    g: &[ExponentVec],
    counts: &mut [u64],
    dead: &mut HashSet<(ExponentVec, usize)>,
) -> bool {
    if v.is_zero() {
        return true;
    }
    if idx == g.len() || dead.contains(&(v.clone(), idx)) {
        return false;
    }
    let gen = &g[idx];
    let max = if gen.is_zero() {
        0
    } else {
        gen.0
            .iter()
            .zip(&v.0)
            .filter(|(a, _)| **a > 0)
            .map(|(a, b)| b / a)
            .min()
            .unwrap_or(0)
    };
    for c in (0..=max).rev() {
        let rest = &v - &(gen * c);
        counts[idx] = c as u64;
        if search(rest, idx + 1, g, counts, dead) {
            return true;
        }
    }
    counts[idx] = 0;
    dead.insert((v, idx));
    false
}

/// Converts an exact rational vector for display.
pub fn rational_vec_to_strings(v: &[BigRational]) -> Vec<String> {
    v.iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            }
        })
        .collect()
}
