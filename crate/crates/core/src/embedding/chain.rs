//! Elementary coordinate changes and their compositions.
//!
//! A map acts on polynomials by substitution. Applying the chain
//! `[phi_1, ..., phi_m]` to `p` substitutes `phi_1` first, so the result is
//! `p o phi_1 o ... o phi_m`, and applying the chain to the variable `x_i`
//! returns the `i`-th component of `phi_1 o ... o phi_m`.

use crate::{Error, ExponentVec, LaurentPoly, Result, Scalar};

/// Default total degree guard for [`AutomorphismChain::apply`].
pub const DEFAULT_DEGREE_BOUND: i64 = 4096;

#[derive(Clone, PartialEq, Debug)]
pub enum ElementaryMap<C> {
    /// `x_var -> image` with `image = c x_var + g`, `c` a nonzero constant
    /// and `g` free of `x_var`.
    TranslateVar {
        var: usize,
        image: LaurentPoly<C>,
    },
    Scale {
        var: usize,
        factor: C,
    },
    /// `x_i -> x_{perm[i]}`.
    Permute {
        perm: Vec<usize>,
    },
}

/// Splits `image` as `c x_var + g`.
fn split_triangular<C: Scalar>(var: usize, image: &LaurentPoly<C>) -> Result<(C, LaurentPoly<C>)> {
    if !image.is_polynomial() {
        return Err(Error::Invalid(
            "translation images must be polynomials".into(),
        ));
    }
    let unit = ExponentVec::unit(image.nvars(), var, 1);
    let mut c = C::zero();
    let mut rest = LaurentPoly::zero(image.nvars());
    for (e, v) in image.iter() {
        if e.0[var] == 0 {
            rest.add_term(e.clone(), v.clone());
        } else if *e == unit {
            c = v.clone();
        } else {
            return Err(Error::Invalid(format!(
                "image of x{} is not of the form c x{} + g",
                var + 1,
                var + 1
            )));
        }
    }
    if c.is_zero() {
        return Err(Error::Invalid(format!(
            "image of x{} does not involve it",
            var + 1
        )));
    }
    Ok((c, rest))
}

impl<C: Scalar> ElementaryMap<C> {
    pub fn translate(var: usize, image: LaurentPoly<C>) -> Result<Self> {
        split_triangular(var, &image)?;
        Ok(ElementaryMap::TranslateVar { var, image })
    }

    /// Images of the variables `x_0, ..., x_{nvars-1}`.
    pub fn images(&self, nvars: usize) -> Result<Vec<LaurentPoly<C>>> {
        let mut out: Vec<LaurentPoly<C>> = (0..nvars).map(|i| LaurentPoly::var(nvars, i)).collect();
        match self {
            ElementaryMap::TranslateVar { var, image } => {
                if *var >= nvars || image.nvars() != nvars {
                    return Err(Error::AmbientMismatch(image.nvars(), nvars));
                }
                out[*var] = image.clone();
            }
            ElementaryMap::Scale { var, factor } => {
                if *var >= nvars {
                    return Err(Error::AmbientMismatch(*var + 1, nvars));
                }
                out[*var] = out[*var].scale(factor);
            }
            ElementaryMap::Permute { perm } => {
                if perm.len() != nvars {
                    return Err(Error::AmbientMismatch(perm.len(), nvars));
                }
                for (i, &j) in perm.iter().enumerate() {
                    out[i] = LaurentPoly::var(nvars, j);
                }
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            ElementaryMap::TranslateVar { var, image } => {
                let (c, g) = split_triangular(*var, image)?;
                let x = LaurentPoly::var(image.nvars(), *var);
                ElementaryMap::TranslateVar {
                    var: *var,
                    image: (&x - &g).scale(&(C::one() / c)),
                }
            }
            ElementaryMap::Scale { var, factor } => {
                if factor.is_zero() {
                    return Err(Error::Invalid("scale by zero".into()));
                }
                ElementaryMap::Scale {
                    var: *var,
                    factor: C::one() / factor.clone(),
                }
            }
            ElementaryMap::Permute { perm } => {
                let mut inv = vec![0; perm.len()];
                for (i, &j) in perm.iter().enumerate() {
                    inv[j] = i;
                }
                ElementaryMap::Permute { perm: inv }
            }
        })
    }

    pub fn apply(&self, p: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        p.substitute(&self.images(p.nvars())?)
    }

    fn is_identity(&self, nvars: usize) -> bool {
        match self {
            ElementaryMap::TranslateVar { var, image } => *image == LaurentPoly::var(nvars, *var),
            ElementaryMap::Scale { factor, .. } => factor.is_one(),
            ElementaryMap::Permute { perm } => perm.iter().enumerate().all(|(i, &j)| i == j),
        }
    }

    /// The variable changed by a triangular map, with its image.
    fn triangular(&self, nvars: usize) -> Option<(usize, LaurentPoly<C>)> {
        match self {
            ElementaryMap::TranslateVar { var, image } => Some((*var, image.clone())),
            ElementaryMap::Scale { var, factor } => {
                Some((*var, LaurentPoly::var(nvars, *var).scale(factor)))
            }
            ElementaryMap::Permute { .. } => None,
        }
    }

    /// Relabels variables through `var_map` into an ambient of `nvars`
    /// variables; unmapped ambient variables are fixed.
    pub fn lift(&self, nvars: usize, var_map: &[usize]) -> Result<Self> {
        let rename = |p: &LaurentPoly<C>| {
            let images: Vec<_> = var_map
                .iter()
                .map(|&j| LaurentPoly::var(nvars, j))
                .collect();
            p.substitute(&images)
        };
        Ok(match self {
            ElementaryMap::TranslateVar { var, image } => ElementaryMap::TranslateVar {
                var: var_map[*var],
                image: rename(image)?,
            },
            ElementaryMap::Scale { var, factor } => ElementaryMap::Scale {
                var: var_map[*var],
                factor: factor.clone(),
            },
            ElementaryMap::Permute { perm } => {
                let mut full: Vec<usize> = (0..nvars).collect();
                for (i, &j) in perm.iter().enumerate() {
                    full[var_map[i]] = var_map[j];
                }
                ElementaryMap::Permute { perm: full }
            }
        })
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct AutomorphismChain<C> {
    pub nvars: usize,
    pub maps: Vec<ElementaryMap<C>>,
}

impl<C: Scalar> AutomorphismChain<C> {
    pub fn identity(nvars: usize) -> Self {
        AutomorphismChain {
            nvars,
            maps: vec![],
        }
    }

    pub fn from_maps(nvars: usize, maps: Vec<ElementaryMap<C>>) -> Result<Self> {
        let chain = AutomorphismChain { nvars, maps };
        for m in &chain.maps {
            m.images(nvars)?;
            m.inverse()?;
        }
        Ok(chain)
    }

    pub fn is_identity(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn push(&mut self, m: ElementaryMap<C>) {
        self.maps.push(m);
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        let mut maps = self.maps.clone();
        maps.extend(other.maps.iter().cloned());
        AutomorphismChain {
            nvars: self.nvars,
            maps,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(AutomorphismChain {
            nvars: self.nvars,
            maps: self
                .maps
                .iter()
                .rev()
                .map(|m| m.inverse())
                .collect::<Result<_>>()?,
        })
    }

    pub fn apply_bounded(&self, p: &LaurentPoly<C>, bound: i64) -> Result<LaurentPoly<C>> {
        if p.nvars() != self.nvars {
            return Err(Error::AmbientMismatch(p.nvars(), self.nvars));
        }
        let mut out = p.clone();
        for m in &self.maps {
            out = m.apply(&out)?;
            if out.max_total_degree().unwrap_or(0) > bound {
                return Err(Error::DegreeBoundExceeded(bound));
            }
        }
        Ok(out)
    }

    pub fn apply(&self, p: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        self.apply_bounded(p, DEFAULT_DEGREE_BOUND)
    }

    /// Components of the composite map: the chain applied to each variable.
    pub fn components(&self) -> Result<Vec<LaurentPoly<C>>> {
        (0..self.nvars)
            .map(|i| self.apply(&LaurentPoly::var(self.nvars, i)))
            .collect()
    }

    pub fn lift(&self, nvars: usize, var_map: &[usize]) -> Result<Self> {
        if var_map.len() != self.nvars {
            return Err(Error::AmbientMismatch(var_map.len(), self.nvars));
        }
        Ok(AutomorphismChain {
            nvars,
            maps: self
                .maps
                .iter()
                .map(|m| m.lift(nvars, var_map))
                .collect::<Result<_>>()?,
        })
    }

    /// Drops identities and fuses neighbouring triangular maps on the same
    /// variable.
    pub fn simplify(&self) -> Result<Self> {
        let n = self.nvars;
        let mut out: Vec<ElementaryMap<C>> = Vec::new();
        for m in &self.maps {
            if m.is_identity(n) {
                continue;
            }
            let fused = match (out.last().and_then(|p| p.triangular(n)), m.triangular(n)) {
                (Some((a, first)), Some((b, second))) if a == b => {
                    let mut images: Vec<_> = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
                    images[a] = second;
                    Some((a, first.substitute(&images)?))
                }
                _ => None,
            };
            match fused {
                Some((var, image)) => {
                    out.pop();
                    let x = LaurentPoly::var(n, var);
                    if image == x {
                        continue;
                    }
                    let (c, g) = split_triangular(var, &image)?;
                    out.push(if g.is_zero() {
                        ElementaryMap::Scale { var, factor: c }
                    } else {
                        ElementaryMap::TranslateVar { var, image }
                    });
                }
                None => out.push(m.clone()),
            }
        }
        Ok(AutomorphismChain {
            nvars: n,
            maps: out,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ev, q, Q};

    fn x(n: usize, i: usize) -> LaurentPoly<Q> {
        LaurentPoly::var(n, i)
    }

    #[test]
    fn substitution_order() {
        // x1 -> y^2 - x1 sends y^2 - x1 to x1
        let y2 = LaurentPoly::monomial(ev![0, 2], q(1, 1));
        let f = &y2 - &x(2, 0);
        let m = ElementaryMap::translate(0, f.clone()).unwrap();
        let chain = AutomorphismChain::from_maps(2, vec![m]).unwrap();
        assert_eq!(chain.apply(&f).unwrap(), x(2, 0));
        assert_eq!(chain.inverse().unwrap().apply(&x(2, 0)).unwrap(), f);
    }

    #[test]
    fn inverse_pairs_cancel() {
        let sq = LaurentPoly::monomial(ev![2, 0], q(1, 1));
        let up = ElementaryMap::translate(1, &x(2, 1) + &sq).unwrap();
        let down = ElementaryMap::translate(1, &x(2, 1) - &sq).unwrap();
        let chain = AutomorphismChain::from_maps(2, vec![up, down]).unwrap();
        let f = &(&x(2, 0) * &x(2, 1)) + &LaurentPoly::monomial(ev![0, 3], q(2, 1));
        assert_eq!(chain.apply(&f).unwrap(), f);
        assert!(chain.simplify().unwrap().is_identity());
    }

    #[test]
    fn permutation_and_scale() {
        let chain = AutomorphismChain::from_maps(
            3,
            vec![
                ElementaryMap::Permute {
                    perm: vec![1, 2, 0],
                },
                ElementaryMap::Scale {
                    var: 1,
                    factor: q(3, 1),
                },
            ],
        )
        .unwrap();
        let comps = chain.components().unwrap();
        assert_eq!(comps[0], x(3, 1).scale(&q(3, 1)));
        assert_eq!(comps[2], x(3, 0));
        let f = &x(3, 0) + &(&x(3, 1) * &x(3, 2));
        let back = chain
            .inverse()
            .unwrap()
            .apply(&chain.apply(&f).unwrap())
            .unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_non_triangular() {
        assert!(
            ElementaryMap::translate(0, LaurentPoly::<Q>::monomial(ev![2, 0], q(1, 1))).is_err()
        );
        assert!(ElementaryMap::translate(0, x(2, 1)).is_err());
    }

    #[test]
    fn degree_guard() {
        let sq = LaurentPoly::monomial(ev![0, 5], q(1, 1));
        let m = ElementaryMap::translate(0, &x(2, 0) + &sq).unwrap();
        let chain = AutomorphismChain::from_maps(2, vec![m]).unwrap();
        let f = LaurentPoly::monomial(ev![3, 0], q(1, 1));
        assert_eq!(
            chain.apply_bounded(&f, 10),
            Err(Error::DegreeBoundExceeded(10))
        );
    }
}
