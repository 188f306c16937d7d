//! Plane algorithms: tame reduction of polynomial pairs, factor counting for
//! quasi-homogeneous polynomials and the Newton polygon decision of the
//! quasi-ordinary property for `D(X, Y)`.

use num_integer::Integer;

use super::chain::{AutomorphismChain, ElementaryMap};
use crate::univariate::UPoly;
use crate::{ev, grlex_cmp, Error, ExponentVec, LaurentPoly, Result, Scalar};

fn check_plane<C: Scalar>(p: &LaurentPoly<C>) -> Result<()> {
    if p.nvars() != 2 {
        return Err(Error::AmbientMismatch(p.nvars(), 2));
    }
    if !p.is_polynomial() {
        return Err(Error::NegativeExponent);
    }
    Ok(())
}

fn var<C: Scalar>(i: usize) -> LaurentPoly<C> {
    LaurentPoly::var(2, i)
}

fn leading_form<C: Scalar>(p: &LaurentPoly<C>) -> (i64, LaurentPoly<C>) {
    let d = p.max_total_degree().unwrap_or(0);
    (d, p.homogeneous_component(d))
}

/// `c` with `a = c b`, if any.
fn scalar_ratio<C: Scalar>(a: &LaurentPoly<C>, b: &LaurentPoly<C>) -> Option<C> {
    let (e, bc) = b.iter().max_by(|x, y| grlex_cmp(x.0, y.0))?;
    let c = a.coeff(e) / bc.clone();
    (!c.is_zero() && *a == b.scale(&c)).then_some(c)
}

#[derive(Clone, PartialEq, Debug)]
pub enum TameOutcome<C> {
    /// `forward` applied to `(X, Y)` gives `(P1, P2)`; `inverse` sends
    /// `P1, P2` back to `X, Y`.
    Pair {
        forward: AutomorphismChain<C>,
        inverse: AutomorphismChain<C>,
        steps: usize,
    },
    NotPair {
        stuck: (LaurentPoly<C>, LaurentPoly<C>),
    },
}

impl<C> TameOutcome<C> {
    pub fn is_pair(&self) -> bool {
        matches!(self, TameOutcome::Pair { .. })
    }
}

/// Chain whose components are the affine map
/// `(a X + b Y + b1, c X + d Y + b2)`; the linear part must be invertible.
fn affine_chain<C: Scalar>(m: [[C; 3]; 2]) -> Vec<ElementaryMap<C>> {
    let [[a, b, b1], [c, d, b2]] = m;
    if d.is_zero() {
        let mut out = affine_chain([[b, a, b1], [d, c, b2]]);
        out.push(ElementaryMap::Permute { perm: vec![1, 0] });
        return out;
    }
    let det = a.clone() * d.clone() - b.clone() * c.clone();
    let first = &(&var::<C>(0).scale(&(det / d.clone()))
        + &var::<C>(1).scale(&(b.clone() / d.clone())))
        + &LaurentPoly::constant(2, b1 - b * b2.clone() / d.clone());
    let second = &(&var::<C>(0).scale(&c) + &var::<C>(1).scale(&d)) + &LaurentPoly::constant(2, b2);
    vec![
        ElementaryMap::TranslateVar {
            var: 0,
            image: first,
        },
        ElementaryMap::TranslateVar {
            var: 1,
            image: second,
        },
    ]
}

fn linear_row<C: Scalar>(p: &LaurentPoly<C>) -> [C; 3] {
    [
        p.coeff(&ev![1, 0]),
        p.coeff(&ev![0, 1]),
        p.coeff(&ev![0, 0]),
    ]
}

/// Decides whether `(P1, P2)` is an automorphism of the plane by repeatedly
/// cancelling the leading form of the higher degree component against a
/// power of the other one.
pub fn tame_pair_reduce<C: Scalar>(
    p1: &LaurentPoly<C>,
    p2: &LaurentPoly<C>,
) -> Result<TameOutcome<C>> {
    check_plane(p1)?;
    check_plane(p2)?;
    let mut cur = [p1.clone(), p2.clone()];
    // each step is `u_t -> u_t - c u_o^j`
    let mut steps: Vec<(usize, C, u32)> = Vec::new();
    loop {
        if cur[0].max_total_degree().unwrap_or(0) <= 0
            || cur[1].max_total_degree().unwrap_or(0) <= 0
        {
            return Ok(stuck(&cur));
        }
        let (d0, lf0) = leading_form(&cur[0]);
        let (d1, lf1) = leading_form(&cur[1]);
        if d0 == 1 && d1 == 1 {
            let rows = [linear_row(&cur[0]), linear_row(&cur[1])];
            let det =
                rows[0][0].clone() * rows[1][1].clone() - rows[0][1].clone() * rows[1][0].clone();
            if det.is_zero() {
                return Ok(stuck(&cur));
            }
            let mut maps: Vec<ElementaryMap<C>> = Vec::new();
            for (t, c, j) in &steps {
                let o = 1 - t;
                let image = &var::<C>(*t) + &var::<C>(o).pow(*j).scale(c);
                maps.push(ElementaryMap::TranslateVar { var: *t, image });
            }
            maps.extend(affine_chain(rows));
            let forward = AutomorphismChain::from_maps(2, maps)?;
            let comps = forward.components()?;
            if comps[0] != *p1 || comps[1] != *p2 {
                return Err(Error::Invariant(
                    "tame chain does not reproduce the pair".into(),
                ));
            }
            let inverse = forward.inverse()?.simplify()?;
            return Ok(TameOutcome::Pair {
                forward: forward.simplify()?,
                inverse,
                steps: steps.len(),
            });
        }
        let mut order = [(0usize, d0, &lf0, d1, &lf1), (1usize, d1, &lf1, d0, &lf0)];
        if d1 > d0 {
            order.swap(0, 1);
        }
        let mut reduced = false;
        for (t, dt, lft, do_, lfo) in order {
            if dt < do_ || dt % do_ != 0 {
                continue;
            }
            let j = (dt / do_) as u32;
            if let Some(c) = scalar_ratio(lft, &lfo.pow(j)) {
                cur[t] = &cur[t] - &cur[1 - t].pow(j).scale(&c);
                steps.push((t, c, j));
                reduced = true;
                break;
            }
        }
        if !reduced {
            return Ok(stuck(&cur));
        }
    }
}

fn stuck<C: Scalar>(cur: &[LaurentPoly<C>; 2]) -> TameOutcome<C> {
    TameOutcome::NotPair {
        stuck: (cur[0].clone(), cur[1].clone()),
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct QuasiHomogFactors<C> {
    pub p: i64,
    pub q: i64,
    pub constant: C,
    /// Exponents of `X` and `Y` in the monomial part.
    pub monomial: (i64, i64),
    /// Squarefree decomposition of `R(t)` where
    /// `P = c X^a Y^b Y^{qN} R(X^p / Y^q)`.
    pub binomial_part: Vec<(UPoly<C>, usize)>,
    /// Number of distinct irreducible factors over the algebraic closure.
    pub r: usize,
    /// Their multiplicities: `X`, `Y` (when present), then the binomials.
    pub multiplicities: Vec<usize>,
}

impl<C: Scalar> QuasiHomogFactors<C> {
    /// The factors with multiplicity when every root of `R` is rational:
    /// `X`, `Y`, then `X^p - alpha Y^q` by increasing `alpha`.
    pub fn explicit_factors(&self) -> Result<Vec<(LaurentPoly<C>, usize)>> {
        let mut out = Vec::new();
        if self.monomial.0 > 0 {
            out.push((var(0), self.monomial.0 as usize));
        }
        if self.monomial.1 > 0 {
            out.push((var(1), self.monomial.1 as usize));
        }
        let mut roots: Vec<(C, usize)> = Vec::new();
        for (a, k) in &self.binomial_part {
            for alpha in a.solve_simple()? {
                roots.push((alpha, *k));
            }
        }
        roots.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(std::cmp::Ordering::Equal));
        for (alpha, k) in roots {
            let xp = LaurentPoly::monomial(ev![self.p, 0], C::one());
            let yq = LaurentPoly::monomial(ev![0, self.q], alpha);
            out.push((&xp - &yq, k));
        }
        Ok(out)
    }
}

/// Counts the distinct irreducible factors of a polynomial whose terms all
/// lie on a line of direction `(p, -q)`, `gcd(p, q) = 1`. The binomial
/// factors `X^p - alpha Y^q` are counted through the squarefree
/// decomposition of the associated one-variable polynomial, so no field
/// extension is built.
pub fn quasihomog_factor_count<C: Scalar>(
    p_poly: &LaurentPoly<C>,
    weights: (i64, i64),
) -> Result<QuasiHomogFactors<C>> {
    check_plane(p_poly)?;
    let (p, q) = weights;
    if p < 1 || q < 1 || p.gcd(&q) != 1 {
        return Err(Error::Invalid(format!(
            "edge weights ({}, {}) must be coprime and positive",
            p, q
        )));
    }
    if p_poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = p_poly.exponents().map(|e| e.0[0]).min().unwrap();
    let b = p_poly.exponents().map(|e| e.0[1]).min().unwrap();
    let top = p_poly.exponents().map(|e| e.0[0]).max().unwrap();
    if (top - a) % p != 0 {
        return Err(Error::NotQuasiHomogeneous(p, q));
    }
    let n = (top - a) / p;
    let mut coeffs = vec![C::zero(); n as usize + 1];
    for (e, c) in p_poly.iter() {
        let di = e.0[0] - a;
        if di % p != 0 || e.0[1] != b + q * (n - di / p) {
            return Err(Error::NotQuasiHomogeneous(p, q));
        }
        coeffs[(di / p) as usize] = c.clone();
    }
    let constant = coeffs[n as usize].clone();
    let r_poly = UPoly::new(coeffs);
    let binomial_part = r_poly.squarefree_decomposition();
    let mut multiplicities = Vec::new();
    if a > 0 {
        multiplicities.push(a as usize);
    }
    if b > 0 {
        multiplicities.push(b as usize);
    }
    for (f, k) in &binomial_part {
        multiplicities.extend(std::iter::repeat_n(*k, f.degree().unwrap_or(0)));
    }
    Ok(QuasiHomogFactors {
        p,
        q,
        constant,
        monomial: (a, b),
        binomial_part,
        r: multiplicities.len(),
        multiplicities,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlopeSign {
    Negative,
    Zero,
    Positive,
    Vertical,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HullEdge {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub slope: SlopeSign,
}

impl HullEdge {
    /// For a negative slope edge: `(p, q)` with the edge direction `(p, -q)`.
    pub fn weights(&self) -> Option<(i64, i64)> {
        if self.slope != SlopeSign::Negative {
            return None;
        }
        let (l, r) = if self.from.0 < self.to.0 {
            (self.from, self.to)
        } else {
            (self.to, self.from)
        };
        let (dx, dy) = (r.0 - l.0, l.1 - r.1);
        let g = dx.gcd(&dy);
        Some((dx / g, dy / g))
    }

    pub fn contains(&self, pt: (i64, i64)) -> bool {
        let (a, b) = (self.from, self.to);
        let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
        cross == 0
            && pt.0 >= a.0.min(b.0)
            && pt.0 <= a.0.max(b.0)
            && pt.1 >= a.1.min(b.1)
            && pt.1 <= a.1.max(b.1)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonPolygon2D {
    /// Support plus the origin, sorted.
    pub points: Vec<(i64, i64)>,
    /// Hull vertices, counter-clockwise.
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<HullEdge>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl NewtonPolygon2D {
    pub fn new<C: Scalar>(d: &LaurentPoly<C>) -> Result<Self> {
        check_plane(d)?;
        let mut points: Vec<(i64, i64)> = d.exponents().map(|e| (e.0[0], e.0[1])).collect();
        points.push((0, 0));
        points.sort();
        points.dedup();
        let vertices = if points.len() < 3 {
            points.clone()
        } else {
            let mut lower: Vec<(i64, i64)> = Vec::new();
            for &p in &points {
                while lower.len() >= 2
                    && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
                {
                    lower.pop();
                }
                lower.push(p);
            }
            let mut upper: Vec<(i64, i64)> = Vec::new();
            for &p in points.iter().rev() {
                while upper.len() >= 2
                    && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
                {
                    upper.pop();
                }
                upper.push(p);
            }
            lower.pop();
            upper.pop();
            lower.extend(upper);
            lower
        };
        let mut edges = Vec::new();
        let k = vertices.len();
        let pairs: Vec<((i64, i64), (i64, i64))> = match k {
            0 | 1 => vec![],
            2 => vec![(vertices[0], vertices[1])],
            _ => (0..k)
                .map(|i| (vertices[i], vertices[(i + 1) % k]))
                .collect(),
        };
        for (from, to) in pairs {
            let (dx, dy) = (to.0 - from.0, to.1 - from.1);
            let slope = if dx == 0 {
                SlopeSign::Vertical
            } else if dy == 0 {
                SlopeSign::Zero
            } else if (dx > 0) == (dy > 0) {
                SlopeSign::Positive
            } else {
                SlopeSign::Negative
            };
            edges.push(HullEdge { from, to, slope });
        }
        Ok(NewtonPolygon2D {
            points,
            vertices,
            edges,
        })
    }

    pub fn negative_edges(&self) -> Vec<&HullEdge> {
        self.edges
            .iter()
            .filter(|e| e.slope == SlopeSign::Negative)
            .collect()
    }

    /// `P(E)`: the terms of `d` on the edge.
    pub fn edge_polynomial<C: Scalar>(d: &LaurentPoly<C>, edge: &HullEdge) -> LaurentPoly<C> {
        d.filter_terms(|e| edge.contains((e.0[0], e.0[1])))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QoStep {
    /// Branch label: "1", "2.1", "2.2.1" ... "2.2.5".
    pub branch: &'static str,
    pub r: Option<usize>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum QoPropertyOutcome<C> {
    HasQo {
        /// The coordinate change `(X, Y) -> (w_1, w_2)`: its components
        /// express the new coordinates in the old ones.
        change: AutomorphismChain<C>,
        /// Applied to `D` this gives `image`; the inverse of `change`.
        substitution: AutomorphismChain<C>,
        image: LaurentPoly<C>,
        /// Exponent of the dominating monomial of `image`.
        n_exp: ExponentVec,
        path: Vec<QoStep>,
    },
    NoQo {
        branch: &'static str,
        r: Option<usize>,
        path: Vec<QoStep>,
    },
    FuelExhausted {
        path: Vec<QoStep>,
    },
}

/// The coordinate-wise maximum of the support when it lies in the support:
/// then `D(w^{-1})` is a monomial times `1 + (positive order)`.
pub fn dominating_exponent<C: Scalar>(d: &LaurentPoly<C>) -> Option<ExponentVec> {
    let mut max = vec![i64::MIN; d.nvars()];
    for e in d.exponents() {
        for (m, c) in max.iter_mut().zip(&e.0) {
            *m = (*m).max(*c);
        }
    }
    let max = ExponentVec(max);
    (!d.is_zero() && !d.coeff(&max).is_zero()).then_some(max)
}

pub fn default_fuel<C: Scalar>(d: &LaurentPoly<C>) -> usize {
    d.max_total_degree().unwrap_or(0).max(1) as usize
}

/// Newton polygon decision of the quasi-ordinary property for `D(X, Y)`.
/// Every change of variables costs one unit of fuel.
pub fn qo_property_decide<C: Scalar>(
    d: &LaurentPoly<C>,
    fuel: usize,
) -> Result<QoPropertyOutcome<C>> {
    check_plane(d)?;
    if d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = d.clone();
    let mut subst = AutomorphismChain::identity(2);
    let mut path = Vec::new();
    let mut fuel = fuel;
    loop {
        let np = NewtonPolygon2D::new(&cur)?;
        let edges = np.negative_edges();
        if edges.is_empty() {
            path.push(QoStep {
                branch: "1",
                r: None,
            });
            let n_exp = dominating_exponent(&cur).ok_or_else(|| {
                Error::Invariant("no negative edge but no dominating monomial".into())
            })?;
            let substitution = subst.simplify()?;
            return Ok(QoPropertyOutcome::HasQo {
                change: substitution.inverse()?.simplify()?,
                substitution,
                image: cur,
                n_exp,
                path,
            });
        }
        if edges.len() >= 2 {
            return Ok(QoPropertyOutcome::NoQo {
                branch: "2.1",
                r: None,
                path,
            });
        }
        let edge = edges[0];
        let pe = NewtonPolygon2D::edge_polynomial(&cur, edge);
        let (p, q) = edge.weights().unwrap();
        let count = quasihomog_factor_count(&pe, (p, q))?;
        let r = count.r;
        let no = |branch, path| {
            Ok(QoPropertyOutcome::NoQo {
                branch,
                r: Some(r),
                path,
            })
        };
        if r >= 3 {
            return no("2.2.1", path);
        }
        let binomials = r - (count.monomial.0 > 0) as usize - (count.monomial.1 > 0) as usize;
        let (branch, pair) = if r == 2 {
            // two binomials X^p - a Y^q, X^p - b Y^q form a pair only when linear
            if binomials == 2 && (p, q) != (1, 1) {
                return no("2.2.2", path);
            }
            let factors = count.explicit_factors()?;
            match tame_pair_reduce(&factors[0].0, &factors[1].0)? {
                TameOutcome::NotPair { .. } => return no("2.2.2", path),
                pair => ("2.2.4", pair),
            }
        } else {
            if p >= 2 && q >= 2 {
                return no("2.2.3", path);
            }
            let factors = count.explicit_factors()?;
            let p1 = &factors[0].0;
            let other = if p == 1 { var(1) } else { var(0) };
            let pair = tame_pair_reduce(p1, &other)?;
            if !pair.is_pair() {
                return Err(Error::Invariant(format!(
                    "binomial with exponents ({}, {}) has no partner",
                    p, q
                )));
            }
            ("2.2.5", pair)
        };
        if fuel == 0 {
            return Ok(QoPropertyOutcome::FuelExhausted { path });
        }
        fuel -= 1;
        path.push(QoStep { branch, r: Some(r) });
        let TameOutcome::Pair { inverse, .. } = pair else {
            unreachable!()
        };
        cur = inverse.apply(&cur)?;
        subst = subst.then(&inverse);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Q};

    fn mono(i: i64, j: i64, c: i64) -> LaurentPoly<Q> {
        LaurentPoly::monomial(ev![i, j], q(c, 1))
    }

    fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly<Q> {
        terms
            .iter()
            .fold(LaurentPoly::zero(2), |a, &(i, j, c)| &a + &mono(i, j, c))
    }

    #[test]
    fn tame_examples() {
        let x = poly(&[(1, 0, 1)]);
        let y = poly(&[(0, 1, 1)]);
        let x_plus_y = poly(&[(1, 0, 1), (0, 1, 1)]);
        match tame_pair_reduce(&x_plus_y, &y).unwrap() {
            TameOutcome::Pair {
                forward, inverse, ..
            } => {
                assert_eq!(
                    forward.components().unwrap(),
                    vec![x_plus_y.clone(), y.clone()]
                );
                assert_eq!(
                    inverse.components().unwrap(),
                    vec![poly(&[(1, 0, 1), (0, 1, -1)]), y.clone()]
                );
            }
            other => panic!("{:?}", other),
        }
        assert!(tame_pair_reduce(&poly(&[(1, 0, 1), (0, 2, 1)]), &y)
            .unwrap()
            .is_pair());
        assert!(!tame_pair_reduce(&x, &x).unwrap().is_pair());
        assert!(!tame_pair_reduce(&poly(&[(2, 0, 1)]), &y).unwrap().is_pair());
    }

    #[test]
    fn tame_nested() {
        // ((y^2 - x)^3 + y, y^2 - x)
        let g = poly(&[(0, 2, 1), (1, 0, -1)]);
        let f = &g.pow(3) + &poly(&[(0, 1, 1)]);
        match tame_pair_reduce(&f, &g).unwrap() {
            TameOutcome::Pair { inverse, steps, .. } => {
                assert_eq!(steps, 2);
                assert_eq!(inverse.apply(&f).unwrap(), poly(&[(1, 0, 1)]));
                assert_eq!(inverse.apply(&g).unwrap(), poly(&[(0, 1, 1)]));
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn factor_counts() {
        let c = quasihomog_factor_count(&poly(&[(2, 1, 1), (1, 2, 1)]), (1, 1)).unwrap();
        assert_eq!(c.r, 3);
        let c = quasihomog_factor_count(&poly(&[(2, 0, 1), (0, 2, -1)]), (1, 1)).unwrap();
        assert_eq!(c.r, 2);
        let sq = poly(&[(2, 0, 1), (0, 3, -1)]).pow(2);
        let c = quasihomog_factor_count(&sq, (2, 3)).unwrap();
        assert_eq!((c.r, c.multiplicities.clone()), (1, vec![2]));
        assert_eq!(
            quasihomog_factor_count(&poly(&[(2, 0, 1), (0, 1, 1)]), (1, 1)),
            Err(Error::NotQuasiHomogeneous(1, 1))
        );
    }

    #[test]
    fn hull_edges() {
        let np = NewtonPolygon2D::new(&poly(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)])).unwrap();
        let neg = np.negative_edges();
        assert_eq!(neg.len(), 1);
        assert_eq!(neg[0].weights(), Some((1, 1)));
        let np = NewtonPolygon2D::new(&poly(&[(1, 1, 1)])).unwrap();
        assert!(np.negative_edges().is_empty());
        let np = NewtonPolygon2D::new(&poly(&[(3, 0, 1), (2, 2, 1), (0, 3, 1)])).unwrap();
        assert_eq!(np.negative_edges().len(), 2);
    }

    fn branches(out: &QoPropertyOutcome<Q>) -> Vec<&'static str> {
        match out {
            QoPropertyOutcome::HasQo { path, .. } => path.iter().map(|s| s.branch).collect(),
            QoPropertyOutcome::NoQo { path, branch, .. } => path
                .iter()
                .map(|s| s.branch)
                .chain(std::iter::once(*branch))
                .collect(),
            QoPropertyOutcome::FuelExhausted { path } => path.iter().map(|s| s.branch).collect(),
        }
    }

    #[test]
    fn qo_property_branches() {
        let xy = poly(&[(1, 1, 1)]);
        assert_eq!(branches(&qo_property_decide(&xy, 2).unwrap()), vec!["1"]);

        let sq = poly(&[(1, 0, 1), (0, 1, 1)]).pow(2);
        match qo_property_decide(&sq, 2).unwrap() {
            QoPropertyOutcome::HasQo {
                change,
                image,
                path,
                ..
            } => {
                assert_eq!(
                    change.components().unwrap(),
                    vec![poly(&[(1, 0, 1), (0, 1, 1)]), poly(&[(0, 1, 1)])]
                );
                assert_eq!(image, poly(&[(2, 0, 1)]));
                assert_eq!(path[0].branch, "2.2.5");
            }
            other => panic!("{:?}", other),
        }

        let three = poly(&[(2, 1, 1), (1, 2, 1)]);
        assert_eq!(
            branches(&qo_property_decide(&three, 3).unwrap()),
            vec!["2.2.1"]
        );

        let diff = poly(&[(2, 0, 1), (0, 2, -1)]);
        match qo_property_decide(&diff, 2).unwrap() {
            QoPropertyOutcome::HasQo {
                change,
                image,
                path,
                ..
            } => {
                assert_eq!(
                    change.components().unwrap(),
                    vec![
                        poly(&[(1, 0, 1), (0, 1, 1)]),
                        poly(&[(1, 0, 1), (0, 1, -1)])
                    ]
                );
                assert_eq!(image, poly(&[(1, 1, 1)]));
                assert_eq!(
                    path.iter().map(|s| s.branch).collect::<Vec<_>>(),
                    vec!["2.2.4", "1"]
                );
            }
            other => panic!("{:?}", other),
        }

        let cusp = poly(&[(2, 0, 1), (0, 3, -1)]);
        assert_eq!(
            branches(&qo_property_decide(&cusp, 3).unwrap()),
            vec!["2.2.3"]
        );

        assert!(matches!(
            qo_property_decide(&poly(&[(1, 0, 1), (0, 1, 1)]), 0).unwrap(),
            QoPropertyOutcome::FuelExhausted { .. }
        ));
    }
}
