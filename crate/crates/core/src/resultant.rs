//! Resultants and discriminants with respect to `y`.

use crate::{Error, LaurentPoly, Result, Scalar, YPoly};

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// (Bareiss) elimination. Every intermediate division is exact.
pub fn determinant<C: Scalar>(
    mut m: Vec<Vec<LaurentPoly<C>>>,
    nvars: usize,
) -> Result<LaurentPoly<C>> {
    let size = m.len();
    if size == 0 {
        return Ok(LaurentPoly::one(nvars));
    }
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(LaurentPoly::zero(nvars)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Invariant("inexact Bareiss division".into()))?;
            }
            m[i][k] = LaurentPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// The Sylvester matrix of `f` (degree `n`) and `g` (degree `m`): `m` shifted
/// rows of `f`'s coefficients followed by `n` rows of `g`'s, highest degree
/// first.
pub fn sylvester_matrix<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>) -> Vec<Vec<LaurentPoly<C>>> {
    let nv = f.nvars();
    let n = f.deg();
    let m = g.deg();
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, count) in [(f, n, m), (g, m, n)] {
        for s in 0..count {
            let mut row = vec![LaurentPoly::zero(nv); size];
            for i in 0..=deg {
                row[s + deg - i] = p.coeff(i);
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_y(f, g)`: the determinant of the Sylvester matrix.
pub fn resultant_y<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>) -> Result<LaurentPoly<C>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != g.nvars() {
        return Err(Error::AmbientMismatch(f.nvars(), g.nvars()));
    }
    let (n, m) = (f.deg(), g.deg());
    if n == 0 && m == 0 {
        return Err(Error::NothingToEliminate);
    }
    if m == 0 {
        return Ok(g.coeff(0).pow(n as u32));
    }
    if n == 0 {
        return Ok(f.coeff(0).pow(m as u32));
    }
    determinant(sylvester_matrix(f, g), f.nvars())
}

/// `(-1)^{n(n-1)/2} Res_y(f, f')` for monic `f`.
pub fn discriminant_y<C: Scalar>(f: &YPoly<C>) -> Result<LaurentPoly<C>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    if n == 0 {
        return Err(Error::Invalid("discriminant of a constant".into()));
    }
    if n == 1 {
        return Ok(LaurentPoly::one(f.nvars()));
    }
    let r = resultant_y(f, &f.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ypoly::ymono;
    use crate::{ev, q, Q};

    fn laplace(m: &[Vec<LaurentPoly<Q>>], nv: usize) -> LaurentPoly<Q> {
        if m.is_empty() {
            return LaurentPoly::one(nv);
        }
        let mut acc = LaurentPoly::zero(nv);
        for j in 0..m.len() {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<_>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let t = &m[0][j] * &laplace(&minor, nv);
            acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn resultant_examples() {
        let f = &YPoly::y_pow(1, 2) - &ymono(ev![3], 0, q(1, 1));
        let r = resultant_y(&f, &YPoly::y(1)).unwrap();
        assert_eq!(r, LaurentPoly::monomial(ev![3], q(-1, 1)));

        let a = ymono(ev![2], 0, q(3, 1));
        let b = ymono(ev![1], 0, q(-1, 1));
        let ya = &YPoly::y(1) - &a;
        let yb = &YPoly::y(1) - &b;
        assert_eq!(resultant_y(&ya, &yb).unwrap(), (&a - &b).coeff(0));

        let c = YPoly::constant(1, q(3, 1));
        assert_eq!(
            resultant_y(&f, &c).unwrap(),
            LaurentPoly::constant(1, q(9, 1))
        );
        assert_eq!(resultant_y(&c, &c), Err(Error::NothingToEliminate));
    }

    #[test]
    fn discriminant_examples() {
        let f = &YPoly::y_pow(2, 2) - &ymono(ev![3, 1], 0, q(1, 1));
        assert_eq!(
            discriminant_y(&f).unwrap(),
            LaurentPoly::monomial(ev![3, 1], q(4, 1))
        );

        let s = &ymono(ev![1, 0], 0, q(1, 1)) + &ymono(ev![0, 1], 0, q(1, 1));
        let f = &YPoly::y_pow(2, 3) - &s;
        let expect = s.coeff(0).pow(2).scale(&q(-27, 1));
        assert_eq!(discriminant_y(&f).unwrap(), expect);

        let f = &YPoly::y_pow(1, 2) - &YPoly::constant(1, q(1, 1));
        assert_eq!(
            discriminant_y(&f).unwrap(),
            LaurentPoly::constant(1, q(4, 1))
        );
    }

    #[test]
    fn bareiss_matches_laplace() {
        let f =
            &(&YPoly::y_pow(2, 3) - &ymono(ev![1, 2], 1, q(2, 1))) + &ymono(ev![-1, 0], 0, q(5, 3));
        let g =
            &(&YPoly::y_pow(2, 2) + &ymono(ev![0, 1], 1, q(1, 1))) - &ymono(ev![3, 0], 0, q(1, 1));
        let m = sylvester_matrix(&f, &g);
        assert_eq!(determinant(m.clone(), 2).unwrap(), laplace(&m, 2));
    }
}
