//! Integer lattices given by generators: Hermite normal form, index and
//! membership with witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ExponentVec;

/// A sublattice of `Z^dim` in row echelon form, remembering how each basis
/// row is built from the original generators.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    ngens: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn from_generators(gens: &[Vec<BigInt>], dim: usize) -> Lattice {
        let ngens = gens.len();
        let mut rows: Vec<Vec<BigInt>> = gens.to_vec();
        let mut u: Vec<Vec<BigInt>> = (0..ngens)
            .map(|i| {
                (0..ngens)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut r = 0;
        let mut pivots = Vec::new();
        for col in 0..dim {
            loop {
                let best = (r..ngens)
                    .filter(|&i| !rows[i][col].is_zero())
                    .min_by_key(|&i| rows[i][col].abs());
                let Some(p) = best else { break };
                rows.swap(r, p);
                u.swap(r, p);
                let mut done = true;
                for i in r + 1..ngens {
                    if rows[i][col].is_zero() {
                        continue;
                    }
                    let f = rows[i][col].div_floor(&rows[r][col]);
                    for j in 0..dim {
                        let t = &f * &rows[r][j];
                        rows[i][j] -= t;
                    }
                    for j in 0..ngens {
                        let t = &f * &u[r][j];
                        u[i][j] -= t;
                    }
                    if !rows[i][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if r < ngens && !rows[r][col].is_zero() {
                if rows[r][col].is_negative() {
                    for v in rows[r].iter_mut() {
                        *v = -&*v;
                    }
                    for v in u[r].iter_mut() {
                        *v = -&*v;
                    }
                }
                pivots.push(col);
                r += 1;
            }
        }
        rows.truncate(r);
        u.truncate(r);
        Lattice {
            dim,
            ngens,
            basis: rows,
            pivots,
            transform: u,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `[Z^dim : L]`, or `None` when the lattice is not of full rank. For full
    /// rank this equals the gcd of the maximal minors of the generator matrix.
    pub fn index(&self) -> Option<BigInt> {
        if self.rank() < self.dim {
            return None;
        }
        Some(
            self.basis
                .iter()
                .zip(&self.pivots)
                .map(|(row, &c)| row[c].clone())
                .product(),
        )
    }

    /// Integer coefficients expressing `v` in the original generators, or
    /// `None` if `v` is not in the lattice.
    pub fn member(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut res: Vec<BigInt> = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.ngens];
        for (row, (&c, tr)) in self
            .basis
            .iter()
            .zip(self.pivots.iter().zip(&self.transform))
        {
            if res[..c].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (qt, rm) = res[c].div_rem(&row[c]);
            if !rm.is_zero() {
                return None;
            }
            for j in 0..self.dim {
                let t = &qt * &row[j];
                res[j] -= t;
            }
            for j in 0..self.ngens {
                let t = &qt * &tr[j];
                coeffs[j] += t;
            }
        }
        res.iter().all(|x| x.is_zero()).then_some(coeffs)
    }
}

fn big(v: &ExponentVec) -> Vec<BigInt> {
    v.0.iter().map(|&c| BigInt::from(c)).collect()
}

/// The lattice `(nZ)^e + m_1 Z + ... + m_k Z`, generators in that order.
pub fn char_lattice(n: i64, e: usize, m: &[ExponentVec]) -> Lattice {
    let mut gens: Vec<Vec<BigInt>> = (0..e).map(|i| big(&ExponentVec::unit(e, i, n))).collect();
    gens.extend(m.iter().map(big));
    Lattice::from_generators(&gens, e)
}

/// gcd of the `e x e` minors of `(n I | m_1^T ... m_k^T)`.
pub fn gcd_of_minors(n: i64, e: usize, m: &[ExponentVec]) -> BigInt {
    char_lattice(n, e, m)
        .index()
        .expect("n I has full rank for n >= 1")
}

/// Decides `v` in `(nZ)^e + sum m_j Z`; on success the witness lists the
/// coefficients of `n e_1, ..., n e_e, m_1, ..., m_k`.
pub fn lattice_member(v: &ExponentVec, n: i64, m: &[ExponentVec]) -> Option<Vec<BigInt>> {
    char_lattice(n, v.len(), m).member(&big(v))
}
