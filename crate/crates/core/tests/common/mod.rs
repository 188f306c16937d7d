#![allow(dead_code)]

use qolab_core::text::parse_poly;
use qolab_core::{q, ExponentVec, LaurentPoly, YPoly, Q};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn poly(text: &str, e: usize) -> YPoly<Q> {
    parse_poly(text, e).unwrap_or_else(|err| panic!("{}: {}", text, err))
}

pub fn random_coeff(
    rng: &mut ChaCha8Rng,
    e: usize,
    terms: usize,
    max_exp: i64,
    laurent: bool,
) -> LaurentPoly<Q> {
    let mut out = LaurentPoly::zero(e);
    for _ in 0..terms {
        let exp: Vec<i64> = (0..e)
            .map(|_| {
                if laurent {
                    rng.gen_range(-max_exp..=max_exp)
                } else {
                    rng.gen_range(0..=max_exp)
                }
            })
            .collect();
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            out = &out + &LaurentPoly::monomial(ExponentVec(exp), q(c, rng.gen_range(1..=3)));
        }
    }
    out
}

/// Monic of degree `n` with sparse random coefficients below the top.
pub fn random_monic(rng: &mut ChaCha8Rng, e: usize, n: usize, laurent: bool) -> YPoly<Q> {
    let mut coeffs: Vec<LaurentPoly<Q>> = (0..n)
        .map(|_| {
            let t = rng.gen_range(0..=3);
            random_coeff(rng, e, t, 3, laurent)
        })
        .collect();
    coeffs.push(LaurentPoly::one(e));
    YPoly::from_coeffs(e, coeffs)
}

pub fn random_poly(rng: &mut ChaCha8Rng, e: usize, n: usize) -> YPoly<Q> {
    let coeffs: Vec<LaurentPoly<Q>> = (0..=n)
        .map(|_| {
            let t = rng.gen_range(0..=3);
            random_coeff(rng, e, t, 3, false)
        })
        .collect();
    YPoly::from_coeffs(e, coeffs)
}
