use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An integer exponent tuple `(N_1, ..., N_e)`; negative entries are allowed
/// for Laurent monomials.
///
/// The derived `Ord` is plain lexicographic. The monomial order used for
/// leading exponents is [`grlex_cmp`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVec(pub Vec<i64>);

impl ExponentVec {
    pub fn zero(e: usize) -> Self {
        ExponentVec(vec![0; e])
    }

    /// `scale` times the `k`-th canonical basis vector.
    pub fn unit(e: usize, k: usize, scale: i64) -> Self {
        let mut v = vec![0; e];
        v[k] = scale;
        ExponentVec(v)
    }

    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        ExponentVec(coords.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Coordinate-wise `self <= other`.
    pub fn le_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Coordinate-wise strict `self < other`.
    pub fn lt_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVec(self.0.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coordinate, `None` if some coordinate is not
    /// divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if k == 0 {
            return None;
        }
        self.0
            .iter()
            .map(|&c| if c % k == 0 { Some(c / k) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(ExponentVec)
    }

    /// The index `k` if this is the `k`-th canonical basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let mut idx = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }
}

/// Graded lexicographic comparison: total degree first, then lexicographic
/// on `(x1, ..., xe)`. This is the "diagonal order".
pub fn grlex_cmp(a: &ExponentVec, b: &ExponentVec) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.0.cmp(&b.0))
}

/// Valuation order: smaller total degree first, and within one degree the
/// lexicographically greatest exponent first. The minimum of a set in this
/// order is the exponent `exp` of the initial form.
pub fn valuation_cmp(a: &ExponentVec, b: &ExponentVec) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.0.cmp(&a.0))
}

impl Add for &ExponentVec {
    type Output = ExponentVec;
    fn add(self, rhs: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for ExponentVec {
    type Output = ExponentVec;
    fn add(self, rhs: ExponentVec) -> ExponentVec {
        &self + &rhs
    }
}

impl Sub for &ExponentVec {
    type Output = ExponentVec;
    fn sub(self, rhs: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for ExponentVec {
    type Output = ExponentVec;
    fn sub(self, rhs: ExponentVec) -> ExponentVec {
        &self - &rhs
    }
}

impl Neg for &ExponentVec {
    type Output = ExponentVec;
    fn neg(self) -> ExponentVec {
        ExponentVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for ExponentVec {
    type Output = ExponentVec;
    fn neg(self) -> ExponentVec {
        -&self
    }
}

impl Mul<i64> for &ExponentVec {
    type Output = ExponentVec;
    fn mul(self, k: i64) -> ExponentVec {
        self.scale(k)
    }
}

impl From<Vec<i64>> for ExponentVec {
    fn from(v: Vec<i64>) -> Self {
        ExponentVec(v)
    }
}

impl fmt::Debug for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

#[macro_export]
macro_rules! ev {
    ($($x:expr),* $(,)?) => {
        $crate::ExponentVec(vec![$($x as i64),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_degree_first() {
        assert_eq!(grlex_cmp(&ev![3, 2], &ev![2, 0]), Ordering::Greater);
        assert_eq!(grlex_cmp(&ev![2, 1], &ev![1, 2]), Ordering::Greater);
        assert_eq!(valuation_cmp(&ev![2, 1], &ev![1, 2]), Ordering::Less);
    }

    #[test]
    fn unit_index_detects_basis_vectors() {
        assert_eq!(ev![0, 1, 0].unit_index(), Some(1));
        assert_eq!(ev![1, 1].unit_index(), None);
        assert_eq!(ev![3, 0].unit_index(), None);
        assert_eq!(ev![0, 0].unit_index(), None);
    }
}
