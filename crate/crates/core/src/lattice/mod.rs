//! Exact integer lattices spanned by matrix columns: Hermite and Smith normal
//! forms, membership with certificates, and the least positive multiple of a
//! vector that lands in the lattice.

mod hermite;
mod matrix;
mod smith;

use thiserror::Error;

pub use hermite::{hermite_decomposition, hnf, HermiteDecomposition};
pub use matrix::Matrix;
pub use smith::{snf, SmithDecomposition};

use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector has length {found}, matrix has {expected} rows")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no positive multiple of the vector lies in the lattice (outside the rational span)")]
    InfiniteOrder,
}

fn check_len<T: Scalar>(a: &Matrix<T>, v: &[T]) -> Result<(), LatticeError> {
    if v.len() == a.rows() {
        Ok(())
    } else {
        Err(LatticeError::DimensionMismatch {
            expected: a.rows(),
            found: v.len(),
        })
    }
}

/// Solves `A·y = w` over the integers by greedy reduction against the Hermite
/// form of `A`. `Ok(None)` means `w` is not in the column lattice.
pub fn membership<T: Scalar>(a: &Matrix<T>, w: &[T]) -> Result<Option<Vec<T>>, LatticeError> {
    check_len(a, w)?;
    let dec = hermite_decomposition(a);
    Ok(hermite::reduce(&dec, w).map(|c| dec.v.mul_vec(&c)))
}

/// A reusable membership tester for one lattice; skips recomputing the
/// Hermite form on every query.
#[derive(Debug, Clone)]
pub struct LatticeOracle<T> {
    dec: HermiteDecomposition<T>,
}

impl<T: Scalar> LatticeOracle<T> {
    pub fn new(a: &Matrix<T>) -> Self {
        Self {
            dec: hermite_decomposition(a),
        }
    }

    pub fn contains(&self, w: &[T]) -> bool {
        assert_eq!(
            w.len(),
            self.dec.h.rows(),
            "vector length must equal row count"
        );
        hermite::reduce(&self.dec, w).is_some()
    }

    pub fn solve(&self, w: &[T]) -> Option<Vec<T>> {
        hermite::reduce(&self.dec, w).map(|c| self.dec.v.mul_vec(&c))
    }
}

/// Least `d ≥ 1` with `d·v` in the column lattice, and `y` with `A·y = d·v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalMultiple<T> {
    pub d: T,
    pub certificate: Vec<T>,
}

/// Least positive multiple of `v` in the column lattice of `a`.
///
/// With `U·A·V = S` and `w = U·v`, the lattice condition reads
/// `s_i | d·w_i` for `i < rank` and `w_i = 0` beyond, so
/// `d = lcm_i s_i / gcd(s_i, w_i)`.
pub fn minimal_multiple<T: Scalar>(
    a: &Matrix<T>,
    v: &[T],
) -> Result<MinimalMultiple<T>, LatticeError> {
    check_len(a, v)?;
    let smith = snf(a);
    let w = smith.u.mul_vec(v);
    if w[smith.rank..].iter().any(|x| !x.is_zero()) {
        return Err(LatticeError::InfiniteOrder);
    }
    let factors = smith.invariant_factors();
    let d = factors
        .iter()
        .zip(&w)
        .fold(T::one(), |d, (s, wi)| d.lcm(&(s.clone() / s.gcd(wi))));
    let mut z = vec![T::zero(); a.cols()];
    for (i, (s, wi)) in factors.iter().zip(&w).enumerate() {
        z[i] = d.clone() * wi.clone() / s.clone();
    }
    let certificate = smith.v.mul_vec(&z);
    Ok(MinimalMultiple { d, certificate })
}
