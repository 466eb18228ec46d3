//! Chern characters of the powers `x^j` of the reduced K-theory generator
//! `x = H − 1` of complex projective space.
//!
//! `ch(x) = e^t − 1`, so `ch(x^j) = (e^t − 1)^j`, whose degree-`q` coefficient
//! is `j!·S(q, j)/q!`.

use num_rational::Ratio;
use num_traits::Zero;

use crate::numeric::{factorial, stirling2};
use crate::Scalar;

/// Degree-`q` coefficient of `ch(x^j)`.
///
/// Vanishes for `q < j` and equals one at `q = j`.
pub fn chern_coeff<T: Scalar>(j: u32, q: u32) -> Ratio<T> {
    Ratio::new(factorial::<T>(j) * stirling2::<T>(q, j), factorial::<T>(q))
}

/// A power series in `t` truncated above degree `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T: Scalar> {
    coeffs: Vec<Ratio<T>>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Takes `coeffs[q]` as the coefficient of `t^q`; the cap is `len − 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Ratio<T>>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least t^0");
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| Ratio::from_integer(T::from_i64(c).expect("coefficient fits scalar")))
                .collect(),
        )
    }

    pub fn one() -> Self {
        Self::from_integers([1])
    }

    pub fn cap(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Ratio<T>] {
        &self.coeffs
    }

    /// Coefficient of `t^q`; zero above the cap.
    pub fn coeff(&self, q: u32) -> Ratio<T> {
        self.coeffs
            .get(q as usize)
            .cloned()
            .unwrap_or_else(Ratio::zero)
    }

    pub fn truncate(&self, cap: u32) -> Self {
        Self::new((0..=cap).map(|q| self.coeff(q)).collect())
    }
}

/// `ch(x^j)` through `t^cap`.
pub fn chern_series<T: Scalar>(j: u32, cap: u32) -> TruncatedSeries<T> {
    TruncatedSeries::new((0..=cap).map(|q| chern_coeff(j, q)).collect())
}

/// Cauchy product truncated at `cap`. Coefficients above either factor's own
/// cap are read as zero, so callers asking for more than `min(s1.cap, s2.cap)`
/// get the product of the stored polynomials.
pub fn series_mul<T: Scalar>(
    s1: &TruncatedSeries<T>,
    s2: &TruncatedSeries<T>,
    cap: u32,
) -> TruncatedSeries<T> {
    let coeffs = (0..=cap)
        .map(|q| (0..=q).fold(Ratio::zero(), |acc, i| acc + s1.coeff(i) * s2.coeff(q - i)))
        .collect();
    TruncatedSeries::new(coeffs)
}
