//! Dual complex scalars.

use super::DualNumber;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A dual complex number `q = std + inf·ε` with complex components.
///
/// The magnitude of a dual complex number is a *dual* number, so products
/// and sums of magnitudes stay inside the same ordered algebra. As with
/// [`DualNumber`], all four real components are finite by construction.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualComplex {
    std: Complex64,
    inf: Complex64,
}

impl DualComplex {
    pub const ZERO: DualComplex = DualComplex {
        std: Complex64::new(0.0, 0.0),
        inf: Complex64::new(0.0, 0.0),
    };
    pub const ONE: DualComplex = DualComplex {
        std: Complex64::new(1.0, 0.0),
        inf: Complex64::new(0.0, 0.0),
    };

    /// Builds `std + inf·ε`, rejecting non-finite components.
    pub fn new(std: Complex64, inf: Complex64) -> Result<Self> {
        if std.re.is_finite() && std.im.is_finite() && inf.re.is_finite() && inf.im.is_finite() {
            Ok(DualComplex { std, inf })
        } else {
            Err(Error::NonFinite("dual complex number"))
        }
    }

    /// Builds from the four real components `(std_re, std_im, inf_re, inf_im)`.
    pub fn from_components(std_re: f64, std_im: f64, inf_re: f64, inf_im: f64) -> Result<Self> {
        Self::new(
            Complex64::new(std_re, std_im),
            Complex64::new(inf_re, inf_im),
        )
    }

    #[inline]
    pub(crate) fn raw(std: Complex64, inf: Complex64) -> Self {
        debug_assert!(
            std.re.is_finite() && std.im.is_finite() && inf.re.is_finite() && inf.im.is_finite(),
            "non-finite dual complex result"
        );
        DualComplex { std, inf }
    }

    #[inline]
    pub fn std(self) -> Complex64 {
        self.std
    }

    #[inline]
    pub fn inf(self) -> Complex64 {
        self.inf
    }

    /// True when the complex standard part is nonzero (exact comparison).
    #[inline]
    pub fn is_appreciable(self) -> bool {
        self.std != Complex64::new(0.0, 0.0)
    }

    /// Componentwise complex conjugate: `conj(std) + conj(inf)·ε`.
    #[inline]
    pub fn conj(self) -> Self {
        DualComplex::raw(self.std.conj(), self.inf.conj())
    }

    /// Magnitude as a nonnegative dual number.
    ///
    /// For appreciable `q` this is `(|std|, Re(conj(std)·inf)/|std|)`, which
    /// coincides with `√(q·conj(q))`; for infinitesimal `q` it degrades to
    /// `(0, |inf|)`.
    pub fn magnitude(self) -> DualNumber {
        let s = self.std.norm();
        if s != 0.0 {
            let cross = self.std.re * self.inf.re + self.std.im * self.inf.im;
            DualNumber::raw(s, cross / s)
        } else {
            DualNumber::raw(0.0, self.inf.norm())
        }
    }

    /// Reciprocal `(1/std, −inf/std²)`; defined only for appreciable values.
    pub fn recip(self) -> Result<Self> {
        if !self.is_appreciable() {
            return Err(Error::NotAppreciable("dual complex reciprocal"));
        }
        let g = self.std.finv();
        Self::new(g, -self.inf * g * g).map_err(|_| Error::NonFinite("dual complex reciprocal"))
    }

    /// Componentwise comparison with per-part tolerances (complex parts are
    /// compared in modulus).
    pub fn approx_eq(self, other: Self, tol_std: f64, tol_inf: f64) -> bool {
        (self.std - other.std).norm() <= tol_std && (self.inf - other.inf).norm() <= tol_inf
    }
}

impl From<DualNumber> for DualComplex {
    fn from(q: DualNumber) -> Self {
        DualComplex::raw(Complex64::new(q.std(), 0.0), Complex64::new(q.inf(), 0.0))
    }
}

impl Add for DualComplex {
    type Output = DualComplex;
    fn add(self, rhs: Self) -> Self {
        DualComplex::raw(self.std + rhs.std, self.inf + rhs.inf)
    }
}

impl AddAssign for DualComplex {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for DualComplex {
    type Output = DualComplex;
    fn sub(self, rhs: Self) -> Self {
        DualComplex::raw(self.std - rhs.std, self.inf - rhs.inf)
    }
}

impl SubAssign for DualComplex {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for DualComplex {
    type Output = DualComplex;
    fn neg(self) -> Self {
        DualComplex::raw(-self.std, -self.inf)
    }
}

impl Mul for DualComplex {
    type Output = DualComplex;
    /// `(p_st + p_I ε)(q_st + q_I ε) = p_st q_st + (p_st q_I + p_I q_st)ε`.
    fn mul(self, rhs: Self) -> Self {
        DualComplex::raw(
            self.std * rhs.std,
            self.std * rhs.inf + self.inf * rhs.std,
        )
    }
}

impl Mul<DualNumber> for DualComplex {
    type Output = DualComplex;
    fn mul(self, rhs: DualNumber) -> Self {
        self * DualComplex::from(rhs)
    }
}

impl Sum for DualComplex {
    fn sum<I: Iterator<Item = DualComplex>>(iter: I) -> Self {
        iter.fold(DualComplex::ZERO, |acc, x| acc + x)
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

impl fmt::Display for DualComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})ε", fmt_complex(self.std), fmt_complex(self.inf))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc(a: f64, b: f64, c: f64, d: f64) -> DualComplex {
        DualComplex::from_components(a, b, c, d).unwrap()
    }

    #[test]
    fn construction_rejects_non_finite() {
        assert!(DualComplex::from_components(f64::NAN, 0.0, 0.0, 0.0).is_err());
        assert!(DualComplex::from_components(0.0, 0.0, f64::INFINITY, 0.0).is_err());
        assert!(DualComplex::from_components(1.0, 2.0, 3.0, 4.0).is_ok());
    }

    #[test]
    fn magnitude_of_appreciable_value() {
        // |(3+4i) + (1+2i)ε| = (5, (3·1 + 4·2)/5) = (5, 2.2)
        let q = dc(3.0, 4.0, 1.0, 2.0);
        let m = q.magnitude();
        assert_eq!(m.std(), 5.0);
        assert!((m.inf() - 2.2).abs() < 1e-15);
    }

    #[test]
    fn magnitude_of_infinitesimal_value() {
        let q = dc(0.0, 0.0, 3.0, 4.0);
        assert_eq!(q.magnitude(), DualNumber::new(0.0, 5.0).unwrap());
        assert_eq!(DualComplex::ZERO.magnitude(), DualNumber::ZERO);
    }

    #[test]
    fn magnitude_squares_to_q_times_conj() {
        // For appreciable q, |q|² = q·conj(q) (a real dual number).
        let q = dc(1.5, -2.0, 0.25, 3.0);
        let m = q.magnitude();
        let m2 = m * m;
        let qq = q * q.conj();
        assert!(qq.std().im.abs() < 1e-15 && qq.inf().im.abs() < 1e-15);
        assert!((m2.std() - qq.std().re).abs() < 1e-12);
        assert!((m2.inf() - qq.inf().re).abs() < 1e-12);
    }

    #[test]
    fn epsilon_squared_vanishes() {
        let e = dc(0.0, 0.0, 1.0, -2.0);
        assert_eq!(e * e, DualComplex::ZERO);
    }

    #[test]
    fn recip_round_trips() {
        let q = dc(2.0, -1.0, 0.5, 3.0);
        let r = (q * q.recip().unwrap() - DualComplex::ONE).magnitude();
        assert!(r.std() < 1e-14 && r.inf().abs() < 1e-14);
        assert!(dc(0.0, 0.0, 1.0, 0.0).recip().is_err());
    }

    #[test]
    fn conjugation_distributes_over_products() {
        let p = dc(1.0, 2.0, -0.5, 0.25);
        let q = dc(-3.0, 0.5, 2.0, 1.0);
        let lhs = (p * q).conj();
        let rhs = p.conj() * q.conj();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_renders_both_parts() {
        assert_eq!(format!("{}", dc(3.0, -4.0, 1.0, 2.0)), "(3-4i) + (1+2i)ε");
    }
}
