//! Real dual numbers with a total order.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A dual number `q = std + inf·ε` with real components and `ε² = 0`.
///
/// Both components are always finite: the public constructors reject NaN
/// and infinities, so comparisons never hit unordered values. The order is
/// lexicographic — standard parts decide, infinitesimal parts break ties —
/// and is total on the values this type can hold.
///
/// `q` is *appreciable* when its standard part is nonzero and
/// *infinitesimal* otherwise; reciprocals exist only for appreciable
/// values.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualNumber {
    std: f64,
    inf: f64,
}

impl DualNumber {
    pub const ZERO: DualNumber = DualNumber { std: 0.0, inf: 0.0 };
    pub const ONE: DualNumber = DualNumber { std: 1.0, inf: 0.0 };

    /// Builds `std + inf·ε`, rejecting non-finite components.
    pub fn new(std: f64, inf: f64) -> Result<Self> {
        if std.is_finite() && inf.is_finite() {
            Ok(DualNumber { std, inf })
        } else {
            Err(Error::NonFinite("dual number"))
        }
    }

    /// Embeds a real number as `x + 0·ε`.
    pub fn from_real(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    /// Internal constructor for arithmetic results. Callers are expected to
    /// keep magnitudes in a representable range; overflow is not re-checked
    /// on every operation.
    #[inline]
    pub(crate) fn raw(std: f64, inf: f64) -> Self {
        debug_assert!(std.is_finite() && inf.is_finite(), "non-finite dual result");
        DualNumber { std, inf }
    }

    #[inline]
    pub fn std(self) -> f64 {
        self.std
    }

    #[inline]
    pub fn inf(self) -> f64 {
        self.inf
    }

    /// True when the standard part is nonzero (exact comparison).
    #[inline]
    pub fn is_appreciable(self) -> bool {
        self.std != 0.0
    }

    /// True when the standard part is zero; zero itself is infinitesimal.
    #[inline]
    pub fn is_infinitesimal(self) -> bool {
        !self.is_appreciable()
    }

    /// Absolute value under the total order: `|q| = q` if `q ≥ 0` else `−q`.
    pub fn abs(self) -> Self {
        if self < DualNumber::ZERO {
            -self
        } else {
            self
        }
    }

    /// Square root: `√q = √std + inf/(2√std)·ε` for `std > 0`, and
    /// `√0 = 0`. Negative or purely infinitesimal operands have no dual
    /// square root.
    pub fn sqrt(self) -> Result<Self> {
        if self.std > 0.0 {
            let r = self.std.sqrt();
            Self::new(r, self.inf / (2.0 * r))
        } else if self.std == 0.0 && self.inf == 0.0 {
            Ok(DualNumber::ZERO)
        } else if self.std == 0.0 {
            Err(Error::Domain(
                "square root of a nonzero infinitesimal dual number does not exist",
            ))
        } else {
            Err(Error::Domain(
                "square root of a dual number with negative standard part does not exist",
            ))
        }
    }

    /// Reciprocal `(1/std, −inf/std²)`; defined only for appreciable values.
    pub fn recip(self) -> Result<Self> {
        if self.std == 0.0 {
            return Err(Error::NotAppreciable("dual reciprocal"));
        }
        let g = 1.0 / self.std;
        Self::new(g, -self.inf * g * g).map_err(|_| Error::NonFinite("dual reciprocal"))
    }

    /// Componentwise comparison with per-part tolerances. Exact equality is
    /// `==`/`cmp`; this is the comparator tests and verification code use.
    pub fn approx_eq(self, other: Self, tol_std: f64, tol_inf: f64) -> bool {
        (self.std - other.std).abs() <= tol_std && (self.inf - other.inf).abs() <= tol_inf
    }

    /// `self ≤ other` up to tolerances: clearly smaller standard parts pass;
    /// standard parts within `tol_std` defer to the infinitesimal parts with
    /// `tol_inf` slack.
    pub fn approx_le(self, other: Self, tol_std: f64, tol_inf: f64) -> bool {
        if self.std < other.std - tol_std {
            return true;
        }
        if self.std > other.std + tol_std {
            return false;
        }
        self.inf <= other.inf + tol_inf
    }
}

impl Eq for DualNumber {}

impl PartialOrd for DualNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DualNumber {
    /// Total lexicographic order. Safe to unwrap the float comparisons
    /// because components are never NaN.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.std.partial_cmp(&other.std).expect("finite by invariant") {
            Ordering::Equal => self.inf.partial_cmp(&other.inf).expect("finite by invariant"),
            ord => ord,
        }
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    fn add(self, rhs: Self) -> Self {
        DualNumber::raw(self.std + rhs.std, self.inf + rhs.inf)
    }
}

impl AddAssign for DualNumber {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for DualNumber {
    type Output = DualNumber;
    fn sub(self, rhs: Self) -> Self {
        DualNumber::raw(self.std - rhs.std, self.inf - rhs.inf)
    }
}

impl SubAssign for DualNumber {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    fn neg(self) -> Self {
        DualNumber::raw(-self.std, -self.inf)
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    /// `(a + bε)(c + dε) = ac + (ad + bc)ε` — the ε² term vanishes.
    fn mul(self, rhs: Self) -> Self {
        DualNumber::raw(
            self.std * rhs.std,
            self.std * rhs.inf + self.inf * rhs.std,
        )
    }
}

impl Mul<f64> for DualNumber {
    type Output = DualNumber;
    fn mul(self, rhs: f64) -> Self {
        DualNumber::raw(self.std * rhs, self.inf * rhs)
    }
}

impl Sum for DualNumber {
    fn sum<I: Iterator<Item = DualNumber>>(iter: I) -> Self {
        iter.fold(DualNumber::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inf < 0.0 {
            write!(f, "{} - {}ε", self.std, -self.inf)
        } else {
            write!(f, "{} + {}ε", self.std, self.inf)
        }
    }
}
