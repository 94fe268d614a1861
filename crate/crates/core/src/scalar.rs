//! Scalars of the max-times semifield over the nonnegative reals.
//!
//! Addition is `max`, multiplication is ordinary multiplication, zero is the
//! real 0 and one is the real 1. Every scalar is stored as the natural log of
//! the nonnegative value it represents, so multiplication becomes addition
//! and rational powers become scalings; the semifield zero is the
//! `-inf` sentinel, which stays absorbing under `+` without any rounding.

use std::cmp::Ordering;
use std::fmt;

/// One element of the max-times semifield, kept in log scale.
///
/// The represented value is `exp(log)`; the zero element is represented by
/// `log = -inf`. `log` is never `NaN` or `+inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TropScalar {
    log: f64,
}

impl TropScalar {
    /// The semifield zero (the real 0).
    pub const ZERO: TropScalar = TropScalar {
        log: f64::NEG_INFINITY,
    };

    /// The semifield one (the real 1).
    pub const ONE: TropScalar = TropScalar { log: 0.0 };

    /// Builds a scalar from a nonnegative real value.
    ///
    /// Panics on negative or non-finite input; input validation belongs to
    /// the boundary that produced the number.
    pub fn new(value: f64) -> TropScalar {
        assert!(
            value >= 0.0 && value.is_finite(),
            "tropical scalar requires a finite nonnegative value, got {value}"
        );
        if value == 0.0 {
            TropScalar::ZERO
        } else {
            TropScalar::from_log(value.ln())
        }
    }

    /// Builds a scalar directly from its natural log; `-inf` gives zero.
    pub fn from_log(log: f64) -> TropScalar {
        assert!(!log.is_nan() && log != f64::INFINITY, "invalid log value");
        // normalize -0.0 so comparisons and serialization are bitwise stable
        TropScalar {
            log: if log == 0.0 { 0.0 } else { log },
        }
    }

    /// Natural log of the represented value (`-inf` for zero).
    pub fn log(self) -> f64 {
        self.log
    }

    /// The represented value in linear scale.
    pub fn value(self) -> f64 {
        self.log.exp()
    }

    pub fn is_zero(self) -> bool {
        self.log == f64::NEG_INFINITY
    }

    /// Idempotent addition: the larger of the two values.
    pub fn oplus(self, rhs: TropScalar) -> TropScalar {
        if self.log >= rhs.log {
            self
        } else {
            rhs
        }
    }

    /// Multiplication; zero is absorbing.
    pub fn otimes(self, rhs: TropScalar) -> TropScalar {
        if self.is_zero() || rhs.is_zero() {
            TropScalar::ZERO
        } else {
            TropScalar::from_log(self.log + rhs.log)
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<TropScalar> {
        if self.is_zero() {
            None
        } else {
            Some(TropScalar::from_log(-self.log))
        }
    }

    /// Real power `x^r`.
    ///
    /// For zero the exponent must be positive (`0^r = 0`); for nonzero `x`,
    /// `x^0` is one.
    pub fn powf(self, r: f64) -> TropScalar {
        if self.is_zero() {
            assert!(r > 0.0, "zero cannot be raised to a non-positive power");
            return TropScalar::ZERO;
        }
        TropScalar::from_log(self.log * r)
    }

    /// Equality within an absolute log-scale tolerance; zeros only match zeros.
    pub fn approx_eq(self, rhs: TropScalar, tol: f64) -> bool {
        match (self.is_zero(), rhs.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            (false, false) => (self.log - rhs.log).abs() <= tol,
        }
    }

    /// `self <= rhs` within an absolute log-scale tolerance.
    pub fn leq(self, rhs: TropScalar, tol: f64) -> bool {
        if self.is_zero() {
            return true;
        }
        if rhs.is_zero() {
            return false;
        }
        self.log <= rhs.log + tol
    }
}

impl Eq for TropScalar {}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &TropScalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &TropScalar) -> Ordering {
        // Total order is safe: log is never NaN and -0.0 is normalized away.
        self.log.total_cmp(&other.log)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
