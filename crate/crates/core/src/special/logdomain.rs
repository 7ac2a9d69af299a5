use std::ops::{Div, Mul, Neg};

/// A real number stored as `sign · exp(ln_abs)`.
///
/// `sign` is one of -1, 0, +1; zero is represented with `ln_abs = -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: i8,
    pub ln_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };
    pub const ONE: SignedLog = SignedLog {
        sign: 1,
        ln_abs: 0.0,
    };

    pub fn new(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 || ln_abs == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            Self {
                sign: sign.signum(),
                ln_abs,
            }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                sign: if x < 0.0 { -1 } else { 1 },
                ln_abs: x.abs().ln(),
            }
        }
    }

    /// `exp(ln_abs)` with the sign applied; may over- or underflow.
    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.ln_abs.exp(),
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    /// Multiply by `exp(shift)`.
    pub fn scale_exp(self, shift: f64) -> Self {
        if self.is_zero() {
            self
        } else {
            Self::new(self.sign, self.ln_abs + shift)
        }
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        if self.is_zero() {
            return if n > 0 { Self::ZERO } else { Self::new(1, f64::INFINITY) };
        }
        let sign = if self.sign < 0 && n % 2 != 0 { -1 } else { 1 };
        Self::new(sign, f64::from(n) * self.ln_abs)
    }

    pub fn recip(self) -> Self {
        Self::new(self.sign, -self.ln_abs)
    }

    /// Sum of values that may individually lie outside the f64 range.
    ///
    /// Terms are rescaled by the largest magnitude before being added, so the
    /// result is representable whenever the true sum is.
    pub fn sum<I: IntoIterator<Item = SignedLog>>(terms: I) -> SignedLog {
        let terms: Vec<SignedLog> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        let peak = terms
            .iter()
            .map(|t| t.ln_abs)
            .fold(f64::NEG_INFINITY, f64::max);
        if peak == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let scaled: f64 = terms
            .iter()
            .map(|t| f64::from(t.sign) * (t.ln_abs - peak).exp())
            .sum();
        Self::from_f64(scaled).scale_exp(peak)
    }
}

/// Running sum of [`SignedLog`] terms held as `acc · exp(shift)`.
///
/// The shift follows the largest term seen so the accumulator neither
/// overflows while terms grow nor loses them while they are tiny.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogAccumulator {
    shift: f64,
    acc: f64,
}

impl LogAccumulator {
    pub(crate) fn new() -> Self {
        Self {
            shift: f64::NEG_INFINITY,
            acc: 0.0,
        }
    }

    pub(crate) fn add(&mut self, term: SignedLog) {
        if term.is_zero() {
            return;
        }
        if self.shift == f64::NEG_INFINITY {
            self.shift = term.ln_abs;
        } else if term.ln_abs > self.shift + 64.0 {
            self.acc *= (self.shift - term.ln_abs).exp();
            self.shift = term.ln_abs;
        }
        self.acc += f64::from(term.sign) * (term.ln_abs - self.shift).exp();
    }

    pub(crate) fn value(&self) -> SignedLog {
        if self.shift == f64::NEG_INFINITY {
            SignedLog::ZERO
        } else {
            SignedLog::from_f64(self.acc).scale_exp(self.shift)
        }
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;

    fn mul(self, rhs: SignedLog) -> SignedLog {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self::new(self.sign * rhs.sign, self.ln_abs + rhs.ln_abs)
    }
}

impl Div for SignedLog {
    type Output = SignedLog;

    fn div(self, rhs: SignedLog) -> SignedLog {
        if self.is_zero() || rhs.is_zero() {
            return if self.is_zero() { Self::ZERO } else { Self::new(self.sign, f64::INFINITY) };
        }
        Self::new(self.sign * rhs.sign, self.ln_abs - rhs.ln_abs)
    }
}

impl Neg for SignedLog {
    type Output = SignedLog;

    fn neg(self) -> SignedLog {
        Self::new(-self.sign, self.ln_abs)
    }
}
