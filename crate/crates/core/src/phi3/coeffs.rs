use crate::error::{Error, Result};
use crate::special::{ln_factorial, pochhammer_log, SignedLog};

const EXACT_LIMIT: i128 = 1 << 53;

/// The polynomial A_i(b, c; z) that weights Φ̃₃(1, c - i; w, z) in the
/// reduction of Φ̃₃(b, c; w, z):
///
/// ```text
/// A_i(b,c;z) = (-1)^{b-1}/(b-1)! · Σ_{k=0}^{⌊i/2⌋} (-1)^k (b-i+k)_{i-k} (c-i-1+k)_{i-2k}
///                                                  / ((i-2k)! k!) · z^k
/// ```
///
/// Coefficients are held in sign/log form; each is formed as an exact ratio
/// of integers whenever numerator and denominator fit in 53 bits.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffPolynomial {
    pub b: u32,
    pub c: f64,
    pub index: usize,
    /// Coefficient of z^k at position k, k = 0..=⌊index/2⌋.
    pub coefficients: Vec<SignedLog>,
}

impl CoeffPolynomial {
    pub fn degree(&self) -> usize {
        self.index / 2
    }

    pub fn coefficient(&self, k: usize) -> f64 {
        self.coefficients.get(k).map_or(0.0, |c| c.to_f64())
    }

    pub fn eval_log(&self, z: f64) -> SignedLog {
        let zl = SignedLog::from_f64(z);
        SignedLog::sum(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| *c * zl.powi(k as i32)),
        )
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.eval_log(z).to_f64()
    }
}

/// Build A_i(b, c; z) for 0 ≤ i ≤ 2(b - 1).
pub fn coeff_polynomial(b: u32, c: f64, index: usize) -> Result<CoeffPolynomial> {
    if b == 0 {
        return Err(Error::domain("coefficient polynomials need b >= 1"));
    }
    if !c.is_finite() {
        return Err(Error::domain("coefficient polynomials need finite c"));
    }
    let max = 2 * (b as usize - 1);
    if index > max {
        return Err(Error::Index { index, max });
    }
    let coefficients = (0..=index / 2)
        .map(|k| exact_coefficient(b, c, index, k).unwrap_or_else(|| log_coefficient(b, c, index, k)))
        .collect();
    Ok(CoeffPolynomial {
        b,
        c,
        index,
        coefficients,
    })
}

fn sign_of(b: u32, k: usize) -> i8 {
    if (b as usize - 1 + k) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn exact_coefficient(b: u32, c: f64, i: usize, k: usize) -> Option<SignedLog> {
    if c.fract() != 0.0 || c.abs() > 1e15 {
        return None;
    }
    let (b, c, i, k) = (i128::from(b), c as i128, i as i128, k as i128);
    let mut num: i128 = 1;
    for j in 0..(i - k) {
        num = num.checked_mul(b - i + k + j)?;
    }
    for j in 0..(i - 2 * k) {
        num = num.checked_mul(c - i - 1 + k + j)?;
    }
    let mut den: i128 = 1;
    for f in [b - 1, i - 2 * k, k] {
        for j in 2..=f {
            den = den.checked_mul(j)?;
        }
    }
    let g = gcd(num.abs(), den);
    let (num, den) = (num / g.max(1), den / g.max(1));
    if num.abs() >= EXACT_LIMIT || den >= EXACT_LIMIT {
        return None;
    }
    let sign = sign_of(b as u32, k as usize);
    Some(SignedLog::from_f64(f64::from(sign) * num as f64 / den as f64))
}

fn log_coefficient(b: u32, c: f64, i: usize, k: usize) -> SignedLog {
    let bf = f64::from(b);
    let p1 = pochhammer_log(bf - i as f64 + k as f64, i - k);
    let p2 = pochhammer_log(c - i as f64 - 1.0 + k as f64, i - 2 * k);
    let den = ln_factorial(b as usize - 1) + ln_factorial(i - 2 * k) + ln_factorial(k);
    (p1 * p2).scale_exp(-den) * SignedLog::new(sign_of(b, k), 0.0)
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
