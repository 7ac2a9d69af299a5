use std::f64::consts::PI;
use std::sync::LazyLock;

use super::SignedLog;
use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Largest n with n! finite in f64.
const MAX_FACTORIAL: usize = 170;

/// n! for n = 0..=170, accumulated in double-double so each entry is the
/// correctly rounded value of the exact integer.
static FACTORIALS: LazyLock<[f64; MAX_FACTORIAL + 1]> = LazyLock::new(|| {
    let mut table = [1.0; MAX_FACTORIAL + 1];
    let (mut hi, mut lo) = (1.0f64, 0.0f64);
    for (n, slot) in table.iter_mut().enumerate().skip(1) {
        let k = n as f64;
        let p = hi * k;
        let err = hi.mul_add(k, -p);
        let tail = lo.mul_add(k, err);
        hi = p + tail;
        lo = tail - (hi - p);
        *slot = hi;
    }
    table
});

static LN_FACTORIALS: LazyLock<[f64; MAX_FACTORIAL + 1]> =
    LazyLock::new(|| FACTORIALS.map(f64::ln));

/// n! as f64; `inf` past 170.
pub fn factorial(n: usize) -> f64 {
    FACTORIALS.get(n).copied().unwrap_or(f64::INFINITY)
}

/// ln(n!).
pub fn ln_factorial(n: usize) -> f64 {
    match LN_FACTORIALS.get(n) {
        Some(v) => *v,
        None => stirling_ln_gamma(n as f64 + 1.0),
    }
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(Error::domain(format!("log_gamma requires finite x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

/// Γ(x) for real x; exact table values at positive integers up to 171.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("gamma of NaN"));
    }
    if x > 0.0 && x.fract() == 0.0 && x <= (MAX_FACTORIAL + 1) as f64 {
        return Ok(factorial(x as usize - 1));
    }
    let lg = ln_gamma_signed(x);
    if lg.is_zero() {
        return Err(Error::domain(format!("gamma has a pole at {x}")));
    }
    Ok(lg.to_f64())
}

/// 1/Γ(x) in sign/log form; exactly zero at the poles 0, -1, -2, ...
pub fn recip_gamma(x: f64) -> SignedLog {
    ln_gamma_signed(x).recip_or_zero()
}

impl SignedLog {
    fn recip_or_zero(self) -> SignedLog {
        if self.is_zero() {
            SignedLog::ZERO
        } else {
            self.recip()
        }
    }
}

/// Γ(x) in sign/log form for any real x; returns ZERO at poles as a marker.
pub(crate) fn ln_gamma_signed(x: f64) -> SignedLog {
    if x > 0.0 {
        return SignedLog::new(1, ln_gamma_pos(x));
    }
    if x.fract() == 0.0 {
        return SignedLog::ZERO;
    }
    // Reflection: Γ(x) Γ(1-x) = π / sin(πx)
    let s = sin_pi(x);
    let ln_abs = PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x);
    SignedLog::new(if s < 0.0 { -1 } else { 1 }, ln_abs)
}

fn ln_gamma_pos(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= (MAX_FACTORIAL + 1) as f64 {
        return LN_FACTORIALS[x as usize - 1];
    }
    if x >= 10.0 {
        return stirling_ln_gamma(x);
    }
    // Shift up into the Stirling range: Γ(x) = Γ(x+n) / (x (x+1) ... (x+n-1)).
    let n = (10.0 - x).ceil() as usize;
    let mut prod = 1.0;
    for j in 0..n {
        prod *= x + j as f64;
    }
    stirling_ln_gamma(x + n as f64) - prod.ln()
}

fn stirling_ln_gamma(x: f64) -> f64 {
    // Bernoulli terms B_{2k} / (2k (2k-1)), k = 1..8
    const C: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in C.iter().rev() {
        series = series * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + series * inv
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if x.fract() == 0.0 {
        return 0.0;
    }
    // r = x - 2k lies in [-1, 1] and sin(πx) = sin(πr)
    let r = x - 2.0 * (x / 2.0).round();
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * r).sin()
}

const GAMMA_MAX_ITER: usize = 100_000;

/// Regularized lower and upper incomplete gamma, (P(s,x), Q(s,x)).
///
/// Series for x < s + 1, continued fraction otherwise; the function that is
/// not summed directly is obtained as the complement, which only loses
/// accuracy when it is itself close to one.
pub fn regularized_gamma_pair(s: f64, x: f64) -> Result<(f64, f64)> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("incomplete gamma requires s > 0, got {s}")));
    }
    if !(x >= 0.0) {
        return Err(Error::domain(format!("incomplete gamma requires x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok((0.0, 1.0));
    }
    if x.is_infinite() {
        return Ok((1.0, 0.0));
    }
    let ln_prefactor = -x + s * x.ln() - ln_gamma_pos(s);
    if x < s + 1.0 {
        let mut ap = s;
        let mut del = 1.0 / s;
        let mut sum = del;
        for _ in 0..GAMMA_MAX_ITER {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if del.abs() < sum.abs() * f64::EPSILON {
                let p = (sum.ln() + ln_prefactor).exp();
                return Ok((p, 1.0 - p));
            }
        }
        Err(Error::Convergence {
            what: "incomplete gamma series",
            terms: GAMMA_MAX_ITER,
        })
    } else {
        // modified Lentz
        const TINY: f64 = 1e-300;
        let mut b = x + 1.0 - s;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..GAMMA_MAX_ITER {
            let an = -(i as f64) * (i as f64 - s);
            b += 2.0;
            d = an * d + b;
            if d.abs() < TINY {
                d = TINY;
            }
            c = b + an / c;
            if c.abs() < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < f64::EPSILON {
                let q = (h.ln() + ln_prefactor).exp();
                return Ok((1.0 - q, q));
            }
        }
        Err(Error::Convergence {
            what: "incomplete gamma continued fraction",
            terms: GAMMA_MAX_ITER,
        })
    }
}

/// P(s, x) = γ(s, x) / Γ(s).
pub fn regularized_lower_gamma(s: f64, x: f64) -> Result<f64> {
    regularized_gamma_pair(s, x).map(|(p, _)| p)
}

/// Q(s, x) = Γ(s, x) / Γ(s).
pub fn regularized_upper_gamma(s: f64, x: f64) -> Result<f64> {
    regularized_gamma_pair(s, x).map(|(_, q)| q)
}

/// Successive values 1/Γ(c), 1/Γ(c+1), ... in sign/log form.
pub(crate) struct RecipGammaSeq {
    arg: f64,
    current: SignedLog,
}

impl RecipGammaSeq {
    pub(crate) fn new(c: f64) -> Self {
        Self {
            arg: c,
            current: recip_gamma(c),
        }
    }
}

impl Iterator for RecipGammaSeq {
    type Item = SignedLog;

    fn next(&mut self) -> Option<SignedLog> {
        let out = self.current;
        let arg = self.arg;
        self.arg += 1.0;
        // 1/Γ(x+1) = (1/Γ(x)) / x; restart from the table after a pole.
        self.current = if out.is_zero() || arg == 0.0 {
            recip_gamma(self.arg)
        } else {
            out / SignedLog::from_f64(arg)
        };
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ulps(a: f64, b: f64) -> f64 {
        (a - b).abs() / (f64::EPSILON * b.abs())
    }

    #[test]
    fn log_gamma_trivial_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-15);
        assert!((log_gamma(0.5).unwrap() - PI.sqrt().ln()).abs() < 5e-15);
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn log_gamma_half_integer_matches_euler_integral() {
        // Γ(1/2) = 2 ∫_0^∞ e^{-u²} du, trapezoid rule on a wide window is
        // spectrally accurate for this integrand.
        let h = 1e-3;
        let n = 10_000;
        let mut sum = 0.5;
        for k in 1..=n {
            let u = k as f64 * h;
            sum += (-u * u).exp();
        }
        let gamma_half = 2.0 * h * sum;
        assert!((log_gamma(0.5).unwrap() - gamma_half.ln()).abs() < 1e-14);
    }

    #[test]
    fn factorial_table_is_correctly_rounded() {
        let mut exact: u128 = 1;
        for n in 1..=34u32 {
            exact *= u128::from(n);
            assert_eq!(factorial(n as usize), exact as f64, "{n}!");
            assert_eq!(gamma(f64::from(n) + 1.0).unwrap(), exact as f64);
        }
        for n in 2..=170usize {
            let ratio = factorial(n) / factorial(n - 1);
            assert!(ulps(ratio, n as f64) <= 4.0, "{n}");
        }
    }

    #[test]
    fn exponentiated_log_gamma_tracks_factorial() {
        // exp amplifies the rounding of ln Γ by |ln Γ|, so small arguments
        // meet 4 ulp and large ones stay within that amplification.
        for n in 1..=170usize {
            let lg = log_gamma(n as f64 + 1.0).unwrap();
            let err = ulps(lg.exp(), factorial(n));
            let bound = 4.0f64.max(2.0 * lg.abs());
            assert!(err <= bound, "{n}: {err} ulp");
        }
        for n in 1..=8usize {
            assert!(ulps(log_gamma(n as f64 + 1.0).unwrap().exp(), factorial(n)) <= 4.0);
        }
    }

    #[test]
    fn stirling_and_shift_agree_with_recurrence() {
        for &x in &[0.1, 0.7, 1.3, 3.3, 9.99, 10.01, 25.5, 140.2] {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + f64::ln(x);
            assert!((lhs - rhs).abs() < 4e-15 * lhs.abs().max(1.0), "{x}");
        }
    }

    #[test]
    fn reflection_for_negative_arguments() {
        // Γ(-0.5) = -2√π
        let g = gamma(-0.5).unwrap();
        assert!((g + 2.0 * PI.sqrt()).abs() < 1e-14);
        // Γ(-1.5) = 4√π/3
        assert!((gamma(-1.5).unwrap() - 4.0 * PI.sqrt() / 3.0).abs() < 1e-14);
        assert!(gamma(-2.0).is_err());
        assert!(recip_gamma(-3.0).is_zero());
        assert!(recip_gamma(0.0).is_zero());
    }

    #[test]
    fn recip_gamma_sequence_crosses_poles() {
        let seq: Vec<f64> = RecipGammaSeq::new(-2.0).take(6).map(|v| v.to_f64()).collect();
        assert_eq!(&seq[..3], &[0.0, 0.0, 0.0]);
        assert_eq!(seq[3], 1.0);
        assert_eq!(seq[4], 1.0);
        assert!((seq[5] - 0.5).abs() < 1e-16);

        let seq: Vec<f64> = RecipGammaSeq::new(-1.5).take(5).map(|v| v.to_f64()).collect();
        for (n, v) in seq.iter().enumerate() {
            let expected = 1.0 / gamma(-1.5 + n as f64).unwrap();
            assert!((v - expected).abs() < 1e-14 * expected.abs(), "{n}");
        }
    }

    #[test]
    fn lower_gamma_trivial_values() {
        for &x in &[0.0, 0.1, 1.0, 3.7, 40.0] {
            let p = regularized_lower_gamma(1.0, x).unwrap();
            assert!((p - (1.0 - (-x).exp())).abs() < 1e-15);
        }
        assert_eq!(regularized_lower_gamma(2.5, 0.0).unwrap(), 0.0);
        assert!(regularized_lower_gamma(0.0, 1.0).is_err());
        assert!(regularized_lower_gamma(1.0, -1.0).is_err());
    }

    #[test]
    fn lower_gamma_matches_poisson_tail_series() {
        // P(s, x) = Σ_k e^{-x} x^{s+k} / Γ(s+k+1), summed independently.
        fn oracle(s: f64, x: f64) -> f64 {
            let mut t = (-x + s * x.ln() - log_gamma(s + 1.0).unwrap()).exp();
            let mut sum = 0.0;
            for k in 0..2000 {
                sum += t;
                t *= x / (s + k as f64 + 1.0);
                if t < 1e-18 * sum {
                    break;
                }
            }
            sum
        }
        let p = regularized_lower_gamma(3.0, 2.0).unwrap();
        assert!((p - oracle(3.0, 2.0)).abs() < 1e-14);
        assert!((p - (1.0 - 5.0 * (-2.0f64).exp())).abs() < 1e-15);
        for &(s, x) in &[(0.5, 0.3), (2.5, 7.0), (12.0, 3.0), (40.0, 55.0)] {
            let p = regularized_lower_gamma(s, x).unwrap();
            let o = oracle(s, x);
            assert!((p - o).abs() < 1e-13 * o, "{s} {x}: {p} vs {o}");
        }
    }

    #[test]
    fn upper_gamma_tail_keeps_relative_accuracy() {
        // Q(n, x) = e^{-x} Σ_{j<n} x^j / j! for integer n
        for &(n, x) in &[(1usize, 60.0), (3, 45.0), (10, 200.0)] {
            let q = regularized_upper_gamma(n as f64, x).unwrap();
            let o: f64 = (0..n)
                .map(|j| (-x + j as f64 * f64::ln(x) - ln_factorial(j)).exp())
                .sum();
            assert!((q - o).abs() < 1e-12 * o, "{n} {x}");
        }
    }

    #[test]
    fn lower_gamma_is_monotone_in_x() {
        for &s in &[0.3, 1.0, 4.0, 17.5] {
            let mut prev = 0.0;
            for k in 0..400 {
                let x = k as f64 * 0.1;
                let p = regularized_lower_gamma(s, x).unwrap();
                assert!(p >= prev, "s={s} x={x}");
                assert!((0.0..=1.0).contains(&p));
                prev = p;
            }
            assert!(regularized_lower_gamma(s, 500.0).unwrap() > 1.0 - 1e-15);
        }
    }
}
