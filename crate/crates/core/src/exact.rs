//! Exact arithmetic helpers: determinant signs over integers and rationals,
//! and lossless parsing/printing of decimal and fractional literals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::sign::DetSign;

/// Exact determinant sign of a square integer matrix.
///
/// Runs fraction-free (Bareiss) elimination in `i128` and falls back to
/// big integers if any intermediate product overflows.
pub fn det_sign_i64(matrix: &[Vec<i64>]) -> DetSign {
    let n = matrix.len();
    debug_assert!(matrix.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    match bareiss_i128(&mut m) {
        Some(d) => DetSign::of_i128(d),
        None => {
            let big: Vec<Vec<BigInt>> = matrix
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            DetSign::of_bigint(&bareiss_big(big))
        }
    }
}

fn bareiss_i128(m: &mut [Vec<i128>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Some(0);
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let d = m[n - 1][n - 1];
    Some(if negate { -d } else { d })
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a square rational matrix.
///
/// Each column is scaled by the (positive) lcm of its denominators, the
/// resulting integer determinant is computed fraction-free, and the scale is
/// divided back out.
pub fn det_rational(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut scale = BigInt::one();
    let mut ints = vec![vec![BigInt::zero(); n]; n];
    for col in 0..n {
        let lcm = (0..n).fold(BigInt::one(), |acc, row| acc.lcm(matrix[row][col].denom()));
        for row in 0..n {
            let v = &matrix[row][col];
            ints[row][col] = v.numer() * (&lcm / v.denom());
        }
        scale *= lcm;
    }
    BigRational::new(bareiss_big(ints), scale)
}

pub fn det_sign_rational(matrix: &[Vec<BigRational>]) -> DetSign {
    DetSign::of_rational(&det_rational(matrix))
}

/// Parses `-12`, `3.25`, `1e-3`, `-4.5E2` or `7/3` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all.is_empty() {
        BigInt::zero()
    } else {
        all.parse().ok()?
    };
    if negative {
        numer = -numer;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let value = if shift >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-shift) as usize))
    };
    Some(value)
}

/// Renders `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

impl DetSign {
    pub fn of_i128(v: i128) -> Self {
        match v.signum() {
            1 => DetSign::Pos,
            -1 => DetSign::Neg,
            _ => DetSign::Zero,
        }
    }

    pub fn of_bigint(v: &BigInt) -> Self {
        match v.sign() {
            Sign::Plus => DetSign::Pos,
            Sign::Minus => DetSign::Neg,
            Sign::NoSign => DetSign::Zero,
        }
    }

    pub fn of_rational(v: &BigRational) -> Self {
        if v.is_positive() {
            DetSign::Pos
        } else if v.is_negative() {
            DetSign::Neg
        } else {
            DetSign::Zero
        }
    }
}
