//! Exact integer polynomials and a division-free characteristic polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficients from the leading term down to the constant term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Strips leading zeros; the zero polynomial keeps a single `0`.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len().saturating_sub(1));
        coeffs.drain(..lead);
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        if k > self.degree() {
            BigInt::zero()
        } else {
            self.coeffs[self.degree() - k].clone()
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    /// Writes e.g. `x^12 - 36x^10 + 768x^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = d - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError(pub String);

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse polynomial {:?}", self.0)
    }
}

impl std::error::Error for PolyParseError {}

impl FromStr for IntPolynomial {
    type Err = PolyParseError;

    /// Parses sums of terms `c`, `cx`, `cx^k` in the variable `x`, with or
    /// without spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PolyParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut by_power: Vec<(usize, BigInt)> = Vec::new();
        for t in terms {
            let (neg, body) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t),
            };
            let (coef, power) = match body.find('x') {
                None => (body.parse::<BigInt>().map_err(|_| err())?, 0),
                Some(p) => {
                    let c = if p == 0 { BigInt::one() } else { body[..p].parse::<BigInt>().map_err(|_| err())? };
                    let rest = &body[p + 1..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse::<usize>().map_err(|_| err())?
                    };
                    (c, k)
                }
            };
            by_power.push((power, if neg { -coef } else { coef }));
        }
        let d = by_power.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (k, c) in by_power {
            coeffs[d - k] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

/// `det(xI - A)` by Berkowitz's algorithm: only ring operations, so the
/// result is exact over the integers.
pub fn char_poly_matrix(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    if n == 0 {
        return IntPolynomial::from_i64(&[1]);
    }
    let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    // char poly of the leading 1x1 block
    let mut vect: Vec<BigInt> = vec![BigInt::one(), -big[0][0].clone()];
    for r in 1..n {
        // first column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ...
        let row: Vec<BigInt> = big[r][..r].to_vec();
        let mut col: Vec<BigInt> = (0..r).map(|i| big[i][r].clone()).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-big[r][r].clone());
        for _ in 0..r {
            let dot: BigInt = row.iter().zip(&col).map(|(x, y)| x * y).sum();
            t.push(-dot);
            col = (0..r).map(|i| (0..r).map(|j| &big[i][j] * &col[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate() {
                if i >= j {
                    *slot += &t[i - j] * v;
                }
            }
        }
        vect = next;
    }
    IntPolynomial::new(vect)
}
