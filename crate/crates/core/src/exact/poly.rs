use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{format_rational, rat, RatMatrix, Rational};
use crate::error::ExactError;

/// Univariate polynomial over the rationals, coefficients in ascending degree
/// with trailing zeros stripped. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Integer coefficients in ascending degree order.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Integer coefficients in descending degree order (`[1, 1, 2]` is `x^2 + x + 2`).
    pub fn from_i64_desc(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: Rational) -> Self {
        Self::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let dlead = divisor.leading().ok_or(ExactError::ZeroPolynomial)?;
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = dlead.recip();
        let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let f = top * &inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &f * d;
            }
            quot[k] = f;
        }
        rem.truncate(dlen - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.monic().div_rem(&g).expect("gcd is nonzero");
        q.mul(&other.monic())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if !m.is_square() {
            return Err(ExactError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }
}

/// `true` iff `q` divides `p` exactly.
pub fn poly_divides(q: &RatPoly, p: &RatPoly) -> Result<bool, ExactError> {
    let (_, r) = p.div_rem(q)?;
    Ok(r.is_zero())
}

/// Result of [`squarefree_analysis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeAnalysis {
    pub is_squarefree: bool,
    /// Monic `gcd(p, p')`; an irreducible `q` divides it iff `q^2` divides `p`.
    pub repeated_part: RatPoly,
}

pub fn squarefree_analysis(p: &RatPoly) -> Result<SquarefreeAnalysis, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let p = p.monic();
    let repeated_part = p.gcd(&p.derivative());
    Ok(SquarefreeAnalysis {
        is_squarefree: repeated_part.is_one(),
        repeated_part,
    })
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64(c)
    }

    #[test]
    fn trailing_zeros_stripped() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(RatPoly::from_i64_desc(&[1, 1, 2]), p(&[2, 1, 1]));
    }

    #[test]
    fn division_and_divisibility() {
        let x2m1 = p(&[-1, 0, 1]);
        assert!(poly_divides(&p(&[-1, 1]), &x2m1).unwrap());
        assert!(!poly_divides(&p(&[2, 0, 1]), &p(&[2, 1, 1])).unwrap());
        assert_eq!(
            poly_divides(&RatPoly::zero(), &x2m1),
            Err(ExactError::ZeroPolynomial)
        );
        let (q, r) = p(&[1, 2, 3, 4]).div_rem(&p(&[1, 2])).unwrap();
        assert_eq!(q.mul(&p(&[1, 2])).add(&r), p(&[1, 2, 3, 4]));
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = p(&[-1, 1]).mul(&p(&[2, 0, 1]));
        let b = p(&[2, 0, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[2, 0, 1]));
        let l = a.lcm(&b);
        assert_eq!(l, p(&[-1, 1]).mul(&p(&[2, 0, 1])).mul(&p(&[3, 1])));
        assert_eq!(p(&[0, 2]).gcd(&RatPoly::zero()), RatPoly::x());
    }

    #[test]
    fn squarefree_examples() {
        let s = squarefree_analysis(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert!(s.is_squarefree);
        assert!(s.repeated_part.is_one());
        let s = squarefree_analysis(&p(&[0, 0, 1])).unwrap();
        assert!(!s.is_squarefree);
        assert_eq!(s.repeated_part, RatPoly::x());
        assert_eq!(
            squarefree_analysis(&RatPoly::zero()),
            Err(ExactError::ZeroPolynomial)
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 1, 1]).to_string(), "x^2 + x + 2");
        assert_eq!(p(&[-1, 0, 0, 0, 1]).to_string(), "x^4 - 1");
        assert_eq!(
            RatPoly::new(vec![ratio(1, 2), rat(-3)]).to_string(),
            "-3x + 1/2"
        );
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn matrix_evaluation() {
        // [[0,1],[0,0]] is nilpotent of index 2
        let n = RatMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]);
        assert!(!RatPoly::x().eval_matrix(&n).unwrap().is_zero());
        assert!(p(&[0, 0, 1]).eval_matrix(&n).unwrap().is_zero());
        assert_eq!(p(&[1, 2, 3]).eval(&rat(2)), rat(17));
    }
}
