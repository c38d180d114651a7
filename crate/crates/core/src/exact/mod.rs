//! Exact rational linear algebra and univariate polynomials.

mod matrix;
mod minpoly;
mod modular;
mod poly;

pub use matrix::{rank_and_kernel, RatMatrix};
pub use minpoly::{min_poly, min_poly_integer, min_poly_krylov, restrict_to_invariant_subspace};
pub use poly::{poly_divides, squarefree_analysis, RatPoly, SquarefreeAnalysis};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serializer;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form `num/den`, with `den >= 1` always written out.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn serialize_rational_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        let q = ratio(-6, 4);
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5/1");
        assert_eq!(parse_rational("-3/2"), Some(q));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
