//! Minimal polynomials of square matrices.
//!
//! Two routes are provided. [`min_poly_krylov`] works over the rationals:
//! for each unit vector it extends the Krylov sequence `v, Mv, M^2 v, ...`
//! until the first exact linear dependency and takes the least common
//! multiple of the resulting vector minimal polynomials.
//!
//! [`min_poly_integer`] handles integer matrices: the same Krylov/lcm
//! computation runs modulo several word-sized primes, the integer
//! coefficients are recovered by Chinese remaindering, and the candidate `p`
//! is accepted only after `p(M) = 0` is checked in exact integer arithmetic.
//! Reduction mod a prime can only lower the degree of the minimal
//! polynomial, so a certified annihilator whose degree equals the largest
//! modular degree is the minimal polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::modular::{
    crt_symmetric, min_poly_mod, modulus_product, primes, Prime, SparseIntMatrix,
};
use super::{is_integer, RatMatrix, RatPoly, Rational};
use crate::error::ExactError;

fn check_square(m: &RatMatrix) -> Result<(), ExactError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Minimal polynomial of `m`. Integer matrices take the certified modular
/// route; anything else uses exact rational Krylov sequences.
pub fn min_poly(m: &RatMatrix) -> Result<RatPoly, ExactError> {
    match min_poly_integer(m)? {
        Some(p) => Ok(p),
        None => min_poly_krylov(m),
    }
}

/// Minimal polynomial over the rationals via unit-vector Krylov sequences.
pub fn min_poly_krylov(m: &RatMatrix) -> Result<RatPoly, ExactError> {
    check_square(m)?;
    let n = m.rows();
    let mut acc = RatPoly::one();
    for j in 0..n {
        if annihilates_unit_vector(&acc, m, j) {
            continue;
        }
        let local = vector_min_poly(m, j);
        acc = acc.lcm(&local);
    }
    Ok(acc)
}

fn annihilates_unit_vector(p: &RatPoly, m: &RatMatrix, j: usize) -> bool {
    let n = m.rows();
    let mut w = vec![Rational::zero(); n];
    for c in p.coeffs().iter().rev() {
        w = m.mul_vec(&w);
        w[j] += c;
    }
    w.iter().all(Zero::is_zero)
}

/// Monic generator of `{ q : q(M) e_start = 0 }`.
fn vector_min_poly(m: &RatMatrix, start: usize) -> RatPoly {
    let n = m.rows();
    // reduced vectors with their pivot, and the Krylov combination they represent
    let mut basis: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut krylov = vec![Rational::zero(); n];
    krylov[start] = Rational::one();
    for i in 0..=n {
        let mut r = krylov.clone();
        let mut comb = vec![Rational::zero(); i + 1];
        comb[i] = Rational::one();
        for (piv, b, cb) in &basis {
            if r[*piv].is_zero() {
                continue;
            }
            let c = r[*piv].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(cb) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => return RatPoly::new(comb),
            Some(piv) => {
                let inv = r[piv].recip();
                r.iter_mut().for_each(|x| *x *= &inv);
                comb.iter_mut().for_each(|x| *x *= &inv);
                basis.push((piv, r, comb));
            }
        }
        krylov = m.mul_vec(&krylov);
    }
    unreachable!("more than n independent Krylov vectors in dimension n")
}

/// Certified minimal polynomial of an integer matrix.
///
/// Returns `Ok(None)` when some entry is not an integer.
pub fn min_poly_integer(m: &RatMatrix) -> Result<Option<RatPoly>, ExactError> {
    check_square(m)?;
    if !m.entries().iter().all(is_integer) {
        return Ok(None);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Some(RatPoly::one()));
    }
    let sparse = SparseIntMatrix {
        n,
        rows: (0..n)
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.numer().clone()))
                    .collect()
            })
            .collect(),
    };
    // |coefficient| <= (1 + rho)^deg, rho bounding every eigenvalue
    let bound = (sparse.norm_bound() + BigInt::one()).pow(n as u32);
    let needed = bound * BigInt::from(2u8);

    let mut best_degree = 0;
    let mut residues: Vec<Vec<u64>> = Vec::new();
    let mut moduli: Vec<u64> = Vec::new();
    let mut attempts = 0;
    for &q in primes() {
        let f = Prime(q);
        let poly = min_poly_mod(f, &sparse.reduce(f));
        let degree = poly.len() - 1;
        if degree < best_degree {
            continue;
        }
        if degree > best_degree {
            best_degree = degree;
            residues.clear();
            moduli.clear();
        }
        residues.push(poly);
        moduli.push(q);
        if modulus_product(&moduli) <= needed {
            continue;
        }
        let coeffs: Vec<BigInt> = (0..=best_degree)
            .map(|k| {
                let rs: Vec<u64> = residues.iter().map(|r| r[k]).collect();
                crt_symmetric(&rs, &moduli)
            })
            .collect();
        if sparse.annihilated_by(&coeffs) {
            return Ok(Some(RatPoly::new(
                coeffs.into_iter().map(Rational::from_integer).collect(),
            )));
        }
        attempts += 1;
        if attempts >= 4 {
            break;
        }
    }
    // every prime tried was unlucky; fall back to the rational route
    min_poly_krylov(m).map(Some)
}

/// Matrix of `op` restricted to the column span of `basis`, in the
/// coordinates of those columns: the unique `C` with `op * basis = basis * C`.
///
/// Fails with [`ExactError::NotInvariant`] when the span is not mapped into
/// itself. `basis` must have independent columns.
pub fn restrict_to_invariant_subspace(
    op: &RatMatrix,
    basis: &RatMatrix,
) -> Result<RatMatrix, ExactError> {
    check_square(op)?;
    if basis.rows() != op.rows() {
        return Err(ExactError::Dimension(format!(
            "basis has {} rows, operator is {}x{}",
            basis.rows(),
            op.rows(),
            op.cols()
        )));
    }
    let k = basis.cols();
    let image = op.mul(basis);
    let (r, pivots) = basis.hstack(&image).rref();
    let independent = pivots.len() >= k && pivots[..k].iter().copied().eq(0..k);
    if !independent {
        return Err(ExactError::Dimension("basis columns are dependent".into()));
    }
    if pivots.len() > k {
        return Err(ExactError::NotInvariant);
    }
    Ok(RatMatrix::from_fn(k, k, |i, j| r[(i, k + j)].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn zero_matrix_has_min_poly_x() {
        let z = RatMatrix::zeros(2, 2);
        assert_eq!(min_poly(&z).unwrap(), RatPoly::x());
        assert_eq!(min_poly_krylov(&z).unwrap(), RatPoly::x());
    }

    #[test]
    fn identity_and_empty() {
        assert_eq!(
            min_poly(&RatMatrix::identity(3)).unwrap(),
            RatPoly::from_i64(&[-1, 1])
        );
        assert_eq!(min_poly(&RatMatrix::zeros(0, 0)).unwrap(), RatPoly::one());
        assert_eq!(
            min_poly_krylov(&RatMatrix::zeros(0, 0)).unwrap(),
            RatPoly::one()
        );
    }

    #[test]
    fn non_square_rejected() {
        let m = RatMatrix::zeros(2, 3);
        assert_eq!(
            min_poly(&m),
            Err(ExactError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn jordan_block_is_not_squarefree() {
        // diag(J_2(3), 3, -1): minimal polynomial (x-3)^2 (x+1)
        let m = RatMatrix::from_i64_rows(&[
            vec![3, 1, 0, 0],
            vec![0, 3, 0, 0],
            vec![0, 0, 3, 0],
            vec![0, 0, 0, -1],
        ]);
        let expected = RatPoly::from_i64(&[-3, 1])
            .pow(2)
            .mul(&RatPoly::from_i64(&[1, 1]));
        assert_eq!(min_poly(&m).unwrap(), expected);
        assert_eq!(min_poly_krylov(&m).unwrap(), expected);
    }

    #[test]
    fn rational_entries_use_krylov() {
        let m = RatMatrix::from_fn(2, 2, |i, j| if i == j { ratio(1, 2) } else { rat(0) });
        assert_eq!(min_poly_integer(&m).unwrap(), None);
        assert_eq!(
            min_poly(&m).unwrap(),
            RatPoly::new(vec![ratio(-1, 2), rat(1)])
        );
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        // swap matrix restricted to span{(1,1)} is [1]; span{(1,0)} is not invariant
        let p = RatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let v = RatMatrix::from_i64_rows(&[vec![1], vec![1]]);
        assert_eq!(
            restrict_to_invariant_subspace(&p, &v).unwrap(),
            RatMatrix::from_i64_rows(&[vec![1]])
        );
        let e = RatMatrix::from_i64_rows(&[vec![1], vec![0]]);
        assert_eq!(
            restrict_to_invariant_subspace(&p, &e),
            Err(ExactError::NotInvariant)
        );
    }
}
