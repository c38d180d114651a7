//! Arithmetic modulo word-sized primes, used to compute candidate minimal
//! polynomials of integer matrices quickly before certifying them exactly.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Prime(pub u64);

impl Prime {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.0 - 2)
    }

    pub fn reduce(self, x: &BigInt) -> u64 {
        let q = BigInt::from(self.0);
        let r = x.mod_floor(&q);
        r.try_into().expect("residue fits in u64")
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let f = Prime(n);
    'witness: for &a in &WITNESSES {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let mut c = (1u64 << 62) - 1;
        while out.len() < 64 {
            if is_prime_u64(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

/// Polynomials over F_p, ascending coefficients, no trailing zeros.
pub(crate) mod fp_poly {
    use super::Prime;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn monic(f: Prime, a: &[u64]) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = f.inv(lc);
                a.iter().map(|&c| f.mul(c, inv)).collect()
            }
        }
    }

    pub fn mul(f: Prime, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn div_rem(f: Prime, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let blen = b.len();
        assert!(blen > 0, "division by zero polynomial");
        if a.len() < blen {
            return (Vec::new(), a.to_vec());
        }
        let inv = f.inv(b[blen - 1]);
        let mut rem = a.to_vec();
        let mut quot = vec![0; a.len() - blen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + blen - 1];
            if top == 0 {
                continue;
            }
            let c = f.mul(top, inv);
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, bj));
            }
            quot[k] = c;
        }
        rem.truncate(blen - 1);
        (trim(quot), trim(rem))
    }

    pub fn gcd(f: Prime, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (monic(f, a), monic(f, b));
        while !b.is_empty() {
            let (_, r) = div_rem(f, &a, &b);
            a = b;
            b = monic(f, &r);
        }
        a
    }

    pub fn lcm(f: Prime, a: &[u64], b: &[u64]) -> Vec<u64> {
        let g = gcd(f, a, b);
        let (q, _) = div_rem(f, &monic(f, a), &g);
        mul(f, &q, &monic(f, b))
    }
}

/// Sparse integer matrix, rows of `(column, value)`.
pub(crate) struct SparseIntMatrix {
    pub n: usize,
    pub rows: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    /// `min(max row sum, max column sum)` of absolute values; bounds every
    /// eigenvalue in modulus.
    pub fn norm_bound(&self) -> BigInt {
        let mut col_sums = vec![BigInt::zero(); self.n];
        let mut row_max = BigInt::zero();
        for row in &self.rows {
            let mut s = BigInt::zero();
            for (j, v) in row {
                let a = if v < &BigInt::zero() { -v } else { v.clone() };
                col_sums[*j] += &a;
                s += a;
            }
            row_max = row_max.max(s);
        }
        let col_max = col_sums.into_iter().max().unwrap_or_default();
        row_max.min(col_max)
    }

    pub fn reduce(&self, f: Prime) -> Vec<Vec<(usize, u64)>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(j, v)| (*j, f.reduce(v)))
                    .filter(|&(_, v)| v != 0)
                    .collect()
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .fold(BigInt::zero(), |acc, (j, a)| acc + a * &v[*j])
            })
            .collect()
    }

    /// Exact test of `p(M) = 0`, column by column.
    pub fn annihilated_by(&self, p: &[BigInt]) -> bool {
        (0..self.n).all(|j| {
            let mut w = vec![BigInt::zero(); self.n];
            for c in p.iter().rev() {
                w = self.mul_vec(&w);
                w[j] += c;
            }
            w.iter().all(Zero::is_zero)
        })
    }
}

fn mul_vec_mod(f: Prime, rows: &[Vec<(usize, u64)>], v: &[u64]) -> Vec<u64> {
    rows.iter()
        .map(|row| {
            row.iter()
                .fold(0, |acc, &(j, a)| f.add(acc, f.mul(a, v[j])))
        })
        .collect()
}

/// Minimal polynomial of the unit vector `e_start` under `rows` over F_p:
/// Krylov vectors are reduced incrementally until the first dependency.
fn local_min_poly_mod(f: Prime, rows: &[Vec<(usize, u64)>], start: usize) -> Vec<u64> {
    let n = rows.len();
    let mut basis: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut krylov = vec![0; n];
    krylov[start] = 1;
    for i in 0..=n {
        let mut r = krylov.clone();
        let mut comb = vec![0; i + 1];
        comb[i] = 1;
        for (piv, b, cb) in &basis {
            let c = r[*piv];
            if c == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(b) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in comb.iter_mut().zip(cb) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        match r.iter().position(|&x| x != 0) {
            None => return comb,
            Some(piv) => {
                let inv = f.inv(r[piv]);
                r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((piv, r, comb));
            }
        }
        krylov = mul_vec_mod(f, rows, &krylov);
    }
    unreachable!("more than n independent Krylov vectors in dimension n")
}

/// Minimal polynomial of the whole matrix over F_p: least common multiple of
/// the unit-vector minimal polynomials, skipping vectors already annihilated.
pub(crate) fn min_poly_mod(f: Prime, rows: &[Vec<(usize, u64)>]) -> Vec<u64> {
    let n = rows.len();
    let mut acc = vec![1u64];
    for j in 0..n {
        let mut w = vec![0; n];
        for &c in acc.iter().rev() {
            w = mul_vec_mod(f, rows, &w);
            w[j] = f.add(w[j], c);
        }
        if w.iter().all(|&x| x == 0) {
            continue;
        }
        let local = local_min_poly_mod(f, rows, j);
        acc = fp_poly::lcm(f, &acc, &local);
    }
    acc
}

/// Chinese remaindering into the symmetric range `(-Q/2, Q/2]`.
pub(crate) fn crt_symmetric(residues: &[u64], moduli: &[u64]) -> BigInt {
    let mut x = BigInt::from(residues[0]);
    let mut q = BigInt::from(moduli[0]);
    for (&r, &p) in residues.iter().zip(moduli).skip(1) {
        let f = Prime(p);
        let xm = f.reduce(&x);
        let qm = f.reduce(&q);
        let t = f.mul(f.sub(r, xm), f.inv(qm));
        x += &q * BigInt::from(t);
        q *= BigInt::from(p);
    }
    let half: BigInt = &q >> 1usize;
    if x > half {
        x -= q;
    }
    x
}

/// Product of the moduli.
pub(crate) fn modulus_product(moduli: &[u64]) -> BigInt {
    moduli
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * BigInt::from(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_descending() {
        let ps = primes();
        assert_eq!(ps[0], 4_611_686_018_427_387_847);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn crt_recovers_negative_values() {
        let ps = &primes()[..3];
        let x = -BigInt::from(3u8).pow(100);
        let residues: Vec<u64> = ps.iter().map(|&p| Prime(p).reduce(&x)).collect();
        assert_eq!(crt_symmetric(&residues, ps), x);
    }

    #[test]
    fn fp_gcd() {
        let f = Prime(101);
        // (x+1)(x+2) and (x+1)(x+3)
        let a = fp_poly::mul(f, &[1, 1], &[2, 1]);
        let b = fp_poly::mul(f, &[1, 1], &[3, 1]);
        assert_eq!(fp_poly::gcd(f, &a, &b), vec![1, 1]);
        assert_eq!(fp_poly::lcm(f, &a, &b).len(), 4);
    }
}
